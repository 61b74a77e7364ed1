"""Simplicial vertices, perfect elimination orderings and chordality tests."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, complement


@dataclass(frozen=True)
class NotChordal:
    """Result of a failed peel: the residual vertices, none of them simplicial."""

    residual: frozenset[int]

    def __bool__(self) -> bool:
        return False


class NotChordalError(GraphError):
    def __init__(self, residual: frozenset[int] | None = None, message: str = "graph is not chordal"):
        self.residual = residual
        super().__init__(message)


def _neighborhood_is_clique(adj, nbrs) -> bool:
    # u itself is the only member of nbrs allowed outside adj[u]
    for u in nbrs:
        if len(nbrs) - 1 > len(adj[u]) or len(nbrs.difference(adj[u])) != 1:
            return False
    return True


def is_simplicial(g: Graph, v: int) -> bool:
    return _neighborhood_is_clique(g.adj, g.neighbors(v))


def simplicial_vertices(g: Graph) -> set[int]:
    return {v for v in g.vertices if _neighborhood_is_clique(g.adj, g.adj[v])}


def perfect_elimination_order(g: Graph) -> tuple[int, ...] | NotChordal:
    """Peel simplicial vertices one at a time, smallest id first.

    A vertex that is simplicial stays simplicial once others are removed, so
    only the non-simplicial neighbors of each eliminated vertex are
    re-examined. Returns the elimination order, or :class:`NotChordal`
    holding the residual vertex set if the peel gets stuck.
    """
    adj = [set(a) for a in g.adj]
    alive = [True] * g.n
    simplicial = [_neighborhood_is_clique(adj, adj[v]) for v in g.vertices]
    heap = [v for v in g.vertices if simplicial[v]]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        alive[v] = False
        for u in adj[v]:
            adj[u].discard(v)
        for u in adj[v]:
            if not simplicial[u] and _neighborhood_is_clique(adj, adj[u]):
                simplicial[u] = True
                heapq.heappush(heap, u)
        adj[v] = set()
    if len(order) < g.n:
        return NotChordal(frozenset(v for v in g.vertices if alive[v]))
    return tuple(order)


def simplicial_waves(g: Graph) -> list[list[int]]:
    """Eliminate every simplicial vertex of the residual graph at once, round by round.

    Each round's vertex list is sorted. Raises NotChordalError if a nonempty
    residual graph has no simplicial vertex.
    """
    adj = [set(a) for a in g.adj]
    remaining = set(g.vertices)
    waves = []
    while remaining:
        wave = sorted(v for v in remaining if _neighborhood_is_clique(adj, adj[v]))
        if not wave:
            raise NotChordalError(frozenset(remaining))
        for v in wave:
            for u in adj[v]:
                adj[u].discard(v)
            adj[v] = set()
            remaining.discard(v)
        waves.append(wave)
    return waves


def _check_permutation(g: Graph, order: Sequence[int]) -> None:
    if sorted(order) != list(g.vertices):
        raise GraphError(f"order is not a permutation of the {g.n} vertices")


def verify_peo(g: Graph, order: Sequence[int]) -> bool:
    _check_permutation(g, order)
    position = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = [u for u in g.adj[v] if position[u] > i]
        for a in later:
            for b in later:
                if a < b and b not in g.adj[a]:
                    return False
    return True


def is_chordal(g: Graph) -> bool:
    return not isinstance(perfect_elimination_order(g), NotChordal)


def is_split(g: Graph) -> bool:
    return is_chordal(g) and is_chordal(complement(g))


def max_clique_chordal(g: Graph) -> tuple[int, frozenset[int]]:
    """Clique number of a chordal graph with a witness clique.

    Every maximal clique is some vertex together with its later neighbors in a
    perfect elimination order, so the largest such set is a maximum clique.
    """
    order = perfect_elimination_order(g)
    if isinstance(order, NotChordal):
        raise NotChordalError(order.residual)
    if not order:
        return 0, frozenset()
    position = {v: i for i, v in enumerate(order)}
    best: frozenset[int] = frozenset()
    for i, v in enumerate(order):
        clique = frozenset(u for u in g.adj[v] if position[u] > i) | {v}
        if len(clique) > len(best):
            best = clique
    return len(best), best
