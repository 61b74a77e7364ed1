"""Undirected simple graphs on dense integer vertex ids."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Raised for malformed graphs or invalid graph operations."""


class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    Adjacency is held as one frozenset per vertex, so membership tests are
    O(1). ``meta`` carries optional generator information (for instance the
    clique/stable partition of a split graph); it does not take part in
    equality.
    """

    __slots__ = ("_adj", "meta")

    def __init__(self, adj: Iterable[Iterable[int]], meta: Mapping | None = None):
        self._adj = tuple(frozenset(nbrs) for nbrs in adj)
        self.meta = dict(meta or {})

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return self._adj

    @property
    def vertices(self) -> range:
        return range(len(self._adj))

    def neighbors(self, v: int) -> frozenset[int]:
        self._require(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in self.vertices for v in sorted(self._adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def validate(self) -> None:
        """Check the simple-graph invariants, raising GraphError on violation."""
        for v, nbrs in enumerate(self._adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {v} has out-of-range neighbor {u}")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if v not in self._adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def _require(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"unknown vertex {v!r} (graph has {self.n} vertices)")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]], meta: Mapping | None = None) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(adj, meta)


def complement(g: Graph) -> Graph:
    everyone = frozenset(g.vertices)
    return Graph(everyone - nbrs - {v} for v, nbrs in enumerate(g.adj))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep``, relabelled densely in increasing id order.

    Returns the subgraph and the old-id to new-id map.
    """
    kept = sorted(set(keep))
    for v in kept:
        g._require(v)
    remap = {old: new for new, old in enumerate(kept)}
    adj = [{remap[u] for u in g.adj[old] if u in remap} for old in kept]
    return Graph(adj), remap


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(v in g.adj[u] for u, v in combinations(vs, 2))


# --- topology changes ------------------------------------------------------


@dataclass(frozen=True)
class AddVertex:
    neighbors: tuple[int, ...] = ()


@dataclass(frozen=True)
class RemoveVertex:
    v: int


@dataclass(frozen=True)
class AddEdge:
    u: int
    v: int


@dataclass(frozen=True)
class RemoveEdge:
    u: int
    v: int


GraphChange = AddVertex | RemoveVertex | AddEdge | RemoveEdge


@dataclass
class ChangeResult:
    """Outcome of :func:`apply_change`.

    ``remap`` sends every surviving old vertex id to its id in ``graph``.
    A vertex created by AddVertex is ``added`` and has no entry in ``remap``.
    """

    graph: Graph
    remap: dict[int, int]
    added: int | None = None
    removed: int | None = None
    touched: frozenset[int] = field(default_factory=frozenset)


def apply_change(g: Graph, change: GraphChange) -> ChangeResult:
    """Apply one topology change and return the new graph.

    RemoveVertex keeps ids dense: the last vertex moves into the freed slot.
    ``touched`` lists (new) ids of vertices whose neighborhood changed.
    """
    n = g.n
    adj = [set(a) for a in g.adj]
    identity = {v: v for v in range(n)}

    if isinstance(change, AddEdge):
        u, v = change.u, change.v
        g._require(u)
        g._require(v)
        if u == v:
            raise GraphError(f"cannot add self-loop at {u}")
        if v in adj[u]:
            raise GraphError(f"edge ({u}, {v}) already present")
        adj[u].add(v)
        adj[v].add(u)
        return ChangeResult(Graph(adj, g.meta), identity, touched=frozenset((u, v)))

    if isinstance(change, RemoveEdge):
        u, v = change.u, change.v
        g._require(u)
        g._require(v)
        if v not in adj[u]:
            raise GraphError(f"edge ({u}, {v}) not present")
        adj[u].discard(v)
        adj[v].discard(u)
        return ChangeResult(Graph(adj, g.meta), identity, touched=frozenset((u, v)))

    if isinstance(change, AddVertex):
        nbrs = set(change.neighbors)
        if len(nbrs) != len(change.neighbors):
            raise GraphError("duplicate neighbor in AddVertex")
        for u in nbrs:
            g._require(u)
        adj.append(nbrs)
        for u in nbrs:
            adj[u].add(n)
        return ChangeResult(Graph(adj), identity, added=n, touched=frozenset(nbrs | {n}))

    if isinstance(change, RemoveVertex):
        x = change.v
        g._require(x)
        last = n - 1
        former = adj[x]
        for u in former:
            adj[u].discard(x)
        remap = {v: v for v in range(n) if v != x}
        if x != last:
            # last vertex takes over slot x
            moved = adj[last]
            adj[x] = moved
            for u in moved:
                adj[u].discard(last)
                adj[u].add(x)
            remap[last] = x
        adj.pop()
        touched = frozenset(remap[u] for u in former)
        return ChangeResult(Graph(adj), remap, removed=x, touched=touched)

    raise GraphError(f"unknown change {change!r}")
