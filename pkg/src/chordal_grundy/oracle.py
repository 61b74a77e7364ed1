"""Exponential-time exact computations for small graphs.

Everything here is ground truth for the fast routines and must not be used
by them. Each entry point refuses graphs above its configured cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .coloring import Coloring, first_fit_color, is_grundy_coloring
from .graph import Graph


@dataclass(frozen=True)
class OracleLimits:
    max_n_orderings: int = 9
    max_n_subsets: int = 20
    max_n_coloring: int = 12
    max_n_enumeration: int = 6

    def __post_init__(self):
        for name in ("max_n_orderings", "max_n_subsets", "max_n_coloring", "max_n_enumeration"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    def with_cap(self, cap: int) -> "OracleLimits":
        """Same limits with the ordering cap replaced (the ``--cap-n`` knob)."""
        return OracleLimits(cap, self.max_n_subsets, max(self.max_n_coloring, cap), self.max_n_enumeration)


class OracleCapExceeded(ValueError):
    def __init__(self, cap_name: str, cap: int, n: int):
        self.cap_name = cap_name
        self.cap = cap
        self.n = n
        super().__init__(f"graph has {n} vertices, above oracle cap {cap_name}={cap}")


DEFAULT_LIMITS = OracleLimits()


def _guard(g: Graph, limits: OracleLimits | None, cap_name: str) -> None:
    cap = getattr(limits or DEFAULT_LIMITS, cap_name)
    if g.n > cap:
        raise OracleCapExceeded(cap_name, cap, g.n)


def grundy_number_exact(
    g: Graph, limits: OracleLimits | None = None, prune: bool = True
) -> tuple[int, tuple[int, ...]]:
    """Largest color count of first-fit over every vertex ordering.

    Returns ``(gamma, order)`` where ``order`` is the lexicographically
    smallest ordering attaining ``gamma``. With ``prune`` the search merges
    orderings whose prefixes leave the same partial coloring; without it
    every permutation is tried.
    """
    _guard(g, limits, "max_n_orderings")
    n = g.n
    if n == 0:
        return 0, ()
    if not prune:
        best, witness = 0, ()
        for order in permutations(range(n)):
            used = first_fit_color(g, order).used_colors
            if used > best:
                best, witness = used, order
        return best, witness

    adj = g.adj
    memo: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}

    # state: tuple of colors, 0 = not yet colored. First-fit's future only
    # depends on the current partial coloring, not on how it was reached.
    def search(state: tuple[int, ...], top: int) -> tuple[int, tuple[int, ...]]:
        if state in memo:
            return memo[state]
        best = (-1, ())
        for v in range(n):
            if state[v]:
                continue
            taken = {state[u] for u in adj[v]}
            c = 1
            while c in taken:
                c += 1
            child = state[:v] + (c,) + state[v + 1:]
            sub_best, suffix = search(child, max(top, c))
            if sub_best > best[0]:
                best = (sub_best, (v,) + suffix)
        if best[0] < 0:
            best = (top, ())
        memo[state] = best
        return best

    # `top` is the largest color in `state`, so it need not be part of the key
    return search((0,) * n, 0)


def enumerate_grundy_colorings(g: Graph, limits: OracleLimits | None = None) -> list[tuple[Coloring, int]]:
    """Every Grundy coloring of ``g`` with its color count, in lexicographic order.

    Built straight from the definition: all assignments with colors
    ``1..n`` are generated and filtered through :func:`is_grundy_coloring`.
    """
    _guard(g, limits, "max_n_enumeration")
    out = []
    for colors in product(range(1, g.n + 1), repeat=g.n):
        c = Coloring(colors)
        if is_grundy_coloring(g, c):
            out.append((c, c.used_colors))
    return out


def chromatic_number_exact(g: Graph, limits: OracleLimits | None = None) -> int:
    """Least k admitting a proper k-coloring, by backtracking from a clique lower bound."""
    _guard(g, limits, "max_n_coloring")
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    k = max(1, _greedy_clique_size(g))

    def colorable(k: int) -> bool:
        colors = [0] * n

        def place(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            taken = {colors[u] for u in adj[v]}
            # a fresh color is interchangeable with any other fresh one
            for c in range(1, min(used + 1, k) + 1):
                if c not in taken:
                    colors[v] = c
                    if place(i + 1, max(used, c)):
                        return True
            colors[v] = 0
            return False

        return place(0, 0)

    while not colorable(k):
        k += 1
    return k


def _greedy_clique_size(g: Graph) -> int:
    best = 0
    for v in g.vertices:
        clique = [v]
        for u in sorted(g.adj[v], key=lambda u: -len(g.adj[u])):
            if all(u in g.adj[w] for w in clique):
                clique.append(u)
        best = max(best, len(clique))
    return best


def independence_number_exact(g: Graph, limits: OracleLimits | None = None) -> int:
    """Size of a maximum stable set, by branching on a max-degree vertex."""
    _guard(g, limits, "max_n_subsets")
    adj = g.adj

    def solve(rest: frozenset[int]) -> int:
        if not rest:
            return 0
        v = max(rest, key=lambda x: (len(adj[x] & rest), -x))
        if not adj[v] & rest:
            # no edges left inside rest
            return len(rest)
        take = 1 + solve(rest - adj[v] - {v})
        skip = solve(rest - {v})
        return max(take, skip)

    return solve(frozenset(g.vertices))


def is_chordal_by_definition(g: Graph, limits: OracleLimits | None = None) -> bool:
    """True when no induced cycle of length four or more exists.

    Grows chordless paths from each start vertex ``s`` through vertices larger
    than ``s``; a path of at least three further vertices whose end returns to
    ``s`` without chords is a hole.
    """
    _guard(g, limits, "max_n_subsets")
    adj = g.adj

    def extend(s: int, path: list[int], on_path: set[int]) -> bool:
        last = path[-1]
        for w in adj[last]:
            if w <= s or w in on_path:
                continue
            # w may touch only `last` among interior vertices path[1:-1]
            if any(w in adj[p] for p in path[1:-1]):
                continue
            if s in adj[w]:
                if len(path) >= 3:
                    return True
                continue  # triangle s-path[1]-w
            path.append(w)
            on_path.add(w)
            if extend(s, path, on_path):
                return True
            path.pop()
            on_path.discard(w)
        return False

    for s in g.vertices:
        for a in adj[s]:
            if a > s and extend(s, [s, a], {s, a}):
                return False
    return True


def brute_force_clique_number(g: Graph, limits: OracleLimits | None = None) -> int:
    """Largest clique by subset enumeration, largest sizes first."""
    _guard(g, limits, "max_n_subsets")
    for size in range(g.n, 0, -1):
        for subset in combinations(g.vertices, size):
            if all(v in g.adj[u] for u, v in combinations(subset, 2)):
                return size
    return 0
