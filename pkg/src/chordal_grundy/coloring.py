"""First-fit and Grundy colorings, bound reports and incremental repair."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .chordal import NotChordal, NotChordalError, _check_permutation, perfect_elimination_order
from .graph import (
    AddEdge,
    AddVertex,
    Graph,
    GraphChange,
    GraphError,
    apply_change,
    complement,
    max_degree,
)

PEO = "peo"
REVERSE_PEO = "reverse_peo"


class ColoringError(GraphError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Colors indexed by vertex id; colors are positive integers."""

    colors: tuple[int, ...]

    @property
    def used_colors(self) -> int:
        return len(set(self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def to_lines(self) -> list[str]:
        return [f"v {v + 1} {c}" for v, c in enumerate(self.colors)]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "Coloring":
        found = {}
        for lineno, line in enumerate(lines, start=1):
            tokens = line.split()
            if not tokens or tokens[0] == "c":
                continue
            if len(tokens) != 3 or tokens[0] != "v":
                raise ColoringError(f"line {lineno}: expected 'v <vertex> <color>', got {line.strip()!r}")
            try:
                v, c = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ColoringError(f"line {lineno}: non-integer token in {line.strip()!r}") from None
            found[v - 1] = c
        if sorted(found) != list(range(len(found))):
            raise ColoringError("solution does not cover vertices 1..n exactly once")
        return cls(tuple(found[v] for v in range(len(found))))


def _check_total(g: Graph, c: Coloring) -> None:
    if len(c.colors) != g.n:
        raise ColoringError(f"coloring covers {len(c.colors)} vertices, graph has {g.n}")
    if any(x < 1 for x in c.colors):
        raise ColoringError("colors must be positive integers")


def first_fit_color(g: Graph, order: Sequence[int]) -> Coloring:
    """Give each vertex, in ``order``, the least color not used by an already-colored neighbor."""
    _check_permutation(g, order)
    colors = [0] * g.n
    for v in order:
        taken = {colors[u] for u in g.adj[v]}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def greedy_grundy_chordal(g: Graph, direction: str = PEO) -> tuple[Coloring, tuple[int, ...]]:
    """Two-stage coloring of a chordal graph: build a PEO, then first-fit along it.

    ``direction="peo"`` colors simplicial vertices first, as in the original
    procedure; ``"reverse_peo"`` walks the order backwards, which uses exactly
    clique-number many colors. Returns the coloring and the order colored.
    """
    if direction not in (PEO, REVERSE_PEO):
        raise ValueError(f"direction must be {PEO!r} or {REVERSE_PEO!r}, got {direction!r}")
    peo = perfect_elimination_order(g)
    if isinstance(peo, NotChordal):
        raise NotChordalError(peo.residual)
    order = peo if direction == PEO else peo[::-1]
    return first_fit_color(g, order), order


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_total(g, c)
    return all(c.colors[u] != c.colors[v] for u, v in g.edges())


def is_grundy_coloring(g: Graph, c: Coloring) -> bool:
    if not is_proper(g, c):
        return False
    for v in g.vertices:
        seen = {c.colors[u] for u in g.adj[v]}
        if any(j not in seen for j in range(1, c.colors[v])):
            return False
    return True


# --- bounds ------------------------------------------------------------------

CHECKS = {
    "chi_le_gamma": "chi(G) <= Gamma(G)",
    "greedy_le_gamma": "colors of one first-fit run <= Gamma(G)",
    "gamma_le_delta_plus_1": "Gamma(G) <= Delta(G) + 1",
    "gamma_le_n_plus_1_minus_alpha": "Gamma(G) <= n + 1 - alpha(G)",
    "gamma_sum_complement_le_n_plus_1": "Gamma(G) + Gamma(complement) <= n + 1",
    "nordhaus_gaddum_chi_lower": "2 sqrt(n) <= chi(G) + chi(complement)",
    "nordhaus_gaddum_chi_upper": "chi(G) + chi(complement) <= n + 1",
    "partial_ktree_log_bound": "Gamma(G) <= 1 + k log2(n) for partial k-trees",
}


@dataclass
class BoundsReport:
    n: int
    delta: int
    gamma_greedy: int
    gamma_exact: int | None = None
    gamma_witness: tuple[int, ...] | None = None
    gamma_complement_exact: int | None = None
    chi_exact: int | None = None
    chi_complement_exact: int | None = None
    alpha_exact: int | None = None
    k: int | None = None
    achromatic: None = None  # never computed
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [name for name, held in self.checks.items() if not held]

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "delta": self.delta,
            "gamma_greedy": self.gamma_greedy,
            "gamma_exact": self.gamma_exact,
            "gamma_complement_exact": self.gamma_complement_exact,
            "chi_exact": self.chi_exact,
            "chi_complement_exact": self.chi_complement_exact,
            "alpha_exact": self.alpha_exact,
            "k": self.k,
            "achromatic": None,
        }
        out.update(self.checks)
        return out


def grundy_bounds(g: Graph, with_oracle: bool = True, k: int | None = None, limits=None) -> BoundsReport:
    """Collect Grundy-related quantities of ``g`` and evaluate each named inequality.

    Inequalities are reported, never asserted: a False entry in ``checks``
    is a counterexample. ``k`` enables the partial k-tree bound. The exact
    values come from the brute-force oracle and are capped by ``limits``.
    """
    from . import oracle

    limits = limits or oracle.OracleLimits()
    peo = perfect_elimination_order(g)
    order = peo if not isinstance(peo, NotChordal) else tuple(g.vertices)
    greedy = first_fit_color(g, order).used_colors if g.n else 0
    report = BoundsReport(n=g.n, delta=max_degree(g), gamma_greedy=greedy, k=k)
    if not with_oracle:
        return report

    if g.n > limits.max_n_orderings:
        raise oracle.OracleCapExceeded("max_n_orderings", limits.max_n_orderings, g.n)
    gc = complement(g)
    n = g.n
    report.gamma_exact, report.gamma_witness = oracle.grundy_number_exact(g, limits)
    report.gamma_complement_exact, _ = oracle.grundy_number_exact(gc, limits)
    report.chi_exact = oracle.chromatic_number_exact(g, limits)
    report.chi_complement_exact = oracle.chromatic_number_exact(gc, limits)
    report.alpha_exact = oracle.independence_number_exact(g, limits)

    gamma, chi = report.gamma_exact, report.chi_exact
    chi_sum = chi + report.chi_complement_exact
    checks = report.checks
    checks["chi_le_gamma"] = chi <= gamma
    checks["greedy_le_gamma"] = greedy <= gamma
    checks["gamma_le_delta_plus_1"] = gamma <= report.delta + 1
    checks["gamma_le_n_plus_1_minus_alpha"] = gamma <= n + 1 - report.alpha_exact
    checks["gamma_sum_complement_le_n_plus_1"] = gamma + report.gamma_complement_exact <= n + 1
    # chi_sum >= 2 sqrt(n)  <=>  chi_sum**2 >= 4n, kept in integers
    checks["nordhaus_gaddum_chi_lower"] = chi_sum * chi_sum >= 4 * n
    checks["nordhaus_gaddum_chi_upper"] = chi_sum <= n + 1
    if k is not None and n >= 1:
        checks["partial_ktree_log_bound"] = gamma <= 1 + k * math.log2(n)
    return report


# --- incremental repair ------------------------------------------------------


class Repair(NamedTuple):
    graph: Graph
    coloring: Coloring
    recolored: int


def _violates(adj, colors, v) -> bool:
    # judged against currently colored neighbors only; 0 means uncolored
    c = colors[v]
    seen = {colors[u] for u in adj[v]}
    return c in seen or any(j not in seen for j in range(1, c))


def recolor_after_change(g: Graph, c: Coloring, change: GraphChange) -> Repair:
    """Apply ``change`` and repair the Grundy coloring locally.

    Vertices near the change whose color became improper or lost a smaller
    color witness are uncolored; uncoloring can strip witnesses from their
    neighbors, so this repeats until stable. The uncolored vertices are then
    first-fit colored in increasing id order. ``recolored`` counts them,
    including a newly added vertex.
    """
    _check_total(g, c)
    if not is_grundy_coloring(g, c):
        raise ColoringError("input coloring is not a Grundy coloring of the graph")
    result = apply_change(g, change)
    h = result.graph
    colors = [0] * h.n
    for old, new in result.remap.items():
        colors[new] = c.colors[old]

    # a vertex added alongside an edge only gains witnesses, never loses one
    if isinstance(change, AddEdge) and c.colors[change.u] != c.colors[change.v]:
        pending: set[int] = set()
    elif isinstance(change, AddVertex):
        pending = set()
    else:
        pending = set(result.touched)
    uncolored = {v for v in h.vertices if colors[v] == 0}

    while pending:
        v = min(pending)
        pending.discard(v)
        if colors[v] and _violates(h.adj, colors, v):
            colors[v] = 0
            uncolored.add(v)
            pending.update(u for u in h.adj[v] if colors[u])

    for v in sorted(uncolored):
        taken = {colors[u] for u in h.adj[v]}
        x = 1
        while x in taken:
            x += 1
        colors[v] = x
    return Repair(h, Coloring(tuple(colors)), len(uncolored))
