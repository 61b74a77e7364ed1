"""Seeded graph generators and the ``name:key=val,...`` family-spec format."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .graph import (
    AddEdge,
    AddVertex,
    Graph,
    GraphChange,
    GraphError,
    RemoveEdge,
    RemoveVertex,
    from_edges,
)


def path(n: int) -> Graph:
    _positive(n=n)
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _positive(n=n)
    return from_edges(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """Star on ``n`` vertices: centre 0 joined to leaves ``1..n-1``."""
    _positive(n=n)
    return from_edges(n, [(0, i) for i in range(1, n)])


def k_tree(n: int, k: int, rng: random.Random) -> Graph:
    """Random k-tree: K_{k+1} grown by joining each new vertex to a random k-clique."""
    return from_edges(n, _k_tree_edges(n, k, rng), meta={"family": "k_tree", "k": k})


def _k_tree_edges(n: int, k: int, rng: random.Random) -> list[tuple[int, int]]:
    _positive(n=n, k=k)
    if n <= k:
        raise GraphError(f"n must exceed k (got n={n}, k={k})")
    edges = list(combinations(range(k + 1), 2))
    cliques = [tuple(c) for c in combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = rng.choice(cliques)
        edges.extend((u, v) for u in base)
        for i in range(k):
            cliques.append(base[:i] + base[i + 1:] + (v,))
    return edges


def partial_k_tree(n: int, k: int, keep: float, rng: random.Random) -> Graph:
    """Random k-tree with each edge kept independently with probability ``keep``."""
    _probability(keep)
    edges = [e for e in _k_tree_edges(n, k, rng) if rng.random() < keep]
    return from_edges(n, edges, meta={"family": "partial_k_tree", "k": k})


def split(s: int, c: int, p: float, rng: random.Random) -> Graph:
    """Split graph: clique on ``0..c-1``, stable set ``c..c+s-1``, cross edges with prob ``p``."""
    if s < 0 or c < 0 or s + c == 0:
        raise GraphError(f"split graph needs non-negative part sizes, not both zero (s={s}, c={c})")
    _probability(p)
    clique = list(range(c))
    stable = list(range(c, c + s))
    edges = list(combinations(clique, 2))
    edges += [(u, v) for v in stable for u in clique if rng.random() < p]
    return from_edges(s + c, edges, meta={"family": "split", "clique": clique, "stable": stable})


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    _positive(n=n)
    _probability(p)
    return from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _positive(**params: int) -> None:
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise GraphError(f"{name} must be a positive integer, got {value!r}")


def _probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"probability must lie in [0, 1], got {p}")


# --- family specs ----------------------------------------------------------

# name -> (builder, {param: type})
_FAMILIES = {
    "path": (lambda a, rng: path(a["n"]), {"n": int}),
    "cycle": (lambda a, rng: cycle(a["n"]), {"n": int}),
    "complete": (lambda a, rng: complete(a["n"]), {"n": int}),
    "star": (lambda a, rng: star(a["n"]), {"n": int}),
    "ktree": (lambda a, rng: k_tree(a["n"], a["k"], rng), {"n": int, "k": int}),
    "pktree": (
        lambda a, rng: partial_k_tree(a["n"], a["k"], a["q"], rng),
        {"n": int, "k": int, "q": float},
    ),
    "split": (lambda a, rng: split(a["s"], a["c"], a["p"], rng), {"s": int, "c": int, "p": float}),
    "gnp": (lambda a, rng: gnp(a["n"], a["p"], rng), {"n": int, "p": float}),
}

FAMILY_HELP = """\
Generator specs have the form NAME:key=value,... :
  path:n=N          cycle:n=N          complete:n=N       star:n=N (centre + N-1 leaves)
  ktree:n=N,k=K     random k-tree (N > K)
  pktree:n=N,k=K,q=Q  partial k-tree keeping each edge with probability Q
  split:s=S,c=C,p=P   stable set S, clique C, cross edges with probability P
  gnp:n=N,p=P       Erdos-Renyi G(n, p)"""


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict = field(default_factory=dict)

    def __str__(self) -> str:
        body = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}:{body}"

    @property
    def k(self) -> int | None:
        """Tree-width parameter for k-tree families, else None."""
        return self.params.get("k") if self.name in ("ktree", "pktree") else None


def parse_family(text: str) -> FamilySpec:
    name, _, body = text.strip().partition(":")
    if name not in _FAMILIES:
        raise GraphError(f"unknown family {name!r}; expected one of {', '.join(_FAMILIES)}")
    types = _FAMILIES[name][1]
    params: dict = {}
    for item in filter(None, body.split(",")):
        key, eq, value = item.partition("=")
        key = key.strip()
        if not eq or key not in types:
            raise GraphError(f"bad parameter {item!r} for family {name!r} (expects {', '.join(types)})")
        try:
            params[key] = types[key](value)
        except ValueError:
            raise GraphError(f"parameter {key} of {name!r} must be {types[key].__name__}, got {value!r}") from None
    missing = [k for k in types if k not in params]
    if missing:
        raise GraphError(f"family {name!r} is missing parameter(s) {', '.join(missing)}")
    return FamilySpec(name, {k: params[k] for k in types})


def generate(family: FamilySpec | str, seed: int = 0) -> Graph:
    if isinstance(family, str):
        family = parse_family(family)
    builder = _FAMILIES[family.name][0]
    return builder(family.params, random.Random(seed))


# --- random topology changes -----------------------------------------------


def random_change(g: Graph, rng: random.Random) -> GraphChange:
    """Draw a valid change for ``g``; used to drive mutation sweeps."""
    n = g.n
    non_edges = [(u, v) for u, v in combinations(range(n), 2) if v not in g.adj[u]]
    edges = g.edges()
    kinds = ["av"]
    if n > 2:
        kinds.append("rv")
    if edges:
        kinds.append("re")
    if non_edges:
        kinds.append("ae")
    kind = rng.choice(kinds)
    if kind == "ae":
        return AddEdge(*rng.choice(non_edges))
    if kind == "re":
        return RemoveEdge(*rng.choice(edges))
    if kind == "rv":
        return RemoveVertex(rng.randrange(n))
    size = rng.randint(0, min(3, n))
    return AddVertex(tuple(sorted(rng.sample(range(n), size))))
