"""Chordal graph recognition and Grundy (first-fit) coloring."""

from .chordal import (
    NotChordal,
    NotChordalError,
    is_chordal,
    is_simplicial,
    is_split,
    max_clique_chordal,
    perfect_elimination_order,
    simplicial_vertices,
    simplicial_waves,
    verify_peo,
)
from .coloring import (
    BoundsReport,
    Coloring,
    Repair,
    first_fit_color,
    greedy_grundy_chordal,
    grundy_bounds,
    is_grundy_coloring,
    is_proper,
    recolor_after_change,
)
from .dimacs import DimacsParseError, parse_dimacs, write_dimacs
from .generators import generate, parse_family
from .graph import (
    AddEdge,
    AddVertex,
    Graph,
    GraphError,
    RemoveEdge,
    RemoveVertex,
    apply_change,
    complement,
    from_edges,
    induced_subgraph,
    max_degree,
)

__all__ = [
    "AddEdge",
    "AddVertex",
    "BoundsReport",
    "Coloring",
    "DimacsParseError",
    "Graph",
    "GraphError",
    "NotChordal",
    "NotChordalError",
    "RemoveEdge",
    "RemoveVertex",
    "Repair",
    "apply_change",
    "complement",
    "first_fit_color",
    "from_edges",
    "generate",
    "greedy_grundy_chordal",
    "grundy_bounds",
    "induced_subgraph",
    "is_chordal",
    "is_grundy_coloring",
    "is_proper",
    "is_simplicial",
    "is_split",
    "max_clique_chordal",
    "max_degree",
    "parse_dimacs",
    "parse_family",
    "perfect_elimination_order",
    "recolor_after_change",
    "simplicial_vertices",
    "simplicial_waves",
    "verify_peo",
    "write_dimacs",
]

__version__ = "0.1.0"
