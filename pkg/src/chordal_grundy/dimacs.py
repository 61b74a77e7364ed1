"""DIMACS ``.col`` reading and writing.

Files use 1-based vertex ids; they are shifted to 0-based ids on input and
back on output, nowhere else.
"""

from __future__ import annotations

from typing import IO

from .graph import Graph, GraphError, from_edges


class DimacsParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def parse_dimacs(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise DimacsParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise DimacsParseError(f"malformed problem line {raw.strip()!r}", lineno)
            n, declared_m = _ints(tokens[2:], lineno)
            if n < 0 or declared_m < 0:
                raise DimacsParseError("negative count in problem line", lineno)
        elif kind == "e":
            if n is None:
                raise DimacsParseError("missing problem line", lineno)
            if len(tokens) != 3:
                raise DimacsParseError(f"malformed edge line {raw.strip()!r}", lineno)
            u, v = _ints(tokens[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsParseError(f"edge ({u}, {v}) outside 1..{n}", lineno)
            if u == v:
                raise DimacsParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise DimacsParseError("missing problem line")
    return from_edges(n, edges)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise DimacsParseError(f"malformed token in {' '.join(tokens)!r}", lineno) from None


def write_dimacs(g: Graph, comments: list[str] | None = None) -> str:
    lines = [f"c {c}" for c in comments or ()]
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_dimacs(path: str) -> Graph:
    with open(path, "rb") as fh:
        return parse_dimacs(fh.read())


def dump_dimacs(g: Graph, fh: IO[str], comments: list[str] | None = None) -> None:
    fh.write(write_dimacs(g, comments))
