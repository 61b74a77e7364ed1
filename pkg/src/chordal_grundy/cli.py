"""Command-line front end.

Every command writes one JSON report to stdout (or plain text with
``--format text``); diagnostics go to stderr. Exit codes: 0 success,
1 domain failure (not chordal, failed check, oracle cap), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from . import oracle
from .chordal import NotChordal, is_split, perfect_elimination_order, simplicial_waves, verify_peo
from .coloring import (
    CHECKS,
    first_fit_color,
    greedy_grundy_chordal,
    grundy_bounds,
    is_grundy_coloring,
    is_proper,
    recolor_after_change,
)
from .dimacs import DimacsParseError, read_dimacs, write_dimacs
from .generators import FAMILY_HELP, generate, parse_family
from .graph import AddEdge, AddVertex, Graph, GraphChange, GraphError, RemoveEdge, RemoveVertex, from_edges, max_degree

log = logging.getLogger("chordal_grundy")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "RunReport",
    "type": "object",
    "required": ["command", "input", "outputs", "timing_ms", "status"],
    "properties": {
        "command": {"enum": ["gen", "recognize", "color", "exact", "check-bounds", "mutate"]},
        "input": {"type": "object"},
        "outputs": {"type": "object"},
        "timing_ms": {"type": "number", "minimum": 0},
        "status": {"enum": [EXIT_OK, EXIT_FAIL, EXIT_USAGE]},
        "error": {"type": "string"},
    },
    "additionalProperties": False,
}


class CommandFailed(Exception):
    """Domain failure that still produces a report."""

    def __init__(self, message: str, outputs: dict | None = None, status: int = EXIT_FAIL):
        super().__init__(message)
        self.outputs = outputs or {}
        self.status = status


def _ids(vertices) -> list[int]:
    return [v + 1 for v in vertices]


# --- commands --------------------------------------------------------------


def cmd_gen(args) -> tuple[dict, dict, int]:
    family = parse_family(args.spec)
    g = generate(family, args.seed)
    text = write_dimacs(g, comments=[f"generated by chordal-grundy gen {family} --seed {args.seed}"])
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    inp = {"spec": str(family), "seed": args.seed}
    return inp, {"path": args.out, "n": g.n, "m": g.num_edges()}, EXIT_OK


def cmd_recognize(args) -> tuple[dict, dict, int]:
    g = read_dimacs(args.path)
    peo = perfect_elimination_order(g)
    chordal = not isinstance(peo, NotChordal)
    out = {
        "n": g.n,
        "m": g.num_edges(),
        "delta": max_degree(g),
        "chordal": chordal,
        "split": is_split(g),
        "peo": _ids(peo) if chordal else None,
        "peo_verified": verify_peo(g, peo) if chordal else None,
        "waves": [_ids(w) for w in simplicial_waves(g)] if chordal else None,
        "residual": None if chordal else _ids(sorted(peo.residual)),
    }
    return {"path": args.path}, out, EXIT_OK


def _parse_order(text: str, g: Graph) -> list[int]:
    try:
        order = [int(t) - 1 for t in text.split()]
    except ValueError:
        raise GraphError(f"order must be whitespace-separated vertex ids, got {text!r}") from None
    if sorted(order) != list(g.vertices):
        raise GraphError(f"order must list each of the vertices 1..{g.n} exactly once")
    return order


def cmd_color(args) -> tuple[dict, dict, int]:
    g = read_dimacs(args.path)
    direction = args.direction.replace("-", "_")
    inp = {"path": args.path, "direction": direction}
    override = args.order
    if args.order_file:
        with open(args.order_file) as fh:
            override = fh.read()
    if override is not None:
        order = _parse_order(override, g)
        coloring = first_fit_color(g, order)
        inp["order_override"] = True
    else:
        peo = perfect_elimination_order(g)
        if isinstance(peo, NotChordal):
            raise CommandFailed(
                "graph is not chordal; pass --order to color along an explicit ordering",
                {"chordal": False, "residual": _ids(sorted(peo.residual))},
            )
        coloring, order = greedy_grundy_chordal(g, direction)
    proper = is_proper(g, coloring)
    grundy = is_grundy_coloring(g, coloring)
    lines = coloring.to_lines()
    if args.solution_out:
        with open(args.solution_out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    out = {
        "order": _ids(order),
        "colors": coloring.used_colors,
        "solution": lines,
        "proper": proper,
        "grundy": grundy,
    }
    return inp, out, EXIT_OK if proper and grundy else EXIT_FAIL


def cmd_exact(args) -> tuple[dict, dict, int]:
    g = read_dimacs(args.path)
    limits = _limits(args)
    which = {"gamma", "chi", "alpha"} if args.which == "all" else {args.which}
    out: dict = {"n": g.n}
    try:
        if "gamma" in which:
            gamma, witness = oracle.grundy_number_exact(g, limits)
            out["gamma"] = gamma
            out["gamma_witness"] = _ids(witness)
        if "chi" in which:
            out["chi"] = oracle.chromatic_number_exact(g, limits)
        if "alpha" in which:
            out["alpha"] = oracle.independence_number_exact(g, limits)
    except oracle.OracleCapExceeded as exc:
        raise CommandFailed(str(exc), {"n": g.n, "cap": exc.cap_name, "cap_value": exc.cap}) from None
    return {"path": args.path, "which": args.which}, out, EXIT_OK


def all_graphs(n: int):
    """Every labeled simple graph on ``n`` vertices, by edge bitmask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def _instances(args) -> list[tuple[str, Graph, int | None]]:
    found = []
    for path in args.paths:
        found.append((path, read_dimacs(path), None))
    for spec in args.exhaustive:
        key, _, value = spec.partition("=")
        if key != "n" or not value.isdigit():
            raise GraphError(f"--exhaustive expects n=<int>, got {spec!r}")
        for i, g in enumerate(all_graphs(int(value))):
            found.append((f"all:n={value}#{i}", g, None))
    for spec in args.sweep:
        family = parse_family(spec)
        for i in range(args.count):
            seed = args.seed + i
            found.append((f"{family}@{seed}", generate(family, seed), family.k))
    return found


def _bounds_row(item) -> dict:
    label, g, k, limits = item
    try:
        report = grundy_bounds(g, with_oracle=True, k=k, limits=limits)
    except oracle.OracleCapExceeded as exc:
        return {"instance": label, "skipped": str(exc)}
    edges = [[u + 1, v + 1] for u, v in g.edges()]
    return {"instance": label, **report.to_json(), "failed": report.failed(), "edges": edges}


def cmd_check_bounds(args) -> tuple[dict, dict, int]:
    limits = _limits(args)
    instances = _instances(args)
    if not instances:
        raise CommandFailed("no instances: give DIMACS paths, --sweep or --exhaustive", status=EXIT_USAGE)
    work = [(label, g, k, limits) for label, g, k in instances]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bounds_row, work, chunksize=16))
    else:
        rows = [_bounds_row(item) for item in work]

    summary = {name: {"held": 0, "failed": 0} for name in CHECKS}
    skipped = 0
    for row in rows:
        if "skipped" in row:
            skipped += 1
            log.warning("skipping %s: %s", row["instance"], row["skipped"])
            continue
        for name in CHECKS:
            if name in row:
                summary[name]["held" if row[name] else "failed"] += 1
    violations = [
        {"instance": row["instance"], "n": row["n"], "edges": row["edges"], "failed": row["failed"]}
        for row in rows
        if row.get("failed")
    ]
    all_held = not violations
    inp = {
        "paths": args.paths,
        "sweep": args.sweep,
        "exhaustive": args.exhaustive,
        "count": args.count,
        "seed": args.seed,
    }
    out = {
        "instances": len(rows),
        "skipped": skipped,
        "checks": summary,
        "descriptions": CHECKS,
        "violations": violations,
        "all_held": all_held,
    }
    if args.rows:
        out["rows"] = rows
    return inp, out, EXIT_OK if all_held else EXIT_FAIL


def parse_change_script(text: str) -> list[tuple[int, str]]:
    """Split a change script into ``(line number, line)`` pairs, skipping blanks and comments."""
    return [
        (i, line.strip())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith(("#", "c "))
    ]


def parse_change(line: str, g: Graph, lineno: int) -> GraphChange:
    """Turn one script line (1-based ids, relative to the current graph) into a change."""
    op, _, rest = line.partition(" ")
    try:
        if op in ("ae", "re"):
            u, v = (int(t) - 1 for t in rest.split())
            return AddEdge(u, v) if op == "ae" else RemoveEdge(u, v)
        if op == "rv":
            (v,) = (int(t) - 1 for t in rest.split())
            return RemoveVertex(v)
        if op == "av":
            head, colon, tail = rest.partition(":")
            if not colon:
                raise ValueError
            if int(head) != g.n + 1:
                raise GraphError(f"line {lineno}: new vertex must be {g.n + 1}, got {head.strip()}")
            return AddVertex(tuple(int(t) - 1 for t in tail.split()))
    except ValueError:
        pass
    raise GraphError(f"line {lineno}: malformed change {line!r}")


def cmd_mutate(args) -> tuple[dict, dict, int]:
    g = read_dimacs(args.path)
    with open(args.script) as fh:
        script = parse_change_script(fh.read())
    peo = perfect_elimination_order(g)
    if isinstance(peo, NotChordal):
        coloring = first_fit_color(g, list(g.vertices))
    else:
        coloring, _ = greedy_grundy_chordal(g, args.direction.replace("-", "_"))
    verified = is_proper(g, coloring) and is_grundy_coloring(g, coloring)
    steps = []
    for lineno, line in script:
        try:
            change = parse_change(line, g, lineno)
            g, coloring, recolored = recolor_after_change(g, coloring, change)
        except GraphError as exc:
            msg = str(exc) if str(exc).startswith("line ") else f"line {lineno}: {exc}"
            raise CommandFailed(msg, {"steps": steps}, status=EXIT_USAGE) from None
        ok = is_proper(g, coloring) and is_grundy_coloring(g, coloring)
        verified = verified and ok
        steps.append({"line": lineno, "change": line, "recolored": recolored, "colors": coloring.used_colors, "verified": ok})
    out = {
        "steps": steps,
        "n": g.n,
        "m": g.num_edges(),
        "colors": coloring.used_colors,
        "solution": coloring.to_lines(),
        "verified": verified,
    }
    return {"path": args.path, "script": args.script}, out, EXIT_OK if verified else EXIT_FAIL


# --- plumbing --------------------------------------------------------------


def _limits(args) -> oracle.OracleLimits:
    limits = oracle.OracleLimits()
    return limits.with_cap(args.cap_n) if args.cap_n is not None else limits


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap-n", type=int, default=None, help="oracle cap on vertices for exact Grundy search (default 9)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="chordal-grundy",
        description="Chordal graph recognition and Grundy first-fit coloring.",
        epilog=FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a graph as DIMACS",
                       epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("spec")
    p.add_argument("-o", "--out", required=True, help="output path, '-' for stdout (report then goes to stderr)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("recognize", parents=[common], help="chordality, split, PEO and simplicial waves")
    p.add_argument("path")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("color", parents=[common], help="PEO-based first-fit coloring")
    p.add_argument("path")
    p.add_argument("--direction", choices=("peo", "reverse-peo"), default="peo")
    p.add_argument("--order", help="explicit 1-based ordering, e.g. '1 4 2 3'; works on any graph")
    p.add_argument("--order-file")
    p.add_argument("--solution-out", help="also write 'v <vertex> <color>' lines here")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("exact", parents=[common], help="exact Gamma, chi, alpha by brute force")
    p.add_argument("path")
    p.add_argument("--which", choices=("gamma", "chi", "alpha", "all"), default="all")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("check-bounds", parents=[common], help="evaluate the Grundy inequality battery",
                       epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("paths", nargs="*", default=[])
    p.add_argument("--sweep", action="append", default=[], help="generator spec; instance i uses seed SEED+i")
    p.add_argument("--exhaustive", action="append", default=[], metavar="n=N", help="all labeled graphs on N vertices")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--rows", action="store_true", help="include one row per instance")
    p.set_defaults(func=cmd_check_bounds)

    p = sub.add_parser("mutate", parents=[common], help="apply a change script with incremental recoloring")
    p.add_argument("path")
    p.add_argument("script")
    p.add_argument("--direction", choices=("peo", "reverse-peo"), default="peo")
    p.set_defaults(func=cmd_mutate)
    return parser


def _emit(report: dict, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True) + "\n")
        return
    stream.write(f"{report['command']}: status {report['status']} ({report['timing_ms']:.1f} ms)\n")
    if "error" in report:
        stream.write(f"error: {report['error']}\n")
    for key, value in report["outputs"].items():
        if key == "solution":
            stream.writelines(line + "\n" for line in value)
        else:
            stream.write(f"{key}: {json.dumps(value)}\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    start = time.perf_counter()
    error = None
    described = {k: v for k, v in vars(args).items() if k in ("path", "spec", "paths", "script")}
    try:
        inp, outputs, status = args.func(args)
    except CommandFailed as exc:
        inp, outputs, status, error = described, exc.outputs, exc.status, str(exc)
    except (DimacsParseError, GraphError, OSError) as exc:
        inp, outputs, status, error = described, {}, EXIT_USAGE, str(exc)
    report = {
        "command": args.command,
        "input": inp,
        "outputs": outputs,
        "timing_ms": (time.perf_counter() - start) * 1000.0,
        "status": status,
    }
    if error is not None:
        report["error"] = error
        log.error(error)
    stream = sys.stderr if getattr(args, "out", None) == "-" else sys.stdout
    _emit(report, args.format, stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
