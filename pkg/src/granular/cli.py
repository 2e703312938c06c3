"""Command-line front end; every command prints one JSON document.

Sources (exactly one): ``--edges FILE``, ``--matrix FILE`` (CSV, optional
label header) or ``--family SPEC`` with SPEC one of ``path:N``, ``cycle:N``,
``complete:N``, ``kmn:M,N``, ``zmod:N``, ``bool:K``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import discern, metric_table, resolving, rough
from .errors import GranularError
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    distance_similar_classes,
    graph_from_matrix,
    make_family,
    max_degree,
    parse_edge_list,
)
from .metric_table import InformationTable
from .zerodiv import BooleanRingMeta, ZnGraphMeta, gamma_boolean, gamma_zn

COMMANDS = ("analyze", "partitions", "reducts", "essential", "rough", "discern", "generate")


@dataclass
class Source:
    table: InformationTable
    graph: Graph
    meta: ZnGraphMeta | BooleanRingMeta | None = None


def load_matrix(path: str | Path) -> InformationTable:
    """Read a square integer CSV; a first row containing any non-integer cell is a label header."""
    text = Path(path).read_text(encoding="utf-8")
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if not rows:
        raise GranularError("invalid_distance_matrix", "invalid distance matrix: file is empty")
    cells = [[c.strip() for c in r] for r in rows]
    labels: list[str] | None = None
    if not all(_is_int(c) for c in cells[0]):
        labels = cells[0]
        cells = cells[1:]
        # a header may carry an empty corner cell when rows are labelled too
        if labels and labels[0] == "" and cells and len(cells[0]) == len(labels):
            labels = labels[1:]
            cells = [r[1:] for r in cells]
    try:
        values = tuple(tuple(int(c) for c in r) for r in cells)
    except ValueError:
        raise GranularError("invalid_distance_matrix", "invalid distance matrix: non-integer entry") from None
    n = len(values)
    if labels is None:
        labels = [f"v{i + 1}" for i in range(n)]
    if len(labels) != n:
        raise GranularError("invalid_distance_matrix", "invalid distance matrix: not square")
    dm = DistanceMatrix(tuple(labels), values)
    bad = dm.triangle_violations()
    if bad:
        i, j, k = bad[0]
        warnings.warn(
            f"triangle inequality violated {len(bad)} time(s), e.g. at "
            f"({dm.labels[i]}, {dm.labels[j]}, {dm.labels[k]})",
            stacklevel=2,
        )
    return InformationTable(dm)


def _is_int(cell: str) -> bool:
    try:
        int(cell)
    except ValueError:
        return False
    return True


def parse_family(spec: str) -> tuple[Graph, ZnGraphMeta | BooleanRingMeta | None]:
    name, _, arg = spec.partition(":")
    try:
        params = [int(p) for p in arg.split(",")] if arg else []
    except ValueError:
        raise GranularError("bad_family", f"bad family parameters in {spec!r}") from None
    if name in ("path", "cycle", "complete"):
        return make_family(name, params), None
    if name == "kmn":
        return make_family("complete_bipartite", params), None
    if name in ("zmod", "bool"):
        if len(params) != 1:
            raise GranularError("bad_family", f"{name} takes one parameter")
        return gamma_zn(params[0]) if name == "zmod" else gamma_boolean(params[0])
    raise GranularError("bad_family", f"unknown family {name!r}")


def resolve_source(args: argparse.Namespace) -> Source:
    if args.edges:
        g = parse_edge_list(Path(args.edges).read_text(encoding="utf-8"))
        return Source(InformationTable(all_pairs_distances(g)), g)
    if args.matrix:
        t = load_matrix(args.matrix)
        return Source(t, graph_from_matrix(t.dm))
    g, meta = parse_family(args.family)
    return Source(InformationTable(all_pairs_distances(g)), g, meta)


def _labels_arg(t: InformationTable, raw: str | None) -> tuple[int, ...]:
    if raw is None or raw.strip() == "":
        return ()
    if raw.strip() == "all":
        return tuple(range(t.n))
    return t.subset_of_labels(x.strip() for x in raw.split(",") if x.strip())


def _blocks(t: InformationTable, blocks) -> list[list[str]]:
    return [t.names(b) for b in blocks]


def _reducts(t: InformationTable, method: str) -> tuple[resolving.ReductReport, bool | None]:
    brute = trans = None
    if method in ("bruteforce", "both"):
        brute = resolving.enumerate_reducts(t).reducts
    if method in ("transversal", "both"):
        dm = discern.discernibility_matrix(t)
        trans = discern.enumerate_reducts_transversal(discern.distinct_entries(dm))
    agree = None
    if method == "both":
        agree = brute == trans
        if not agree:
            raise GranularError("methods_disagree", "brute-force and transversal reducts differ")
    return resolving.ReductReport(t.n, brute if brute is not None else trans), agree


def cmd_reducts(src: Source, args: argparse.Namespace) -> dict[str, Any]:
    t = src.table
    report, agree = _reducts(t, args.method)
    out: dict[str, Any] = {
        "method": args.method,
        "metric_dimension": report.metric_dimension,
        "upper_dimension": report.upper_dimension,
        "reducts": _blocks(t, sorted(report.reducts)),
        "core": t.names(report.core),
        "void": t.names(report.void),
    }
    if agree is not None:
        out["methods_agree"] = agree
    return out


def cmd_partitions(src: Source, args: argparse.Namespace) -> dict[str, Any]:
    t = src.table
    attrs = _labels_arg(t, args.subset)
    return {
        "subset": t.names(attrs),
        "partition": _blocks(t, metric_table.partition(t, attrs)),
        "distance_similar_classes": _blocks(t, distance_similar_classes(t.dm)),
    }


def cmd_essential(src: Source, args: argparse.Namespace) -> dict[str, Any]:
    t = src.table
    report = discern.essential_sets(t)
    return {
        "essential_sets": _blocks(t, report.essential_sets),
        "essential_dimension": report.essential_dimension,
        "counts_by_size": {str(k): v for k, v in report.counts_by_size.items()},
    }


def cmd_rough(src: Source, args: argparse.Namespace) -> dict[str, Any]:
    t = src.table
    attrs = _labels_arg(t, args.attrs)
    target = _labels_arg(t, args.target)
    pair = rough.approximate(t, attrs, target)
    return {
        "attrs": t.names(attrs),
        "target": t.names(target),
        "partition": _blocks(t, metric_table.partition(t, attrs)),
        "lower": t.names(pair.lower),
        "upper": t.names(pair.upper),
        "boundary": t.names(pair.boundary),
        "exact": pair.exact,
        "positive_region": t.names(rough.positive_region(t, attrs, target)),
        "dependency": str(rough.dependency(t, attrs, target)),
    }


def cmd_discern(src: Source, args: argparse.Namespace) -> dict[str, Any]:
    t = src.table
    dm = discern.discernibility_matrix(t)
    out: dict[str, Any] = {
        "entries": [
            {"pair": t.names(pair), "entry": t.names(e), "size": len(e)} for pair, e in sorted(dm.entries.items())
        ],
        "distinct_entries": _blocks(t, discern.distinct_entries(dm)),
    }
    if args.closed_form:
        out["closed_form"] = _closed_form_report(src, dm)
    return out


def _closed_form_report(src: Source, dm: discern.DiscernibilityMatrix) -> dict[str, Any]:
    t, meta = src.table, src.meta
    if not isinstance(meta, (ZnGraphMeta, BooleanRingMeta)):
        return {"applicable": False}
    mismatches, uncovered, checked = [], [], 0
    for (i, j), entry in sorted(dm.entries.items()):
        generic = set(t.names(entry))
        try:
            if isinstance(meta, ZnGraphMeta):
                closed = {str(x) for x in discern.closed_form_delta_zn(meta.n, meta.elements[i], meta.elements[j])}
            else:
                closed = set(discern.closed_form_delta_boolean(meta.k, meta.words[i], meta.words[j]))
        except GranularError as exc:
            if exc.code != "pair_spans_layers":
                raise
            uncovered.append(t.names((i, j)))
            continue
        checked += 1
        if closed != generic:
            mismatches.append(
                {"pair": t.names((i, j)), "closed_form": sorted(closed, key=t.labels.index), "generic": t.names(entry)}
            )
    return {
        "applicable": True,
        "pairs_checked": checked,
        "pairs_uncovered": uncovered,
        "mismatches": mismatches,
        "agree": not mismatches and not uncovered,
    }


def cmd_analyze(src: Source, args: argparse.Namespace) -> dict[str, Any]:
    t, g = src.table, src.graph
    report, agree = _reducts(t, "both")
    essential = discern.essential_sets(t)
    bounds = resolving.check_bounds(g, t.dm, report)
    failed = sorted({b.name for b in bounds if b.passed is False})
    return {
        "n": t.n,
        "labels": list(t.labels),
        "edges": [t.names(e) for e in g.edges()],
        "diameter": t.dm.diameter,
        "max_degree": max_degree(g),
        "distance_similar_classes": _blocks(t, distance_similar_classes(t.dm)),
        "metric_dimension": report.metric_dimension,
        "upper_dimension": report.upper_dimension,
        "reduct_count": len(report.reducts),
        "reducts": _blocks(t, sorted(report.reducts)),
        "core": t.names(report.core),
        "void": t.names(report.void),
        "methods_agree": agree,
        "essential_dimension": essential.essential_dimension,
        "essential_sets": _blocks(t, essential.essential_sets),
        "bounds_failed": failed,
        "bounds_not_applicable": sorted({b.name for b in bounds if b.passed is None}),
    }


HANDLERS = {
    "analyze": cmd_analyze,
    "partitions": cmd_partitions,
    "reducts": cmd_reducts,
    "essential": cmd_essential,
    "rough": cmd_rough,
    "discern": cmd_discern,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="granular", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--edges", metavar="FILE", help="edge-list text file")
        src.add_argument("--matrix", metavar="FILE", help="distance matrix CSV")
        src.add_argument("--family", metavar="SPEC", help="generated family, e.g. zmod:12")
        return p

    add("analyze", "summary of partitions, reducts and essential sets")
    add("partitions", "indiscernibility partition of a subset").add_argument(
        "--subset", default="all", help="comma-separated labels, or 'all'"
    )
    add("reducts", "all minimal resolving sets").add_argument(
        "--method", choices=("bruteforce", "transversal", "both"), default="both"
    )
    add("essential", "essential sets and essential dimension")
    p = add("rough", "lower/upper approximation of a target set")
    p.add_argument("--attrs", required=True, help="comma-separated attribute labels")
    p.add_argument("--target", required=True, help="comma-separated target labels")
    add("discern", "distance-based discernibility matrix").add_argument(
        "--closed-form", action="store_true", help="compare with the zero-divisor closed forms"
    )
    add("generate", "print the source graph as an edge list")
    return parser


def emit(doc: dict[str, Any], stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        src = resolve_source(args)
        if args.command == "generate":
            sys.stdout.write(src.graph.to_edge_list())
            return 0
        emit(HANDLERS[args.command](src, args))
    except GranularError as exc:
        emit({"error": exc.code, "detail": exc.detail})
        return 1
    except OSError as exc:
        emit({"error": "io_error", "detail": str(exc)})
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
