"""Command-line interface: build | verify | search | table | construct.

Each command writes one document to stdout (or --output).  Errors go to
stderr as a single JSON line.  Exit codes: 0 ok, 1 property fails,
2 usage/domain error, 3 search cap exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Callable

from . import _backend
from .constructions import CATALOG, construct, format_label, parse_label
from .graph import GraphError, LabeledGraph, all_pairs_distances, build_cycle, build_path
from .products import explicit_cylinder, explicit_prism
from .resolving import (
    is_doubly_resolving,
    is_resolving,
    is_strong_resolving,
    representation_table,
)
from .search import (
    SearchCapExceeded,
    min_doubly_resolving,
    min_resolving,
    min_strong_resolving,
)

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


@dataclass
class FamilyGraph:
    graph: LabeledGraph
    label: Callable[[int], str]
    parse: Callable[[str], int]


def family_graph(family: str, n: int | None, k: int | None, m: int | None) -> FamilyGraph:
    def need(name: str, value: int | None) -> int:
        if value is None:
            raise UsageError(f"--{name} is required for family {family}")
        return value

    if family == "cycle":
        n = need("n", n)
        g = build_cycle(n)
        return FamilyGraph(g, lambda v: format_label(v, n, 1),
                           lambda s: parse_label(s, n, 1))
    if family == "path":
        k = need("k", k)
        g = build_path(k)
        return FamilyGraph(g, lambda v: format_label(v, k, 1),
                           lambda s: parse_label(s, k, 1))
    if family == "cylinder":
        n, k = need("n", n), need("k", k)
        g = explicit_cylinder(n, k).graph
        return FamilyGraph(g, lambda v: format_label(v, n, k),
                           lambda s: parse_label(s, n, k))
    if family == "prism":
        n, k, m = need("n", n), need("k", k), need("m", m)
        g = explicit_prism(n, k, m).graph
        return FamilyGraph(g, lambda v: format_label(v, n, k, m),
                           lambda s: parse_label(s, n, k, m))
    raise UsageError(f"unknown family {family!r}")


def parse_set(text: str, fg: FamilyGraph) -> tuple[int, ...]:
    if text.strip() == "all":
        return tuple(fg.graph.vertices())
    labels = [part for part in text.replace(" ", "").split(",") if part]
    if not labels:
        raise UsageError("--set is empty")
    return tuple(fg.parse(lab) for lab in labels)


def document(command: str, parameters: dict, result: dict) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "result": result,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def edges_text(g: LabeledGraph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edges(text: str) -> LabeledGraph:
    """Inverse of the ``edges`` output format."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    count, n_edges = int(rows[0][0]), int(rows[0][1])
    edges = [(int(a), int(b)) for a, b in rows[1:]]
    if len(edges) != n_edges:
        raise GraphError(f"header promises {n_edges} edges, found {len(edges)}")
    return LabeledGraph.from_edges(count, edges)


def dot_text(g: LabeledGraph, label: Callable[[int], str]) -> str:
    lines = ["graph G {"]
    lines += [f'  {v} [label="{label(v)}"];' for v in g.vertices()]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def table_text(rows: list[tuple[int, ...]], label: Callable[[int], str]) -> str:
    labels = [label(v) for v in range(1, len(rows) + 1)]
    width = max(len(s) for s in labels)
    body = [
        f"{lab.ljust(width)}  ({','.join(str(x) for x in row)})"
        for lab, row in zip(labels, rows)
    ]
    return "\n".join(body) + "\n"


def _params(args: argparse.Namespace, *extra: str) -> dict:
    out = {"family": args.family}
    for key in ("n", "k", "m", *extra):
        value = getattr(args, key, None)
        if value is not None:
            out[key] = value
    return out


def cmd_build(args: argparse.Namespace) -> tuple[str, int]:
    fg = family_graph(args.family, args.n, args.k, args.m)
    g = fg.graph
    fmt = args.format or "json"
    if fmt == "edges":
        return edges_text(g), EXIT_OK
    if fmt == "dot":
        return dot_text(g, fg.label), EXIT_OK
    if fmt != "json":
        raise UsageError(f"build does not support format {fmt!r}")
    result = {
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "edges": [list(e) for e in g.edges()],
        "family": g.family.describe(),
        "labels": [fg.label(v) for v in g.vertices()],
    }
    return document("build", _params(args), result), EXIT_OK


PREDICATES = {
    "resolving": is_resolving,
    "doubly": is_doubly_resolving,
    "strong": is_strong_resolving,
}


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    fg = family_graph(args.family, args.n, args.k, args.m)
    q = parse_set(args.set, fg)
    d = all_pairs_distances(fg.graph)
    check = PREDICATES[args.property](q, d)
    result: dict = {
        "holds": check.holds,
        "set": list(q),
        "set_labels": [fg.label(v) for v in q],
    }
    if not check.holds:
        result["pair"] = list(check.pair)
        result["pair_labels"] = [fg.label(v) for v in check.pair]
        if check.offset is not None:
            result["lambda"] = check.offset
    params = _params(args, "property")
    params["set"] = args.set
    return document("verify", params, result), EXIT_OK if check.holds else EXIT_FAILS


SEARCHES = {"beta": min_resolving, "psi": min_doubly_resolving, "sdim": min_strong_resolving}


def cmd_search(args: argparse.Namespace) -> tuple[str, int]:
    fg = family_graph(args.family, args.n, args.k, args.m)
    d = all_pairs_distances(fg.graph)
    params = _params(args, "parameter", "cap")
    start = time.perf_counter()
    try:
        res = SEARCHES[args.parameter](fg.graph, d, size_cap=args.cap)
    except SearchCapExceeded as exc:
        result = {
            "found": False,
            "cap": exc.cap,
            "exhausted_sizes": list(exc.exhausted_sizes),
            "subsets_examined": exc.examined,
            "elapsed_seconds": round(time.perf_counter() - start, 6),
        }
        return document("search", params, result), EXIT_CAP
    result = {
        "found": True,
        "parameter": res.parameter,
        "value": res.value,
        "witness": list(res.witness),
        "witness_labels": [fg.label(v) for v in res.witness],
        "exhausted_sizes": list(res.exhausted_sizes),
        "subsets_examined": res.examined,
        "elapsed_seconds": round(time.perf_counter() - start, 6),
        "backend": _backend.NAME,
    }
    return document("search", params, result), EXIT_OK


def cmd_table(args: argparse.Namespace) -> tuple[str, int]:
    fg = family_graph(args.family, args.n, args.k, args.m)
    q = parse_set(args.set, fg)
    rows = representation_table(q, all_pairs_distances(fg.graph))
    if args.format == "text":
        return table_text(rows, fg.label), EXIT_OK
    if args.format not in (None, "json"):
        raise UsageError(f"table does not support format {args.format!r}")
    result = {
        "set": list(q),
        "set_labels": [fg.label(v) for v in q],
        "rows": [
            {"vertex": v, "label": fg.label(v), "r": list(row)}
            for v, row in enumerate(rows, start=1)
        ],
    }
    params = _params(args)
    params["set"] = args.set
    return document("table", params, result), EXIT_OK


def cmd_construct(args: argparse.Namespace) -> tuple[str, int]:
    fam = construct(args.family_id, args.n, args.k, args.m, args.index)
    result = {
        "family_id": fam.family_id,
        "members": list(fam.members),
        "labels": fam.labels(),
        "claims": list(fam.claims),
        "graph": "prism" if fam.on_prism else "cylinder",
    }
    params = {"family_id": args.family_id, "n": args.n, "k": args.k}
    for key in ("m", "index"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    return document("construct", params, result), EXIT_OK


def _graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=["cycle", "path", "cylinder", "prism"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metricdim",
        description="Resolving, doubly resolving and strong resolving sets of cycle/path products.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write the document here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="emit a graph")
    _graph_flags(p)
    p.add_argument("--format", choices=["json", "edges", "dot"])
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common], help="check a vertex set against a property")
    _graph_flags(p)
    p.add_argument("--set", required=True, help="comma-separated labels like x1^1,x16^4, or 'all'")
    p.add_argument("--property", required=True, choices=sorted(PREDICATES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="exact minimum search for beta, psi or sdim")
    _graph_flags(p)
    p.add_argument("--parameter", required=True, choices=sorted(SEARCHES))
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", parents=[common], help="representation vectors of every vertex")
    _graph_flags(p)
    p.add_argument("--set", required=True)
    p.add_argument("--format", choices=["json", "text"])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", parents=[common], help="emit a named witness family")
    p.add_argument("family_id", choices=sorted(CATALOG))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--index", type=int, help="i or j for indexed families")
    p.set_defaults(func=cmd_construct)
    return parser


def _fail(kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}, sort_keys=True) + "\n")
    return EXIT_USAGE


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc))
    except GraphError as exc:
        return _fail("domain", str(exc))
    except IndexError as exc:
        return _fail("index", str(exc))
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
