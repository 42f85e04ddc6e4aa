"""Command-line front end: ``heawood <subcommand> ...``.

Exit status is 0 on success, 1 when the input violates a precondition and
2 on usage errors. Output is deterministic for a given input.
"""

from __future__ import annotations

import argparse
import colorsys
import json
import sys
from typing import Sequence

from heawood import bounds, topology
from heawood.colouring import chromatic_number, empire_chromatic_number
from heawood.empire import EmpireGraph, builtin_j14_2, collapse, verify_jnm, verify_uniform_jnm
from heawood.errors import HeawoodError
from heawood.graph import Graph, hamiltonian_decomposition
from heawood.wessel import build


def _read_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise HeawoodError(f"cannot read {path}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _rotation_input(data: dict) -> topology.RotationSystem:
    if "rotation_system" in data:
        data = data["rotation_system"]
    return topology.RotationSystem.from_dict(data)


def _palette(colours: Sequence[int], count: int) -> list[str]:
    out = []
    for c in colours:
        r, g, b = colorsys.hsv_to_rgb(c / max(count, 1), 0.45, 1.0)
        out.append(f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}")
    return out


def cmd_bound(args) -> str:
    if args.table:
        gmax, mmax = args.table
        if args.format == "markdown":
            return bounds.bound_table_markdown(gmax, mmax)
        return _dump([r.to_dict() for r in bounds.bound_table(gmax, mmax)])
    if args.genus is None or args.empires is None:
        raise HeawoodError("bound needs --genus and --empires, or --table")
    result = bounds.known_value(args.genus, args.empires)
    if args.format == "markdown":
        lower = "?" if result.lower is None else result.lower
        return f"| g | m | lower | upper | status |\n|---|---|---|---|---|\n" \
               f"| {result.genus} | {result.m} | {lower} | {result.upper} | {result.status} |\n"
    return _dump(result.to_dict())


def cmd_slack(args) -> str:
    if args.edges is not None or args.countries is not None:
        if args.edges is None or args.countries is None:
            raise HeawoodError("slack needs both --edges and --countries")
        return _dump({"slack": bounds.slack(args.edges, args.countries)})
    if args.genus is None or args.empires is None:
        raise HeawoodError("slack needs --genus and --empires, or --edges and --countries")
    return _dump({
        "genus": args.genus,
        "m": args.empires,
        "slack": bounds.uniform_slack(args.genus, args.empires),
        "removable_vertices": bounds.vertex_removal_budget(args.genus, args.empires),
    })


def cmd_wessel(args) -> str:
    wg = build(args.empires, connect=not args.no_connectify)
    if args.format == "dot":
        count, witness = empire_chromatic_number(wg.empire_graph)
        eg = wg.empire_graph
        colours = [witness.assignment[e] for e in eg.empires]
        return eg.base.to_dot(f"J{6 * args.empires}_{args.empires}", _palette(colours, count))
    return _dump(wg.to_dict())


def cmd_verify(args) -> str:
    eg = EmpireGraph.from_dict(_read_json(args.input))
    n, m = args.jnm
    report = verify_uniform_jnm(eg, n, m) if args.uniform else verify_jnm(eg, n, m)
    data = report.to_dict()
    data["warnings"] = list(eg.warnings)
    return _dump(data)


def cmd_collapse(args) -> str:
    eg = EmpireGraph.from_dict(_read_json(args.input))
    col = collapse(eg)
    if args.format == "dot":
        return col.graph.to_dot("collapsed")
    return _dump(col.graph.to_dict())


def cmd_colour(args) -> str:
    data = _read_json(args.input)
    if "empires" in data or "empire_graph" in data:
        count, witness = empire_chromatic_number(EmpireGraph.from_dict(data))
    else:
        count, witness = chromatic_number(Graph.from_dict(data))
    if args.witness:
        return _dump(witness.to_dict())
    return str(count)


def cmd_genus(args) -> str:
    rs = _rotation_input(_read_json(args.input))
    faces = topology.trace_faces(rs)
    g = topology.genus_of(rs)
    return _dump({
        "genus": g.genus,
        "euler_characteristic": g.euler_characteristic,
        "vertices": rs.graph.order,
        "edges": rs.graph.size,
        "faces": len(faces) if rs.graph.size else 1,
    })


def cmd_dual(args) -> str:
    dual = topology.dual_graph(_rotation_input(_read_json(args.input)))
    if args.format == "dot":
        return dual.to_dot("dual")
    return _dump(dual.to_dict())


def cmd_word(args) -> str:
    w = topology.SurfaceWord.parse(args.word)
    if args.rewrite:
        if args.label is None or args.split is None:
            raise HeawoodError("--rewrite needs --label and --split")
        fn = topology.rewrite_right_to_left if args.rewrite == "right-to-left" else topology.rewrite_left_to_right
        return str(fn(w, args.label, args.split))
    return str(topology.word_genus(w).genus)


def cmd_decompose(args) -> str:
    paths = hamiltonian_decomposition(args.n)
    return _dump({"n": args.n, "paths": [list(p) for p in paths]})


def cmd_builtin(args) -> str:
    eg = builtin_j14_2()
    if args.format == "dot":
        return eg.base.to_dot("J14_2")
    data = eg.to_dict()
    if args.warnings:
        data["warnings"] = list(eg.warnings)
    return _dump(data)


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heawood", description=__doc__.splitlines()[0])
    p.add_argument("--error-json", action="store_true", help="report domain errors as JSON on stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bound", help="chromatic empire number bounds")
    s.add_argument("--genus", type=int)
    s.add_argument("--empires", type=int, help="m, the maximum empire size")
    s.add_argument("--table", type=int, nargs=2, metavar=("GMAX", "MMAX"))
    s.add_argument("--format", choices=("json", "markdown"), default="json")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("slack", help="slack of uniform complete empire graphs")
    s.add_argument("--genus", type=int)
    s.add_argument("--empires", type=int)
    s.add_argument("--edges", type=int)
    s.add_argument("--countries", type=int)
    s.set_defaults(func=cmd_slack)

    s = sub.add_parser("wessel", help="planar J(6m, m) graph with its embedding")
    s.add_argument("--empires", type=int, required=True)
    s.add_argument("--no-connectify", action="store_true")
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.add_argument("--dot", dest="format", action="store_const", const="dot")
    s.set_defaults(func=cmd_wessel)

    s = sub.add_parser("verify", help="check the J(n, m) conditions")
    s.add_argument("--jnm", type=int, nargs=2, metavar=("N", "M"), required=True)
    s.add_argument("--uniform", action="store_true", help="also check the uniform conditions")
    s.add_argument("--input", default="-")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("collapse", help="collapse an empire graph")
    s.add_argument("--input", default="-")
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.set_defaults(func=cmd_collapse)

    s = sub.add_parser("colour", help="exact chromatic number of a graph or empire graph")
    s.add_argument("--input", default="-")
    s.add_argument("--witness", action="store_true")
    s.set_defaults(func=cmd_colour)

    s = sub.add_parser("genus", help="genus of a rotation system")
    s.add_argument("--input", default="-")
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("dual", help="dual graph of a rotation system")
    s.add_argument("--input", default="-")
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("word", help="genus of a surface word, or rewrite it")
    s.add_argument("--genus", dest="word", metavar="WORD")
    s.add_argument("--rewrite", choices=("right-to-left", "left-to-right"), metavar="RULE")
    s.add_argument("--label")
    s.add_argument("--split", type=int)
    s.add_argument("text", nargs="?")
    s.set_defaults(func=cmd_word)

    s = sub.add_parser("decompose", help="Hamiltonian path decomposition of K_2n")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("builtin", help="built-in graphs")
    s.add_argument("name", choices=("j14-2",))
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.add_argument("--warnings", action="store_true", help="include transcription warnings")
    s.set_defaults(func=cmd_builtin)
    return p


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "word":
        args.word = args.word or args.text
        if not args.word:
            print("heawood word: error: a surface word is required", file=sys.stderr)
            return 2
    try:
        out = args.func(args)
    except HeawoodError as exc:
        if args.error_json:
            stdout.write(_dump({"error": str(exc), "type": type(exc).__name__}) + "\n")
        else:
            print(f"heawood: error: {exc}", file=sys.stderr)
        return 1
    stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
