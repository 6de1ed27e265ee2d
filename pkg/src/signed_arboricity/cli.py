"""Command-line interface.

Exit codes:

    0  success
    1  negative answer (invalid coloring, unbalanced graph, failed property run)
    2  unreadable or malformed input file
    3  signature is not balanced (coloring commands)
    4  graph is not decomposable into triangulations and Wagner graphs
    5  oracle size cap exceeded
    6  input is not a (near-)triangulation or not planar
    7  other invalid input (lists, pins, precolors, Wagner structure)
    8  internal defect: a constructed coloring failed verification
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import formats
from .color import find_wagner_labeling, pin_outer, tree_color_near_triangulation, tree_color_wagner, uniform_lists
from .core import ColorDomain, Coloring, SignedGraph, canonical_order, class_subgraph, find_cycle, is_signed_tree_coloring
from .errors import (
    ColoringDefect,
    Exhausted,
    FormatError,
    NonPlanar,
    NotBalanced,
    NotDecomposable,
    NotNearTriangulation,
    NotWagner,
    OracleCapExceeded,
    SignedGraphError,
)
from .k5 import decompose, tree_color_k5_free
from .oracle import generate_balanced, generate_k5_free, generate_triangulation, oracle_va, random_signed_graph
from .planar import NearTriangulation, planar_embed, trace_faces
from .suites import SUITES, run_suite
from .switch import is_balanced, switch_set

EXIT_OK, EXIT_NO, EXIT_FORMAT, EXIT_UNBALANCED, EXIT_NOT_DECOMPOSABLE = 0, 1, 2, 3, 4
EXIT_CAP, EXIT_NOT_NEAR_TRIANGULATION, EXIT_INVALID, EXIT_DEFECT = 5, 6, 7, 8


def _int_csv(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args, report: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)


def _load_graph(path):
    return formats.graph_from_dict(formats.load_json(path))


def cmd_check(args) -> int:
    g, _ = _load_graph(args.graph)
    c = formats.coloring_from_dict(formats.load_json(args.coloring))
    if set(c.colors) != set(g.vertices):
        raise FormatError("coloring does not cover exactly the graph's vertices")
    classes = []
    for i in c.used_classes():
        sub = class_subgraph(g, c, i)
        classes.append({
            "class": i,
            "vertices": len(sub.vertices),
            "edges": len(sub.edges),
            "cycle": find_cycle(sub.vertices, sub.edges),
        })
    valid = is_signed_tree_coloring(g, c)
    report = {"command": "check", "valid": valid, "n": c.n, "classes": classes}
    lines = [f"class {k['class']}: {k['vertices']} vertices, {k['edges']} edges"
             + (f", cycle {k['cycle']}" if k["cycle"] else "") for k in classes]
    lines.append("valid signed tree-coloring" if valid else "NOT a signed tree-coloring")
    _emit(args, report, lines)
    return EXIT_OK if valid else EXIT_NO


def _lists_for(args, g):
    if args.lists:
        lists = formats.lists_from_dict(formats.load_json(args.lists))
        missing = [v for v in g.vertices if v not in lists]
        if missing:
            raise FormatError(f"lists file misses vertices {missing[:5]}")
        return lists
    return uniform_lists(g.vertices, args.n)


def cmd_color(args) -> int:
    g, rotation = _load_graph(args.graph)
    lists = _lists_for(args, g)
    if args.mode == "triangulation":
        if rotation is None:
            rotation = planar_embed(g)
        outer = args.outer or rotation.outer_face or trace_faces(g, rotation)[0]
        nt = NearTriangulation(g, rotation.with_outer(outer))
        c = tree_color_near_triangulation(nt, pin_outer(nt, lists))
    elif args.mode == "k5":
        c = tree_color_k5_free(g, lists)
    else:
        if args.pin:
            if len(args.pin) != 2:
                raise FormatError("--pin takes two vertices u,v")
            u, v = args.pin
        else:
            lab = find_wagner_labeling(g)
            if lab is None:
                raise NotWagner("graph is not the Wagner graph")
            u, v = lab[0], lab[1]
        c = tree_color_wagner(g, (u, v, canonical_order(lists[u])[0], canonical_order(lists[v])[0]), lists)

    if not args.lists and all(x in ColorDomain(args.n) for x in c.colors.values()):
        c = Coloring(args.n, c.colors)
    if not is_signed_tree_coloring(g, c):
        raise ColoringDefect("refusing to write an unverified coloring")
    data = formats.coloring_to_dict(c)
    if formats.coloring_from_dict(json.loads(json.dumps(data))) != c:
        raise ColoringDefect("coloring does not survive a JSON round trip")
    text = formats.dump_json(data, args.output)
    if args.output is None:
        print(text)
    else:
        print(f"wrote {args.output}", file=sys.stderr)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g, _ = _load_graph(args.graph)
    try:
        res = oracle_va(g, args.n_max, prune=not args.no_prune)
    except Exhausted as exc:
        _emit(args, {"command": "oracle", "va": None, "error": str(exc)}, [str(exc)])
        return EXIT_NO
    report = {
        "command": "oracle",
        "va": res.va,
        "witness": formats.coloring_to_dict(res.witness),
        "colorings_checked": res.colorings_checked,
    }
    lines = [f"va = {res.va}", f"witness = {report['witness']['colors']}", f"colorings checked = {res.colorings_checked}"]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_property(args) -> int:
    start = time.perf_counter()
    cases = run_suite(args.suite, args.count, args.seed)
    elapsed = time.perf_counter() - start
    failed = [c for c in cases if not c.passed]
    dumped = []
    if failed:
        out_dir = Path(args.dump_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for case in failed:
            path = out_dir / f"{args.suite}-seed{args.seed}-case{case.index}.json"
            payload = {"suite": args.suite, "run_seed": args.seed, "case_seed": case.seed, "detail": case.detail}
            if case.graph is not None:
                payload["graph"] = formats.graph_to_dict(case.graph, case.rotation)
            formats.dump_json(payload, path)
            dumped.append(str(path))
    report = {
        "command": f"property --suite {args.suite} --count {args.count} --seed {args.seed}",
        "seed": args.seed,
        "instances": [{"index": c.index, "seed": c.seed, "passed": c.passed, "detail": c.detail} for c in cases],
        "passed": len(cases) - len(failed),
        "failed": len(failed),
        "seconds": round(elapsed, 3),
        "dumped": dumped,
    }
    lines = [f"suite {args.suite}: {report['passed']}/{len(cases)} passed in {elapsed:.2f}s (seed {args.seed})"]
    lines += [f"  FAIL case {c.index} (seed {c.seed}): {c.detail}" for c in failed]
    _emit(args, report, lines)
    return EXIT_OK if not failed else EXIT_NO


def cmd_switch(args) -> int:
    g, rotation = _load_graph(args.graph)
    h = switch_set(g, args.vertices)
    text = formats.dump_json(formats.graph_to_dict(h, rotation), args.output)
    if args.output is None:
        print(text)
    return EXIT_OK


def cmd_balance(args) -> int:
    g, _ = _load_graph(args.graph)
    res = is_balanced(g)
    report = {"command": "balance", "balanced": res.balanced}
    if res:
        report["potential"] = [res.potential[v] for v in g.vertices]
        lines = ["balanced", f"potential = {report['potential']}"]
    else:
        report["witness"] = res.witness
        lines = ["not balanced", f"negative cycle = {res.witness}"]
    _emit(args, report, lines)
    return EXIT_OK if res else EXIT_NO


def cmd_decompose(args) -> int:
    g, _ = _load_graph(args.graph)
    d = decompose(g)
    text = formats.dump_json(formats.decomposition_to_dict(d), args.output)
    if args.output is None:
        print(text)
    else:
        print(f"wrote {args.output}: {len(d.leaves)} pieces, {len(d.joins)} joins", file=sys.stderr)
    return EXIT_OK


def cmd_generate(args) -> int:
    rotation = None
    if args.kind == "triangulation":
        edges, rotation = generate_triangulation(args.vertices, args.flips, args.seed)
        n = args.vertices
    elif args.kind == "k5":
        n, edges = generate_k5_free(args.pieces, args.seed)
    else:
        sample = random_signed_graph(args.vertices, args.edges, args.seed)
        n, edges = sample.vertex_count, sample.edges()
    if args.signature == "balanced":
        g = generate_balanced(edges, args.seed, n)
    elif args.signature == "random":
        rng = random.Random(args.seed)
        g = SignedGraph.from_edges(n, [(u, v, rng.choice((1, -1))) for u, v in edges])
    else:
        g = SignedGraph.from_edges(n, edges)
    text = formats.dump_json(formats.graph_to_dict(g, rotation), args.output)
    if args.output is None:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signed-arboricity", description="Signed tree-colorings of signed graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, json_flag=True):
        if json_flag:
            sp.add_argument("--json", action="store_true", help="machine-readable report")

    sp = sub.add_parser("check", help="verify a signed tree-coloring")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("color", help="construct a list tree-coloring")
    sp.add_argument("graph")
    sp.add_argument("--mode", choices=("triangulation", "k5", "wagner"), default="triangulation")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--lists", help="JSON file mapping vertex -> list of colors")
    group.add_argument("--n", type=int, default=3, help="use M_n as every list (default 3)")
    sp.add_argument("--outer", type=_int_csv, help="outer face as comma-separated vertices (triangulation mode)")
    sp.add_argument("--pin", type=_int_csv, help="pinned edge u,v (wagner mode)")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("oracle", help="exact signed vertex arboricity by exhaustive search")
    sp.add_argument("graph")
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--no-prune", action="store_true", help="enumerate every coloring")
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("property", help="run a seeded property suite")
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--dump-dir", default="property-failures")
    common(sp)
    sp.set_defaults(func=cmd_property)

    sp = sub.add_parser("switch", help="switch a vertex set")
    sp.add_argument("graph")
    sp.add_argument("--vertices", type=_int_csv, required=True)
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_switch)

    sp = sub.add_parser("balance", help="test balance; print potential or negative cycle")
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=cmd_balance)

    sp = sub.add_parser("decompose", help="clique-sum decomposition of a K5-minor-free graph")
    sp.add_argument("graph")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("generate", help="write a random instance")
    sp.add_argument("kind", choices=("triangulation", "k5", "signed"))
    sp.add_argument("--vertices", type=int, default=8)
    sp.add_argument("--flips", type=int, default=10)
    sp.add_argument("--pieces", type=int, default=3)
    sp.add_argument("--edges", type=int, default=12)
    sp.add_argument("--signature", choices=("positive", "balanced", "random"), default="balanced")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except NotBalanced as exc:
        print(f"error: not balanced; negative cycle {exc.witness}", file=sys.stderr)
        return EXIT_UNBALANCED
    except NotDecomposable as exc:
        print(f"error: not decomposable: {exc}", file=sys.stderr)
        return EXIT_NOT_DECOMPOSABLE
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NotNearTriangulation, NonPlanar) as exc:
        print(f"error: not a near-triangulation: {exc}", file=sys.stderr)
        return EXIT_NOT_NEAR_TRIANGULATION
    except ColoringDefect as exc:
        print(f"internal defect: {exc}", file=sys.stderr)
        return EXIT_DEFECT
    except SignedGraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
