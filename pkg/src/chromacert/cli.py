"""Command-line front end.

Exit codes: 0 decided-true / verified-ok / constructed, 1 decided-false /
violations-found (details still on stdout), 2 usage or input error. JSON
output mode prints exactly one document per run; identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import damatrix as dm
from . import labeling as lb
from .coloring import Coloring, chromatic_class, three_color, two_color
from .errors import BudgetExceededError, ChromacertError, GraphFormatError
from .formats import FORMATS, format_from_path, parse_graph, serialize_graph
from .generators import GENERATOR_KINDS, generate
from .graph import Graph
from .oracle import (
    oracle_k_colorable,
    oracle_one_two_uniform_exists,
    oracle_uniform_labeling_exists,
)

DEFAULT_VERTEX_CAP = 64


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ChromacertError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CHROMACERT_JOBS", "1")))
    except ValueError:
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromacert",
        description="Decide 2-/3-colorability and work with its labeling and matrix certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("graph", nargs="?", default=None,
                          help="graph file (.col, .edges, .json); omit or '-' for stdin")
    graph_in.add_argument("--format", choices=FORMATS,
                          help="input format; required when reading stdin")
    out_mode = argparse.ArgumentParser(add_help=False)
    out_mode.add_argument("--output", choices=("json", "text"), default="json")
    labeling_in = argparse.ArgumentParser(add_help=False)
    labeling_in.add_argument("--labeling", required=True,
                             help='labeling JSON file {"orient": [[s, t], ...]}')
    cap = argparse.ArgumentParser(add_help=False)
    cap.add_argument("--max-n", type=int, default=DEFAULT_VERTEX_CAP,
                     help="vertex cap for the exponential 3-coloring search")

    p = sub.add_parser("decide", help="run a coloring decider")
    dsub = p.add_subparsers(dest="what", required=True)
    dsub.add_parser("2col", parents=[graph_in, out_mode]).set_defaults(handler=_cmd_decide_2col)
    dsub.add_parser("3col", parents=[graph_in, out_mode, cap]).set_defaults(handler=_cmd_decide_3col)
    dsub.add_parser("class", parents=[graph_in, out_mode, cap]).set_defaults(handler=_cmd_decide_class)

    p = sub.add_parser("label", help="construct a certificate labeling")
    lsub = p.add_subparsers(dest="what", required=True)
    lsub.add_parser("uniform", parents=[graph_in, out_mode]).set_defaults(handler=_cmd_label_uniform)
    lsub.add_parser("one-two", parents=[graph_in, out_mode, cap]).set_defaults(handler=_cmd_label_one_two)

    p = sub.add_parser("verify", help="verify a labeling against a graph")
    vsub = p.add_subparsers(dest="what", required=True)
    vsub.add_parser("uniform", parents=[graph_in, out_mode, labeling_in]).set_defaults(
        handler=_cmd_verify, verifier=lb.verify_uniform)
    vsub.add_parser("one-two", parents=[graph_in, out_mode, labeling_in]).set_defaults(
        handler=_cmd_verify, verifier=lb.verify_one_two_uniform)

    p = sub.add_parser("matrix", help="convert and check directional adjacency matrices")
    msub = p.add_subparsers(dest="what", required=True)
    msub.add_parser("from-labeling", parents=[graph_in, out_mode, labeling_in]).set_defaults(
        handler=_cmd_matrix_from_labeling)
    q = msub.add_parser("to-labeling", parents=[out_mode])
    q.add_argument("matrix", nargs="?", default=None, help="matrix file; omit or '-' for stdin")
    q.add_argument("--matrix-format", choices=("json", "text"),
                   help="matrix input format; required when reading stdin")
    q.set_defaults(handler=_cmd_matrix_to_labeling)
    q = msub.add_parser("check", parents=[out_mode])
    q.add_argument("matrix", nargs="?", default=None, help="matrix file; omit or '-' for stdin")
    q.add_argument("--matrix-format", choices=("json", "text"),
                   help="matrix input format; required when reading stdin")
    q.add_argument("--uniform", action="store_true",
                   help="additionally require the matrix to be uniform")
    q.add_argument("--one-two", action="store_true",
                   help="additionally require the matrix to be one-two uniform")
    q.set_defaults(handler=_cmd_matrix_check)

    p = sub.add_parser("oracle", help="run a brute-force enumeration decider")
    osub = p.add_subparsers(dest="what", required=True)
    for name in ("2col", "3col", "uniform", "one-two"):
        q = osub.add_parser(name, parents=[graph_in, out_mode])
        q.add_argument("--max-n", type=int, default=None, help="vertex budget (coloring oracles)")
        q.add_argument("--max-edges", type=int, default=None, help="edge budget (orientation oracles)")
        q.add_argument("--jobs", type=int, default=_default_jobs(),
                       help="worker processes for the scan (default $CHROMACERT_JOBS or 1)")
        q.set_defaults(handler=_cmd_oracle, what=name)

    p = sub.add_parser("gen", help="generate a test graph")
    p.add_argument("kind", choices=GENERATOR_KINDS)
    p.add_argument("--k", type=int, help="cycle length / complete graph size")
    p.add_argument("--sizes", type=_sizes_arg, help="comma-separated part sizes, e.g. 2,2,2")
    p.add_argument("--n", type=int, help="vertex count (random-gnp)")
    p.add_argument("--p", type=float, help="edge probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output-format", choices=FORMATS, default="json")
    p.set_defaults(handler=_cmd_gen)

    return parser


def _sizes_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sizes list {text!r}") from None


def _read_input(path: str | None, explicit_format: str | None, infer) -> tuple[str, str]:
    if path in (None, "-"):
        if explicit_format is None:
            raise GraphFormatError("reading from stdin requires an explicit format option")
        return sys.stdin.read(), explicit_format
    text = Path(path).read_text()
    return text, explicit_format or infer(path)


def _load_graph(args) -> Graph:
    text, fmt = _read_input(args.graph, args.format, format_from_path)
    return parse_graph(text, fmt)


def _load_labeling(args, g: Graph) -> lb.EdgeLabeling:
    return lb.parse_labeling(Path(args.labeling).read_text(), g)


def _load_raw_matrix(args) -> list[list[int]]:
    infer = lambda path: "json" if path.endswith(".json") else "text"
    text, fmt = _read_input(args.matrix, args.matrix_format, infer)
    return dm.parse_matrix_json(text) if fmt == "json" else dm.parse_matrix_text(text)


def _emit(args, obj: dict, text_lines: list[str]) -> None:
    if args.output == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _coloring_lines(coloring: Coloring) -> list[str]:
    return [f"{v} {c}" for v, c in enumerate(coloring.colors)]


def _check_cap(g: Graph, args) -> None:
    if g.n > args.max_n:
        raise BudgetExceededError(f"n={g.n} exceeds --max-n={args.max_n}")


def _cmd_decide_2col(args) -> int:
    g = _load_graph(args)
    result = two_color(g)
    if isinstance(result, Coloring):
        _emit(args, result.to_json_obj(), ["2-colorable"] + _coloring_lines(result))
        return 0
    _emit(args, result.to_json_obj(),
          ["not 2-colorable", "odd cycle: " + " ".join(map(str, result.cycle))])
    return 1


def _cmd_decide_3col(args) -> int:
    g = _load_graph(args)
    _check_cap(g, args)
    result = three_color(g)
    if result is None:
        _emit(args, {"three_colorable": False}, ["not 3-colorable"])
        return 1
    _emit(args, result.to_json_obj(), ["3-colorable"] + _coloring_lines(result))
    return 0


def _cmd_decide_class(args) -> int:
    g = _load_graph(args)
    _check_cap(g, args)
    value = chromatic_class(g).value
    _emit(args, {"chromatic_class": value}, [value])
    return 0


def _cmd_label_uniform(args) -> int:
    g = _load_graph(args)
    result = two_color(g)
    if isinstance(result, Coloring):
        labeling = lb.labeling_from_bipartition(g, result)
        _emit(args, labeling.to_json_obj(),
              [f"{s} {t}" for s, t in labeling.orient])
        return 0
    _emit(args, result.to_json_obj(),
          ["no uniform labeling", "odd cycle: " + " ".join(map(str, result.cycle))])
    return 1


def _cmd_label_one_two(args) -> int:
    g = _load_graph(args)
    _check_cap(g, args)
    coloring = three_color(g)
    if coloring is None:
        _emit(args, {"three_colorable": False}, ["no one-two uniform labeling"])
        return 1
    labeling = lb.labeling_from_three_coloring(g, coloring)
    _emit(args, labeling.to_json_obj(), [f"{s} {t}" for s, t in labeling.orient])
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args)
    labeling = _load_labeling(args, g)
    violations = args.verifier(g, labeling)
    if violations:
        _emit(args, {"ok": False, "violations": [v.to_json_obj() for v in violations]},
              [f"edge ({v.edge[0]}, {v.edge[1]}): {v.class_u.value}/{v.class_v.value} [{v.rule}]"
               for v in violations])
        return 1
    _emit(args, {"ok": True}, ["ok"])
    return 0


def _cmd_matrix_from_labeling(args) -> int:
    g = _load_graph(args)
    labeling = _load_labeling(args, g)
    matrix = dm.matrix_from_labeling(g, labeling)
    _emit(args, matrix.to_json_obj(), matrix.to_text().splitlines())
    return 0


def _cmd_matrix_to_labeling(args) -> int:
    matrix = dm.DAMatrix.build(_load_raw_matrix(args))
    g, labeling = dm.labeling_from_matrix(matrix)
    obj = {"graph": {"n": g.n, "edges": [list(e) for e in g.edges]},
           "labeling": labeling.to_json_obj()}
    _emit(args, obj, [serialize_graph(g, "edgelist").rstrip("\n")]
          + [f"{s} {t}" for s, t in labeling.orient])
    return 0


def _cmd_matrix_check(args) -> int:
    raw = _load_raw_matrix(args)
    kind = dm.validate_matrix(raw)
    if kind is not dm.MatrixKind.ANTISYMMETRIC:
        _emit(args, {"kind": kind.value}, [kind.value])
        return 1
    matrix = dm.DAMatrix.build(raw)
    uniform_violations = dm.is_uniform_matrix(matrix)
    one_two_violations = dm.is_one_two_uniform_matrix(matrix)
    obj = {
        "kind": kind.value,
        "row_classes": [c.value for c in dm.row_classes(matrix)],
        "uniform": {"ok": not uniform_violations, "mixed_rows": uniform_violations},
        "one_two_uniform": {"ok": not one_two_violations,
                            "violations": [v.to_json_obj() for v in one_two_violations]},
    }
    lines = [kind.value,
             "row classes: " + " ".join(c.value for c in dm.row_classes(matrix)),
             f"uniform: {'ok' if not uniform_violations else 'mixed rows ' + str(uniform_violations)}",
             f"one-two uniform: {'ok' if not one_two_violations else str(len(one_two_violations)) + ' violations'}"]
    _emit(args, obj, lines)
    if args.uniform and uniform_violations:
        return 1
    if args.one_two and one_two_violations:
        return 1
    return 0


def _cmd_oracle(args) -> int:
    g = _load_graph(args)
    if args.what == "2col":
        report = oracle_k_colorable(g, 2, max_n=args.max_n, jobs=args.jobs)
    elif args.what == "3col":
        report = oracle_k_colorable(g, 3, max_n=args.max_n, jobs=args.jobs)
    elif args.what == "uniform":
        report = oracle_uniform_labeling_exists(g, max_edges=args.max_edges, jobs=args.jobs)
    else:
        report = oracle_one_two_uniform_exists(g, max_edges=args.max_edges, jobs=args.jobs)
    _emit(args, report.to_json_obj(),
          [f"decision: {str(report.decision).lower()}",
           f"instances checked: {report.instances_checked}"])
    return 0 if report.decision else 1


def _cmd_gen(args) -> int:
    params = {}
    if args.k is not None:
        params["k"] = args.k
    if args.sizes is not None:
        params["sizes"] = args.sizes
    if args.n is not None:
        params["n"] = args.n
    if args.p is not None:
        params["p"] = args.p
    g = generate(args.kind, params, seed=args.seed)
    sys.stdout.write(serialize_graph(g, args.output_format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
