"""Command-line front end.

    graphk analyze GRAPH [--format text|json]
    graphk kgroups GRAPH [--ungraded] [--allow-sinks] [--format text|json]
    graphk snf MATRIX [--format text|json]
    graphk clifford mul A B [-n N] | star A [-n N] | ktheory N

Exit status: 0 on success, 1 for unreadable or malformed input, 2 when the
input is well formed but violates a precondition (sinks in graded mode).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import __version__
from .clifford import CliffordParseError, adjoint, graded_k_lookup, parse_element
from .exact_linalg import (
    MatrixFormatError,
    elementary_divisors_oracle,
    format_matrix,
    parse_matrix,
    smith_normal_form,
    ORACLE_MAX_DIM,
)
from .formats import GraphParseError, parse_graph
from .graph_ktheory import ExperimentalWarning, SinkError, graded_k_groups, ungraded_k_groups
from .graph_model import InvalidGraphError, classify

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except (GraphParseError, InvalidGraphError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _matrix_doc(m, row_labels=None, col_labels=None) -> dict:
    doc = {"rows": m.rows, "cols": m.cols, "entries": m.tolist()}
    if row_labels is not None:
        doc["row_labels"] = list(row_labels)
        doc["col_labels"] = list(col_labels)
    return doc


def _props_text(p) -> list[str]:
    def fmt(vs):
        return "{" + ", ".join(vs) + "}"

    c = p.correspondence
    return [
        f"sinks:               {fmt(p.sinks)}",
        f"sources:             {fmt(p.sources)}",
        f"infinite emitters:   {fmt(p.infinite_emitters)}",
        f"finite emitters F:   {fmt(p.finite_emitters)}",
        f"non-sinks G:         {fmt(p.non_sinks)}",
        f"row-finite:          {str(p.row_finite).lower()}",
        "correspondence:",
        f"  left action compact:       {str(c.left_action_compact).lower()}",
        f"  left action injective:     {str(c.left_action_injective).lower()}",
        f"  module full:               {str(c.module_full).lower()}",
        f"  left action nondegenerate: {str(c.left_action_nondegenerate).lower()}",
    ]


def cmd_analyze(args) -> int:
    g = _load_graph(args.path)
    props = classify(g)
    if args.format == "json":
        print(_dump({"input": args.path, "properties": props.to_dict(), "warnings": []}))
    else:
        print("\n".join(_props_text(props)))
    return EXIT_OK


def cmd_kgroups(args) -> int:
    g = _load_graph(args.path)
    props = classify(g)
    try:
        if args.ungraded:
            res = ungraded_k_groups(g)
        else:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", ExperimentalWarning)
                res = graded_k_groups(g, allow_sinks=args.allow_sinks)
    except SinkError as exc:
        print(f"error: {exc} (use --allow-sinks for the experimental variant)", file=sys.stderr)
        return EXIT_PRECONDITION
    mode = "ungraded" if args.ungraded else ("graded-experimental" if res.experimental else "graded")
    for w in res.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.format == "json":
        print(_dump({
            "input": args.path,
            "properties": props.to_dict(),
            "mode": mode,
            "matrix": _matrix_doc(res.matrix, res.row_labels, res.col_labels),
            "k0": res.k0.to_dict(),
            "k1": res.k1.to_dict(),
            "warnings": list(res.warnings),
        }))
    else:
        print(f"mode: {mode}")
        print(f"matrix ({res.matrix.rows}x{res.matrix.cols}), rows {list(res.row_labels)}, "
              f"columns {list(res.col_labels)}:")
        if res.matrix.cols == 0:
            print("  (no columns)")
        else:
            for i in range(res.matrix.rows):
                print("  " + " ".join(f"{x:>4}" for x in res.matrix.row(i)))
        print(f"K0 = {res.k0}")
        print(f"K1 = {res.k1}")
    return EXIT_OK


def cmd_snf(args) -> int:
    try:
        m = parse_matrix(_read(args.path))
    except MatrixFormatError as exc:
        raise InputError(f"{args.path}: {exc}") from None
    snf = smith_normal_form(m)
    if not snf.verify(m):
        # never expected; refuse to print an unverified decomposition
        print("internal error: Smith decomposition failed verification", file=sys.stderr)
        return 3
    factors = list(snf.invariant_factors)
    doc = {
        "input": args.path,
        "u": _matrix_doc(snf.u),
        "d": _matrix_doc(snf.d),
        "v": _matrix_doc(snf.v),
        "rank": snf.rank,
        "invariant_factors": factors,
        "verified": True,
    }
    if m.rows <= ORACLE_MAX_DIM and m.cols <= ORACLE_MAX_DIM:
        doc["oracle_agrees"] = list(elementary_divisors_oracle(m)) == factors
    if args.format == "json":
        print(_dump(doc))
    else:
        for name, mat in (("U", snf.u), ("D", snf.d), ("V", snf.v)):
            print(f"{name}:")
            print(format_matrix(mat), end="")
        print(f"rank: {snf.rank}")
        print("invariant factors: " + " ".join(str(x) for x in factors))
        print("check U*M*V == D: ok")
    return EXIT_OK


def _parse_elements(texts, n):
    try:
        if n is None:
            n = max(parse_element(t).n for t in texts)
        return [parse_element(t, n) for t in texts]
    except CliffordParseError as exc:
        raise InputError(f"cannot parse element: {exc}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_clifford(args) -> int:
    if args.op == "ktheory":
        if args.n < 0:
            raise InputError("n must be non-negative")
        res = graded_k_lookup(args.n)
        if args.format == "json":
            print(_dump({"n": args.n, "k0": res.k0.to_dict(), "k1": res.k1.to_dict()}))
        else:
            print(str(res))
        return EXIT_OK
    if args.op == "mul":
        a, b = _parse_elements([args.a, args.b], args.n)
        out = a * b
    else:
        (a,) = _parse_elements([args.a], args.n)
        out = adjoint(a)
    if args.format == "json":
        print(_dump({"n": out.n, "result": str(out)}))
    else:
        print(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="graphk",
        description="K-theory of graph C*-algebras from signed directed graphs.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("analyze", help="classify sinks, sources and emitters of a graph")
    sp.add_argument("path", help="graph file, or '-' for stdin")
    fmt(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("kgroups", help="compute (K0, K1) of the graph algebra")
    sp.add_argument("path", help="graph file, or '-' for stdin")
    sp.add_argument("--ungraded", action="store_true", help="ignore edge signs")
    sp.add_argument("--allow-sinks", action="store_true",
                    help="graded mode on graphs with sinks (experimental, unproven)")
    fmt(sp)
    sp.set_defaults(func=cmd_kgroups)

    sp = sub.add_parser("snf", help="Smith normal form of an integer matrix file")
    sp.add_argument("path", help="matrix file, or '-' for stdin")
    fmt(sp)
    sp.set_defaults(func=cmd_snf)

    sp = sub.add_parser("clifford", help="arithmetic in complex Clifford algebras")
    csub = sp.add_subparsers(dest="op", required=True)
    c = csub.add_parser("mul", help="product of two elements")
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("-n", type=int, default=None, help="number of generators")
    fmt(c)
    c = csub.add_parser("star", help="adjoint of an element")
    c.add_argument("a")
    c.add_argument("-n", type=int, default=None, help="number of generators")
    fmt(c)
    c = csub.add_parser("ktheory", help="graded K-theory of CCliff_n")
    c.add_argument("n", type=int)
    fmt(c)
    sp.set_defaults(func=cmd_clifford)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
