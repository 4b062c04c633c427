"""``qloop`` command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .parser import ParseError, parse_dpoly, parse_module, parse_scalar
from .qnum import as_qparam, scalar_str
from .repcore.io import dumps, load_module, save_module

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _default_q() -> str:
    return os.environ.get("QLOOP_Q", "2")


def _matrix_strs(m) -> list[list[str]]:
    return [[scalar_str(x) for x in row] for row in m]


def _vector_strs(v) -> list[str]:
    return [scalar_str(x) for x in v]


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _write_or_print(V, out: str | None) -> None:
    if out:
        save_module(V, out)
        print(f"wrote {out}: dim={V.dim} weights={list(V.weights)} label={V.label}")
    else:
        print(dumps(V))


# --- commands ---------------------------------------------------------------------

def cmd_build(args) -> int:
    V = parse_module(args.expr, args.q)
    _write_or_print(V, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .suites import run_suite

    checks = run_suite(args.suite, args.q, args.m_max, args.window)
    report = {
        "suite": args.suite,
        "q": scalar_str(args.q.q),
        "m_max": args.m_max,
        "checks": [c.as_dict() for c in checks],
        "passed": all(c.passed for c in checks),
    }
    text = json.dumps(report, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    print(text)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_report(args) -> int:
    V = load_module(args.module)
    if args.what == "hw":
        from .repcore.analysis import highest_lweight_vectors

        for space in highest_lweight_vectors(V, args.window):
            if space.eigen:
                eig = " ".join(f"h{s}={scalar_str(x)}" for s, x in sorted(space.eigenvalues.items()))
                print(f"weight {space.weight} dim {space.dim}: {eig}")
            else:
                print(f"weight {space.weight} dim {space.dim}: undecided ({space.reason})")
    elif args.what == "simple":
        from .repcore.analysis import is_simple

        res = is_simple(V, args.window)
        out = {"simple": res.simple, "reason": res.reason, "algebra_dim": res.algebra_dim}
        if res.certificate is not None:
            out["certificate"] = _vector_strs(res.certificate)
        _emit(out)
    elif args.what == "drinfeld":
        from .repcore.drinfeld import drinfeld_matrices

        D = drinfeld_matrices(V, args.window or 3)
        _emit({
            "window": D.window,
            "x+": {str(r): _matrix_strs(m) for r, m in sorted(D.xplus.items())},
            "x-": {str(r): _matrix_strs(m) for r, m in sorted(D.xminus.items())},
            "h": {str(r): _matrix_strs(m) for r, m in sorted(D.h.items())},
        })
    elif args.what == "ext":
        from .selfext import ext1

        print(f"dim Ext1 = {ext1(V).dim}")
    return EXIT_OK


def cmd_ext1(args) -> int:
    from .selfext import ext1

    V = load_module(args.a)
    W = load_module(args.b) if args.b else None
    E = ext1(V, W, args.window)
    print(f"dim Ext1 = {E.dim} (cocycles {E.dim_cocycles}, coboundaries {E.dim_coboundaries})")
    if args.cocycles:
        data = [{g: _matrix_strs(m) for g, m in c.items()} for c in E.cocycle_basis]
        Path(args.cocycles).write_text(json.dumps(data, indent=1) + "\n")
        print(f"wrote {len(data)} cocycles to {args.cocycles}")
    return EXIT_OK


def cmd_eself(args) -> int:
    from .selfext import graded_twist

    _write_or_print(graded_twist(load_module(args.module)), args.out)
    return EXIT_OK


def cmd_weyl(args) -> int:
    from .weylalg import local_weyl

    _write_or_print(local_weyl(parse_dpoly(args.pi, args.q), args.q), args.out)
    return EXIT_OK


def cmd_ideal(args) -> int:
    from .weylalg import ideal_I_quotient

    a = parse_scalar(args.a, args.q)
    I = ideal_I_quotient(args.m, a, args.q)
    _emit({
        "m": args.m,
        "a": scalar_str(a),
        "q": scalar_str(args.q.q),
        "codimension": I.codimension,
        "matrices": {f"L{r}": _matrix_strs(mat) for r, mat in sorted(I.module.matrices.items())},
        "membership": I.membership,
        "non_split": I.non_split,
        "codimension_with_r_2m_minus_1": I.literal_codimension,
        "r_2m_minus_1_residual": _vector_strs(I.top_residual),
    })
    return EXIT_OK


# --- argument parsing -------------------------------------------------------------

def _qparam(text: str):
    try:
        return as_qparam(parse_scalar(text))
    except (ParseError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad q {text!r}: {exc}") from exc


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qloop", description="Exact computations for the quantum loop algebra of sl2.")
    p.add_argument("--q", type=_qparam, default=None, help="deformation parameter (default $QLOOP_Q or 2)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--q", type=_qparam, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    sp = add("build", cmd_build, "construct a module from an expression")
    sp.add_argument("expr")
    sp.add_argument("--out")

    from .suites import SUITES

    sp = add("verify", cmd_verify, "run a verification suite")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--m-max", type=_positive, default=3)
    sp.add_argument("--window", type=_positive, default=None)
    sp.add_argument("--out")

    sp = add("report", cmd_report, "analyse a stored module")
    sp.add_argument("module")
    sp.add_argument("what", choices=("hw", "simple", "drinfeld", "ext"))
    sp.add_argument("--window", type=_positive, default=None)

    sp = add("ext1", cmd_ext1, "dimension of Ext^1(A, B)")
    sp.add_argument("a")
    sp.add_argument("b", nargs="?")
    sp.add_argument("--window", type=_positive, default=None)
    sp.add_argument("--cocycles", help="write the cocycle basis as JSON")

    sp = add("eself", cmd_eself, "graded self-extension E(A)")
    sp.add_argument("module")
    sp.add_argument("--out")

    sp = add("weyl", cmd_weyl, "local Weyl module of a Drinfeld polynomial")
    sp.add_argument("--pi", required=True)
    sp.add_argument("--out")

    sp = add("ideal-I", cmd_ideal, "the two-dimensional quotient A_2m / I")
    sp.add_argument("--m", type=_positive, required=True)
    sp.add_argument("--a", default="1")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.q is None:
        try:
            args.q = _qparam(_default_q())
        except argparse.ArgumentTypeError as exc:
            parser.error(f"QLOOP_Q: {exc}")
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"qloop: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
