"""Command-line interface.

Examples::

    qsylv sqrt "3+4i"
    qsylv solve --a i --b j --c 0 --json
    qsylv classify 1+i 1+j
    qsylv batch --oracle < problems.jsonl

Exit status: 0 on success, 1 when the mathematics says no (empty solution
set, operands outside an operation's domain), 2 on parse or usage errors.
Tolerances default to ``rel=1e-10, abs=1e-14`` and may be overridden by the
``QSYLV_TOL_REL`` / ``QSYLV_TOL_ABS`` environment variables or by
``--rel`` / ``--abs``.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from qsylv import crosscheck
from qsylv.quat import (
    DEFAULT_TOL,
    DomainError,
    QuaternionError,
    Tolerance,
    conj,
    is_similar,
    mul,
    norm,
    similarity_witness,
)
from qsylv.roots import RootKind, RootSet, sqrt, sqrt_product
from qsylv.sylvester import (
    Classification,
    SolutionKind,
    SolutionSet,
    SylvesterProblem,
    classify,
    homogeneous_general,
    inhomogeneous_general,
    residual,
    solve,
)
from qsylv.text import (
    ParseError,
    format_quaternion,
    parse_quaternion,
    quaternion_from_json,
    quaternion_to_json,
)

HUMAN_DIGITS = 12


class UsageError(Exception):
    pass


def _h(q) -> str:
    return format_quaternion(q, HUMAN_DIGITS)


def _num(v: float) -> str:
    return format(v, f".{HUMAN_DIGITS}g")


def _dumps(obj) -> str:
    return json.dumps(obj, allow_nan=False)


def tolerance_from(args, environ=os.environ) -> Tolerance:
    rel = args.rel if args.rel is not None else environ.get("QSYLV_TOL_REL")
    abs_ = args.abs if args.abs is not None else environ.get("QSYLV_TOL_ABS")
    try:
        return Tolerance(
            float(rel) if rel is not None else DEFAULT_TOL.rel,
            float(abs_) if abs_ is not None else DEFAULT_TOL.abs,
        )
    except ValueError as exc:
        raise UsageError(f"bad tolerance: {exc}") from None


# ---------------------------------------------------------------- solve


def solution_record(
    p: SylvesterProblem,
    tol: Tolerance,
    use_oracle: bool = False,
    q=None,
) -> tuple[dict, Classification, SolutionSet]:
    """The JSON-shaped result of solving ``p``."""
    cls, sol = solve(p, tol)
    rec: dict = {"classification": cls.value}
    srec: dict = {
        "kind": sol.kind.value,
        "particular": None if sol.particular is None else quaternion_to_json(sol.particular),
        "basis": [quaternion_to_json(e) for e in sol.basis],
    }
    if sol.note:
        srec["note"] = sol.note
    rec["solution"] = srec
    if sol.kind is SolutionKind.EMPTY:
        rec["residual"] = None
        if cls is Classification.SINGULAR_NONREAL:
            rec["condition"] = {
                "ac": quaternion_to_json(mul(p.a, p.c)),
                "c_conj_b": quaternion_to_json(mul(p.c, conj(p.b))),
            }
    else:
        pts = [sol.particular] + [sol.particular + e for e in sol.basis]
        rec["residual"] = max(residual(p, x) for x in pts)
    if q is not None and cls is Classification.SINGULAR_NONREAL and sol.kind is not SolutionKind.EMPTY:
        if norm(p.c) <= tol.abs:
            x = homogeneous_general(p.a, p.b, q, tol)
        else:
            x = inhomogeneous_general(p, q, tol)
        rec["point"] = quaternion_to_json(x)
        rec["point_residual"] = residual(p, x)
    rec["oracle_agrees"] = crosscheck.compare(p, sol, tol).agrees if use_oracle else None
    return rec, cls, sol


def _print_solution(rec: dict, sol: SolutionSet, out) -> None:
    print(f"classification: {rec['classification']}", file=out)
    print(f"solution: {sol.kind.value}", file=out)
    if sol.kind is SolutionKind.EMPTY:
        print(f"reason: {sol.note}", file=out)
    else:
        print(f"particular: {_h(sol.particular)}", file=out)
        if sol.basis:
            print("basis:", file=out)
            for e in sol.basis:
                print(f"  {_h(e)}", file=out)
        if sol.note:
            print(f"note: {sol.note}", file=out)
        print(f"residual: {_num(rec['residual'])}", file=out)
    if "point" in rec:
        print(f"point(q): {_h(quaternion_from_json(rec['point']))}", file=out)
    if rec["oracle_agrees"] is not None:
        print(f"oracle_agrees: {str(rec['oracle_agrees']).lower()}", file=out)


def cmd_solve(args, tol, out) -> int:
    c = _q(args.c) if args.c is not None else parse_quaternion("0")
    p = SylvesterProblem(_q(args.a), _q(args.b), c)
    q = _q(args.q) if args.q is not None else None
    rec, _, sol = solution_record(p, tol, args.oracle, q)
    if args.json:
        print(_dumps(rec), file=out)
    else:
        _print_solution(rec, sol, out)
    return 1 if sol.kind is SolutionKind.EMPTY else 0


# ---------------------------------------------------------------- roots


def _roots_text(rs: RootSet) -> str:
    if rs.kind is RootKind.PURE_SPHERE:
        r = _num(rs.radius)
        return f"±{r}·u for any pure unit u (principal: {_h(rs.principal)})"
    return f"±({_h(rs.principal)})"


def _roots_json(rs: RootSet) -> dict:
    return {
        "kind": rs.kind.value,
        "principal": quaternion_to_json(rs.principal),
        "radius": rs.radius,
    }


def _emit_roots(rs: RootSet, args, out) -> int:
    if args.json:
        print(_dumps(_roots_json(rs)), file=out)
    else:
        print(_roots_text(rs), file=out)
    return 0


def cmd_sqrt(args, tol, out) -> int:
    return _emit_roots(sqrt(_q(args.a), tol), args, out)


def cmd_roots_of_product(args, tol, out) -> int:
    return _emit_roots(sqrt_product(_q(args.a), _q(args.b), tol), args, out)


# ---------------------------------------------------------------- similarity


def cmd_classify(args, tol, out) -> int:
    cls = classify(_q(args.a), _q(args.b), tol)
    print(_dumps({"classification": cls.value}) if args.json else cls.value, file=out)
    return 0


def cmd_similar(args, tol, out) -> int:
    ok = is_similar(_q(args.a), _q(args.b), tol)
    print(_dumps({"similar": ok}) if args.json else str(ok).lower(), file=out)
    return 0


def cmd_witness(args, tol, out) -> int:
    a, b = _q(args.a), _q(args.b)
    p = similarity_witness(a, b, tol)
    res = norm(mul(a, p) - mul(p, b))
    if args.json:
        print(_dumps({"witness": quaternion_to_json(p), "residual": res}), file=out)
    else:
        print(_h(p), file=out)
    return 0


# ---------------------------------------------------------------- batch


def _batch_line(line: str, tol: Tolerance, use_oracle: bool) -> dict:
    obj = json.loads(line)
    if not isinstance(obj, dict):
        raise ValueError("each line must be a JSON object")
    a = quaternion_from_json(obj["a"])
    b = quaternion_from_json(obj["b"])
    c = quaternion_from_json(obj.get("c", "0"))
    q = quaternion_from_json(obj["q"]) if "q" in obj else None
    rec, _, _ = solution_record(SylvesterProblem(a, b, c), tol, use_oracle, q)
    return rec


def cmd_batch(args, tol, out, stdin) -> int:
    status = 0
    for lineno, line in enumerate(stdin, 1):
        if not line.strip():
            continue
        try:
            rec = _batch_line(line, tol, args.oracle)
        except ParseError as exc:
            status = 2
            rec = {"line": lineno, "error": f"{type(exc).__name__}: {exc}"}
        except QuaternionError as exc:
            rec = {"line": lineno, "error": f"{type(exc).__name__}: {exc}"}
        except (ValueError, KeyError, TypeError) as exc:
            status = 2
            rec = {"line": lineno, "error": f"{type(exc).__name__}: {exc}"}
        print(_dumps(rec), file=out)
    return status


# ---------------------------------------------------------------- plumbing


def _q(text: str):
    return parse_quaternion(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rel", type=float, help="relative tolerance")
    common.add_argument("--abs", type=float, help="absolute tolerance")
    common.add_argument("--json", action="store_true", help="emit JSON with full precision")

    parser = argparse.ArgumentParser(prog="qsylv", description="Quaternion Sylvester equations a x - x b = c.")
    sub = parser.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("sqrt", parents=[common], help="square roots of a quaternion")
    s.add_argument("a")
    s.set_defaults(func=cmd_sqrt)

    s = sub.add_parser("roots-of-product", parents=[common], help="square roots of a b for |a| = |b|")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_roots_of_product)

    for verb, func, text in (
        ("classify", cmd_classify, "regime of the pair (a, b)"),
        ("similar", cmd_similar, "whether nonreal a and b are similar"),
        ("witness", cmd_witness, "nonzero p with a p = p b"),
    ):
        s = sub.add_parser(verb, parents=[common], help=text)
        s.add_argument("a")
        s.add_argument("b")
        s.set_defaults(func=func)

    s = sub.add_parser("solve", parents=[common], help="solve a x - x b = c")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--c", help="right-hand side (default 0)")
    s.add_argument("--q", help="free parameter of the general singular solution")
    s.add_argument("--oracle", action="store_true", help="cross-check with real elimination")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("batch", parents=[common], help="one JSON problem per stdin line")
    s.add_argument("--oracle", action="store_true", help="cross-check with real elimination")
    s.set_defaults(func=None)
    return parser


def _protect_negative_literals(argv: list[str]) -> list[str]:
    # "-i" would otherwise be read as an option; a leading space is harmless to the grammar
    out = []
    for tok in argv:
        if tok.startswith("-") and not tok.startswith("--") and tok not in ("-h",):
            try:
                parse_quaternion(tok)
            except ParseError:
                pass
            else:
                tok = " " + tok
        out.append(tok)
    return out


def main(argv=None, stdin=None, stdout=None, stderr=None, environ=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    environ = os.environ if environ is None else environ
    argv = sys.argv[1:] if argv is None else list(argv)

    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(_protect_negative_literals(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        tol = tolerance_from(args, environ)
        if args.func is None:
            return cmd_batch(args, tol, stdout, stdin)
        return args.func(args, tol, stdout)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except QuaternionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
