"""Command-line front end.

Two subcommands:

* ``solve``  -- solve one cubic (``--expr``, ``--p/--q``, or ``--a/--b/--c``)
  or a batch file of expressions, with ``--method {chen,cardano,moebius,both}``
  and ``--format {text,json,trig,exact}``;
* ``denest`` -- evaluate and denest cbrt(a+sqrt(b)) + cbrt(a-sqrt(b)).

Exit codes: 0 success, 2 parse/usage error, 3 numeric failure (non-finite
result, method not applicable, or a failed ``--verify``).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional

from .cardano import cardano_solve, compare_methods
from .chen import (
    InvalidCaseError,
    newton_polish,
    solve_degenerate,
    solve_depressed,
    solve_moebius,
)
from .decompose import CaseTag, RsPair, compute_rs
from .denest import NestedRadical, denest
from .numerics import CubeRootBranch
from .parsing import ParseError, parse_coefficient, parse_cubic
from .reduction import DepressedCubic, GeneralCubic, InvalidInputError, depress, lift_roots
from .verify import verify_roots

_BRANCHES = {
    "principal": CubeRootBranch.PRINCIPAL,
    "real": CubeRootBranch.REAL_PREFERRING,
}


class NumericFailure(RuntimeError):
    """A non-finite value escaped the computation."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rscubic",
        description="Solve real cubic equations via the r,s decomposition "
        "x^3 - 3rsx + rs(r+s) = 0, with a Cardano baseline and exact output.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve a cubic equation")
    solve.add_argument("--expr", help='equation text, e.g. "x^3-12x+16=0"')
    solve.add_argument("--p", type=parse_coefficient, help="p of x^3+px+q (accepts 9/2, 1.5, 64*sqrt(2))")
    solve.add_argument("--q", type=parse_coefficient, help="q of x^3+px+q")
    solve.add_argument("--a", type=parse_coefficient, help="a of x^3+ax^2+bx+c")
    solve.add_argument("--b", type=parse_coefficient, help="b of x^3+ax^2+bx+c")
    solve.add_argument("--c", type=parse_coefficient, help="c of x^3+ax^2+bx+c")
    solve.add_argument("--lead", type=parse_coefficient, default=None, help="leading coefficient (default 1)")
    solve.add_argument("--batch", metavar="FILE", help="file with one equation per line; emits JSON lines")
    solve.add_argument("--method", choices=["chen", "cardano", "moebius", "both"], default="chen")
    solve.add_argument("--format", choices=["text", "json", "trig", "exact"], default="text")
    solve.add_argument("--precision", type=int, default=12, help="significant digits in text output")
    solve.add_argument("--polish", action="store_true", help="one Newton step per root")
    solve.add_argument("--branch", choices=sorted(_BRANCHES), default="real", help="cube-root branch")
    solve.add_argument("--verify", action="store_true", help="append a verification report; exit 3 on failure")

    den = sub.add_parser("denest", help="denest cbrt(a+sqrt(b)) + cbrt(a-sqrt(b))")
    den.add_argument("--a", type=parse_coefficient, required=True)
    den.add_argument("--b", type=parse_coefficient, required=True)
    den.add_argument("--format", choices=["text", "json"], default="text")
    den.add_argument("--precision", type=int, default=12)
    return parser


def _cjson(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _check_finite(values) -> None:
    for z in values:
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise NumericFailure("non-finite intermediate or result")


def _dispatch(cubic: GeneralCubic, method: str, branch: CubeRootBranch, polish: bool):
    """Depress, solve with the chosen method, lift; returns all the stages."""
    d, shift = depress(cubic)
    pair = compute_rs(d)
    if method == "cardano":
        depressed, _ = cardano_solve(d)
    elif method == "moebius":
        if pair.case in (CaseTag.DEGENERATE_P0, CaseTag.DEGENERATE_Q0):
            depressed = solve_degenerate(d)
        else:
            depressed = solve_moebius(pair.r, pair.s)
    else:
        depressed = solve_depressed(d, branch)
    lifted = lift_roots(depressed, shift)
    if polish:
        lifted = newton_polish(lifted, cubic)
    _check_finite(lifted.roots)
    return d, shift, pair, depressed, lifted


def _base_record(echo: str, method: str, cubic: GeneralCubic, d: DepressedCubic, shift, pair: RsPair) -> dict:
    return {
        "input": echo,
        "method": method,
        "cubic": {"a": float(cubic.a), "b": float(cubic.b), "c": float(cubic.c)},
        "p": float(d.p),
        "q": float(d.q),
        "shift": float(shift.delta),
        "case": pair.case.value,
        "r": _cjson(pair.r) if pair.r is not None else None,
        "s": _cjson(pair.s) if pair.s is not None else None,
    }


def _solve_record(cubic: GeneralCubic, echo: str, args) -> dict:
    branch = _BRANCHES[args.branch]
    if args.method == "both":
        d, shift = depress(cubic)
        pair = compute_rs(d)
        report = compare_methods(d)
        rs_lifted = lift_roots(solve_depressed(d, branch), shift)
        cardano_lifted = lift_roots(cardano_solve(d)[0], shift)
        if args.polish:
            rs_lifted = newton_polish(rs_lifted, cubic)
            cardano_lifted = newton_polish(cardano_lifted, cubic)
        _check_finite(rs_lifted.roots + cardano_lifted.roots)
        rec = _base_record(echo, "both", cubic, d, shift, pair)
        rec.update(
            {
                "roots": [_cjson(x) for x in rs_lifted.roots],
                "cardano_roots": [_cjson(x) for x in cardano_lifted.roots],
                "max_matched_distance": report.max_matched_distance,
                "residuals": [abs(cubic(x)) for x in rs_lifted.roots],
                "cardano_residuals": [abs(cubic(x)) for x in cardano_lifted.roots],
            }
        )
        triple_for_verify = solve_depressed(d, branch)
    else:
        d, shift, pair, depressed, lifted = _dispatch(cubic, args.method, branch, args.polish)
        rec = _base_record(echo, args.method, cubic, d, shift, pair)
        rec.update(
            {
                "roots": [_cjson(x) for x in lifted.roots],
                "residuals": [abs(cubic(x)) for x in lifted.roots],
                "multiplicity": [list(m) for m in lifted.multiplicity],
                "exact": [str(e) if e is not None else None for e in lifted.exact]
                if lifted.exact is not None
                else None,
                "trig": {
                    "amplitude": lifted.trig.amplitude,
                    "theta": lifted.trig.theta,
                    "offsets": list(lifted.trig.offsets),
                }
                if lifted.trig is not None
                else None,
            }
        )
        triple_for_verify = depressed
    if args.verify:
        report = verify_roots(d, triple_for_verify)
        rec["verification"] = {
            "pass": report.passed,
            "residuals": list(report.residuals),
            "vieta_errors": list(report.vieta_errors),
            "tol": report.tol,
            "scale": report.scale,
        }
    return rec


def _fmt(value: float, precision: int) -> str:
    return f"{value:.{precision}g}"


def _fmt_complex(z: dict, precision: int) -> str:
    re, im = z["re"], z["im"]
    if im == 0:
        return _fmt(re, precision)
    sign = "+" if im >= 0 else "-"
    return f"{_fmt(re, precision)} {sign} {_fmt(abs(im), precision)}i"


def _render_text(rec: dict, precision: int) -> str:
    lines = [f"input: {rec['input']}"]
    lines.append(f"method: {rec['method']}   case: {rec['case']}")
    lines.append(f"depressed: p = {_fmt(rec['p'], precision)}, q = {_fmt(rec['q'], precision)}"
                 f"   (shift delta = {_fmt(rec['shift'], precision)})")
    if rec["r"] is not None:
        lines.append(f"r = {_fmt_complex(rec['r'], precision)}, s = {_fmt_complex(rec['s'], precision)}")
    if rec["method"] == "both":
        lines.append("r,s-method roots:")
        for i, z in enumerate(rec["roots"]):
            lines.append(f"  x[{i}] = {_fmt_complex(z, precision)}")
        lines.append("cardano roots:")
        for i, z in enumerate(rec["cardano_roots"]):
            lines.append(f"  x[{i}] = {_fmt_complex(z, precision)}")
        lines.append(f"max matched distance = {_fmt(rec['max_matched_distance'], 3)}")
    else:
        exact = rec.get("exact")
        mult = dict()
        for i, c in rec.get("multiplicity") or []:
            mult[i] = c
        lines.append("roots:")
        for i, z in enumerate(rec["roots"]):
            note = ""
            if exact and exact[i] is not None:
                note += f"   (exact: {exact[i]})"
            if i in mult:
                note += f"   [multiplicity {mult[i]}]"
            lines.append(f"  x[{i}] = {_fmt_complex(z, precision)}{note}")
    lines.append("residuals: " + ", ".join(_fmt(r, 3) for r in rec["residuals"]))
    if "verification" in rec:
        v = rec["verification"]
        lines.append(
            f"verification: {'PASS' if v['pass'] else 'FAIL'} "
            f"(max residual {_fmt(max(v['residuals']), 3)}, "
            f"max vieta error {_fmt(max(v['vieta_errors']), 3)}, tol {v['tol']:g})"
        )
    return "\n".join(lines)


def _render_trig(rec: dict, precision: int) -> str:
    lines = [f"input: {rec['input']}"]
    trig = rec.get("trig")
    if trig is None:
        lines.append(f"no trigonometric form (case: {rec['case']}); decimal roots:")
        for i, z in enumerate(rec["roots"]):
            lines.append(f"  x[{i}] = {_fmt_complex(z, precision)}")
        return "\n".join(lines)
    amp, theta = trig["amplitude"], trig["theta"]
    delta = rec["shift"]
    shift_part = f" - ({_fmt(delta, precision)})" if delta != 0 else ""
    lines.append(
        f"three real roots: x = {_fmt(amp, precision)} * cos(theta/3 + 2k*pi/3){shift_part}, "
        f"theta = {_fmt(theta, precision)}"
    )
    for i, (off, z) in enumerate(zip(trig["offsets"], rec["roots"])):
        lines.append(
            f"  x[{i}] = {_fmt(amp, precision)} * cos({_fmt(off, precision)}){shift_part}"
            f"  [offset = {_fmt(off / math.pi, precision)}*pi]"
            f"  = {_fmt_complex(z, precision)}"
        )
    return "\n".join(lines)


def _render_exact(rec: dict, precision: int) -> str:
    lines = [f"input: {rec['input']}", f"case: {rec['case']}"]
    exact = rec.get("exact")
    for i, z in enumerate(rec["roots"]):
        if exact and exact[i] is not None:
            lines.append(f"  x[{i}] = {exact[i]}   (exact)")
        else:
            lines.append(f"  x[{i}] = {_fmt_complex(z, precision)}   (exact: none)")
    return "\n".join(lines)


def _render(rec: dict, fmt: str, precision: int) -> str:
    if fmt == "json":
        return json.dumps(rec)
    if fmt == "trig" and rec["method"] != "both":
        return _render_trig(rec, precision)
    if fmt == "exact" and rec["method"] != "both":
        return _render_exact(rec, precision)
    return _render_text(rec, precision)


def _echo_flags(cubic: GeneralCubic) -> str:
    return str(cubic)


def cmd_solve(args) -> int:
    modes = [
        args.expr is not None,
        args.p is not None or args.q is not None,
        any(v is not None for v in (args.a, args.b, args.c, args.lead)),
        args.batch is not None,
    ]
    if sum(modes) != 1:
        print(
            "error: give exactly one of --expr, --p/--q, --a/--b/--c, or --batch",
            file=sys.stderr,
        )
        return 2

    if args.batch is not None:
        return _run_batch(args)

    if args.expr is not None:
        cubic = parse_cubic(args.expr)
        echo = args.expr
    elif args.p is not None or args.q is not None:
        if args.p is None or args.q is None:
            print("error: --p and --q must be given together", file=sys.stderr)
            return 2
        cubic = GeneralCubic(0, args.p, args.q)
        echo = f"x^3 + ({args.p})x + ({args.q})"
    else:
        missing = [n for n, v in (("--a", args.a), ("--b", args.b), ("--c", args.c)) if v is None]
        if missing:
            print(f"error: missing {', '.join(missing)}", file=sys.stderr)
            return 2
        cubic = GeneralCubic(args.a, args.b, args.c, lead=args.lead if args.lead is not None else 1)
        echo = _echo_flags(cubic)

    rec = _solve_record(cubic, echo, args)
    print(_render(rec, args.format, args.precision))
    if args.verify and not rec["verification"]["pass"]:
        return 3
    return 0


def _run_batch(args) -> int:
    try:
        with open(args.batch, encoding="utf-8") as fh:
            batch_lines = fh.read().splitlines()
    except OSError as exc:
        print(f"error: cannot read batch file: {exc}", file=sys.stderr)
        return 2
    code = 0
    verify_failed = False
    for lineno, line in enumerate(batch_lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            cubic = parse_cubic(line)
            rec = _solve_record(cubic, line, args)
        except (ParseError, InvalidInputError, InvalidCaseError, NumericFailure, OverflowError) as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            code = 2
            continue
        print(json.dumps(rec))
        if args.verify and not rec["verification"]["pass"]:
            verify_failed = True
    if verify_failed and code == 0:
        code = 3
    return code


def cmd_denest(args) -> int:
    radical = NestedRadical(args.a, args.b)
    result = denest(radical)
    _check_finite([complex(result.value)])
    if args.format == "json":
        rec = {
            "a": float(radical.a),
            "b": float(radical.b),
            "value": result.value,
            "exact": str(result.exact) if result.exact is not None else None,
            "p": float(result.cubic.p),
            "q": float(result.cubic.q),
            "note": result.note,
        }
        print(json.dumps(rec))
        return 0
    if result.exact is not None:
        print(f"value = {result.exact} (exact)")
    else:
        note = f"   [{result.note}]" if result.note else ""
        print(f"value = {_fmt(result.value, args.precision)}{note}")
    print(f"satisfies: {result.cubic} = 0")
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            return cmd_solve(args)
        return cmd_denest(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidCaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NumericFailure, OverflowError) as exc:
        print(f"error: numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
