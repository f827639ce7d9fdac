"""Command-line interface: emit identities and run exact verification sweeps.

Commands:

    identity    closed form for one weighted harmonic sum
    table       the full identity catalogue
    verify      brute-force grid verification of the closed forms
    check       summation-by-parts and corollary identity checks
    bernoulli   Bernoulli numbers (B_1 = +1/2 convention)
    faulhaber   power-sum polynomials

Every command takes ``--format {text,latex,json}`` and ``--output PATH``.
Exit codes: 0 on success (for verify/check: all identities hold), 1 when
any verification cell fails, 2 on invalid usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .catalog import catalog_entries
from .closed_form import ClosedForm, LinearArg
from .exact import bernoulli_plus
from .identities import (
    build_closed_form,
    corollary_check,
    offset_sum_f,
    offset_sum_g,
    sbp_check,
)
from .oracle import GridSpec, VerificationReport, verify_grid
from .polynomial import RationalFunction, faulhaber_poly
from .render import (
    closed_form_to_json,
    fraction_to_json,
    polynomial_text,
    render,
)

# Hard bounds on user-supplied parameters, enforced before dispatch.
MAX_ORDER_BELOW = -10
MAX_OFFSET = 10
MAX_N = 10_000

DEFAULT_GRID = {
    "p": (0, 6),
    "m": (1, 5),
    "offsets": tuple(
        LinearArg(a, b) for a in range(3) for b in range(3)
    ),
    "n_max": 40,
}

SBP_M_RANGE = (-2, 3)
SBP_W_RANGE = (-3, 3)


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(parser, args)
        return args.handler(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmsum",
        description="Exact closed forms for finite sums of generalized harmonic numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("text", "latex", "json"),
            default="text",
            help="output format (default: text)",
        )
        p.add_argument("--output", metavar="PATH", help="write to file instead of stdout")

    p_id = sub.add_parser("identity", help="closed form for one weighted harmonic sum")
    p_id.add_argument("--family", choices=("f", "g"), required=True)
    p_id.add_argument("--p", type=int, required=True, help="power exponent (>= 0)")
    p_id.add_argument("--m", type=int, required=True, help="harmonic order")
    p_id.add_argument("--offset-a", type=int, default=0, help="offset slope a in s = a*n+b")
    p_id.add_argument("--offset-b", type=int, default=0, help="offset shift b in s = a*n+b")
    add_common(p_id)
    p_id.set_defaults(handler=_cmd_identity)

    p_table = sub.add_parser("table", help="emit the full identity catalogue")
    add_common(p_table)
    p_table.set_defaults(handler=_cmd_table)

    p_verify = sub.add_parser("verify", help="verify closed forms against brute force")
    p_verify.add_argument("--family", choices=("f", "g", "both"), default=None)
    p_verify.add_argument("--p", type=int, default=None)
    p_verify.add_argument("--m", type=int, default=None)
    p_verify.add_argument("--offset-a", type=int, default=None)
    p_verify.add_argument("--offset-b", type=int, default=None)
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    add_common(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_check = sub.add_parser("check", help="summation-by-parts and corollary checks")
    p_check.add_argument("--sbp", action="store_true", help="run the summation-by-parts sweep")
    p_check.add_argument(
        "--corollary",
        choices=("inv_k", "inv_k_plus_1", "both"),
        default=None,
        help="run the weighted-sum corollary checks",
    )
    p_check.add_argument("--m", type=int, default=None, help="restrict sbp to one order")
    p_check.add_argument("--w", type=int, default=None, help="restrict sbp to one weight exponent")
    p_check.add_argument("--n-max", type=int, default=None)
    add_common(p_check)
    p_check.set_defaults(handler=_cmd_check)

    p_bern = sub.add_parser("bernoulli", help="Bernoulli numbers, B_1 = +1/2 convention")
    p_bern.add_argument("--n-max", type=int, default=12, help="highest index to print")
    add_common(p_bern)
    p_bern.set_defaults(handler=_cmd_bernoulli)

    p_fh = sub.add_parser("faulhaber", help="power-sum polynomial for one exponent")
    p_fh.add_argument("--p", type=int, required=True, help="power exponent (>= 0)")
    add_common(p_fh)
    p_fh.set_defaults(handler=_cmd_faulhaber)

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    def bail(message: str) -> None:
        parser.error(message)  # exits with status 2

    if getattr(args, "p", None) is not None and args.p < 0:
        bail(f"--p must be nonnegative, got {args.p}")
    if getattr(args, "m", None) is not None and args.m < MAX_ORDER_BELOW:
        bail(f"--m must be >= {MAX_ORDER_BELOW}, got {args.m}")
    for name in ("offset_a", "offset_b"):
        value = getattr(args, name, None)
        if value is not None and not (0 <= value <= MAX_OFFSET):
            flag = "--" + name.replace("_", "-")
            bail(f"{flag} must be in [0, {MAX_OFFSET}], got {value}")
    n_max = getattr(args, "n_max", None)
    if n_max is not None and not (0 <= n_max <= MAX_N):
        bail(f"--n-max must be in [0, {MAX_N}], got {n_max}")


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _identity_payload(family: str, p: int, m: int, s: LinearArg, cf: ClosedForm) -> dict:
    return {
        "family": family,
        "p": p,
        "m": m,
        "offset": {"a": s.a, "b": s.b},
        "closed_form": closed_form_to_json(cf),
    }


def _cmd_identity(args: argparse.Namespace) -> int:
    s = LinearArg(args.offset_a, args.offset_b)
    builder = offset_sum_f if args.family == "f" else offset_sum_g
    cf = builder(args.p, args.m, s)
    if args.format == "json":
        text = json.dumps(_identity_payload(args.family, args.p, args.m, s, cf), indent=2)
    else:
        text = render(cf, args.format)
    _emit(text, args.output)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    entries = catalog_entries()
    if args.format == "json":
        payload = {
            "entries": [
                {
                    "kind": entry.kind,
                    "p": entry.p,
                    "m": entry.m,
                    "offset": {"a": entry.offset.a, "b": entry.offset.b},
                    "closed_form": closed_form_to_json(entry.closed_form),
                }
                for entry in entries
            ]
        }
        _emit(json.dumps(payload, indent=2), args.output)
        return 0
    lines = [
        f"{entry.lhs_label(args.format)} = {render(entry.closed_form, args.format)}"
        for entry in entries
    ]
    _emit("\n".join(lines), args.output)
    return 0


def _verify_spec(args: argparse.Namespace) -> list[GridSpec]:
    filtered = any(
        getattr(args, name) is not None
        for name in ("family", "p", "m", "offset_a", "offset_b", "n_max")
    )
    p_range = (args.p, args.p) if args.p is not None else DEFAULT_GRID["p"]
    m_range = (args.m, args.m) if args.m is not None else DEFAULT_GRID["m"]
    n_max = args.n_max if args.n_max is not None else DEFAULT_GRID["n_max"]
    if args.offset_a is not None or args.offset_b is not None:
        offsets: tuple[LinearArg, ...] = (
            LinearArg(args.offset_a or 0, args.offset_b or 0),
        )
    elif filtered:
        offsets = (LinearArg(0, 0),)
    else:
        offsets = DEFAULT_GRID["offsets"]
    families = ("F", "G") if args.family in (None, "both") else (args.family.upper(),)
    return [
        GridSpec(family, p_range, m_range, offsets, (0, n_max)) for family in families
    ]


def _cmd_verify(args: argparse.Namespace) -> int:
    build = build_closed_form
    if args.corrupt:  # negative-control hook used by the test suite

        def build(family: str, p: int, m: int, s: LinearArg) -> ClosedForm:
            cf = build_closed_form(family, p, m, s)
            return ClosedForm(cf.constant + 1, cf.terms)

    reports = [(spec, verify_grid(spec, build)) for spec in _verify_spec(args)]
    all_ok = all(report.all_passed for _, report in reports)
    if args.format == "json":
        payload = {
            "all_passed": all_ok,
            "grids": [_report_payload(spec, report) for spec, report in reports],
        }
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        lines = []
        for spec, report in reports:
            offsets = ", ".join(str(s) for s in spec.offsets)
            lines.append(
                f"family {spec.family}: p in {spec.p_range[0]}..{spec.p_range[1]}, "
                f"m in {spec.m_range[0]}..{spec.m_range[1]}, s in {{{offsets}}}, "
                f"n in {spec.n_range[0]}..{spec.n_range[1]}: "
                f"{report.total} cells, {report.passed} passed, {report.failed} failed"
            )
            for cell in report.failures():
                lines.append(
                    f"  FAIL {cell.family}(p={cell.p}, m={cell.m}, s={cell.s}) at "
                    f"n={cell.n}: direct sum {cell.lhs} != closed form {cell.rhs}"
                )
        lines.append("all identities verified" if all_ok else "verification FAILED")
        _emit("\n".join(lines), args.output)
    return 0 if all_ok else 1


def _report_payload(spec: GridSpec, report: VerificationReport) -> dict:
    return {
        "family": spec.family,
        "p_range": list(spec.p_range),
        "m_range": list(spec.m_range),
        "offsets": [{"a": s.a, "b": s.b} for s in spec.offsets],
        "n_range": list(spec.n_range),
        "total": report.total,
        "passed": report.passed,
        "failed": report.failed,
        "failures": [
            {
                "p": cell.p,
                "m": cell.m,
                "offset": {"a": cell.s.a, "b": cell.s.b},
                "n": cell.n,
                "lhs": fraction_to_json(cell.lhs),
                "rhs": fraction_to_json(cell.rhs),
            }
            for cell in report.failures()
        ],
    }


def _cmd_check(args: argparse.Namespace) -> int:
    run_sbp = args.sbp or args.corollary is None
    if args.corollary == "both":
        run_corollary: tuple[str, ...] = ("inv_k", "inv_k_plus_1")
    elif args.corollary is not None:
        run_corollary = (args.corollary,)
    elif not args.sbp:  # bare `check` runs everything
        run_corollary = ("inv_k", "inv_k_plus_1")
    else:
        run_corollary = ()
    lines: list[str] = []
    results: list[dict] = []
    all_ok = True

    if run_sbp:
        n_max = args.n_max if args.n_max is not None else 30
        m_values = (args.m,) if args.m is not None else range(SBP_M_RANGE[0], SBP_M_RANGE[1] + 1)
        w_values = (args.w,) if args.w is not None else range(SBP_W_RANGE[0], SBP_W_RANGE[1] + 1)
        for m in m_values:
            for w in w_values:
                ok = all(sbp_check(m, w, n).all_passed for n in range(n_max + 1))
                all_ok &= ok
                lines.append(
                    f"summation-by-parts m={m} w={w} n=0..{n_max}: "
                    f"{'PASS' if ok else 'FAIL'}"
                )
                results.append({"check": "sbp", "m": m, "w": w, "n_max": n_max, "passed": ok})
    for which in run_corollary:
        n_max = args.n_max if args.n_max is not None else 100
        start = 1 if which == "inv_k" else 0
        ok = all(corollary_check(which, n).all_passed for n in range(start, n_max + 1))
        all_ok &= ok
        lines.append(f"corollary {which} n={start}..{n_max}: {'PASS' if ok else 'FAIL'}")
        results.append({"check": "corollary", "which": which, "n_max": n_max, "passed": ok})

    if args.format == "json":
        _emit(json.dumps({"all_passed": all_ok, "checks": results}, indent=2), args.output)
    else:
        lines.append("all checks passed" if all_ok else "checks FAILED")
        _emit("\n".join(lines), args.output)
    return 0 if all_ok else 1


def _cmd_bernoulli(args: argparse.Namespace) -> int:
    values = [(k, bernoulli_plus(k)) for k in range(args.n_max + 1)]
    if args.format == "json":
        payload = {"values": [{"k": k, **fraction_to_json(v)} for k, v in values]}
        _emit(json.dumps(payload, indent=2), args.output)
    elif args.format == "latex":
        _emit(
            "\n".join(
                f"B^+_{{{k}}} = "
                + (
                    str(v.numerator)
                    if v.denominator == 1
                    else f"{'-' if v < 0 else ''}\\frac{{{abs(v.numerator)}}}{{{v.denominator}}}"
                )
                for k, v in values
            ),
            args.output,
        )
    else:
        _emit("\n".join(f"B+({k}) = {v}" for k, v in values), args.output)
    return 0


def _cmd_faulhaber(args: argparse.Namespace) -> int:
    poly = faulhaber_poly(args.p)
    if args.format == "json":
        payload = {
            "p": args.p,
            "closed_form": closed_form_to_json(ClosedForm(RationalFunction(poly))),
        }
        _emit(json.dumps(payload, indent=2), args.output)
    elif args.format == "latex":
        _emit(f"\\sum_{{k=1}}^{{n}} k^{{{args.p}}} = {polynomial_text(poly, latex=True)}", args.output)
    else:
        _emit(f"sum_(k=1..n) k^{args.p} = {polynomial_text(poly)}", args.output)
    return 0
