"""Command-line front end: ``berndt <subcommand> [options]``.

Exit status is 0 on success, 1 when a certification (or conjecture check)
fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .berndt_integrals import (
    BarnesComboSpec,
    Family,
    IntegralSpec,
    InvalidSpec,
    barnes_combination_exact,
    check_conjecture,
    closed_form,
    coefficient_table,
)
from .hyperbolic_closed_forms import SumKind, SumVariant, cbar_at_quarter, sbar_at_quarter
from .numeric_oracle import (
    DEFAULT_DIGITS_ENV,
    ConvergenceError,
    DomainError,
    PrecisionContext,
    VerificationReport,
    eval_gamma_pi,
    sum_hyperbolic,
    verify,
    verify_barnes,
    verify_series,
)
from .render import dump_json, expr_to_json, fraction_json, fraction_text, to_latex

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_PI_MULTIPLE = re.compile(r"^(?:(\d+)(?:/(\d+))?)?pi(?:/(\d+))?$")


class UsageError(Exception):
    pass


def parse_pi_multiple(text: str) -> Fraction:
    """``"pi/2"`` -> 1/2, ``"2pi"`` -> 2, ``"3*pi/4"`` -> 3/4."""
    m = _PI_MULTIPLE.match(text.replace(" ", "").replace("*", "").lower())
    if not m:
        raise UsageError(f"--y must be a rational multiple of pi such as pi/2 or 2pi, got {text!r}")
    num = int(m.group(1) or 1)
    den = int(m.group(2) or 1) * int(m.group(3) or 1)
    if num == 0:
        raise UsageError("--y must be positive")
    return Fraction(num, den)


def _default_digits() -> int:
    raw = os.environ.get(DEFAULT_DIGITS_ENV, "40")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{DEFAULT_DIGITS_ENV} must be an integer, got {raw!r}") from None


def _context(digits: Optional[int]) -> PrecisionContext:
    try:
        return PrecisionContext(digits if digits is not None else _default_digits())
    except ValueError as exc:
        raise UsageError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "latex"), default=argparse.SUPPRESS)

    parser = _Parser(prog="berndt", parents=[fmt],
                     description="Exact closed forms of mixed Berndt-type integrals with numeric certification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    families = [f.value for f in Family]

    p = sub.add_parser("closed-form", parents=[fmt], help="exact value of one integral")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("-s", type=int, required=True)

    p = sub.add_parser("verify", parents=[fmt], help="closed form against quadrature")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--digits", type=int)

    p = sub.add_parser("series", parents=[fmt], help="sum a hyperbolic series at a multiple of pi")
    p.add_argument("--kind", choices=[v.value for v in SumVariant], required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--digits", type=int)

    p = sub.add_parser("table", parents=[fmt], help="structure-theorem coefficient rows")
    p.add_argument("--mmax", type=int, required=True)

    p = sub.add_parser("conjecture", parents=[fmt], help="exact evidence for the coefficient relations")
    p.add_argument("--mmax", type=int, required=True)

    p = sub.add_parser("barnes", parents=[fmt], help="Barnes zeta combination, exact and numeric")
    p.add_argument("--combo", choices=families, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--digits", type=int)
    return parser


# -- document assembly --------------------------------------------------------

def _report_fields(report: VerificationReport, ctx: PrecisionContext) -> dict:
    mp = ctx.mp
    return {
        "oracle": None if report.oracle_numeric is None else mp.nstr(report.oracle_numeric, ctx.decimal_digits),
        "abs_error": None if report.abs_error is None else mp.nstr(report.abs_error, 5),
        "digits": report.digits_used,
        "passed": report.passed,
        "method": report.method.value,
        "diagnostic": report.diagnostic,
    }


def _document(command: str, inputs: dict, exact=None, numeric=None, report=None, **extra) -> dict:
    doc = {
        "command": command,
        "inputs": inputs,
        "exact": expr_to_json(exact),
        "exact_latex": None if exact is None else to_latex(exact),
        "numeric": numeric,
        "report": report,
    }
    doc.update(extra)
    return doc


def _text_lines(doc: dict, exact) -> List[str]:
    lines = [f"{doc['command']}: " + ", ".join(f"{k}={v}" for k, v in doc["inputs"].items())]
    if exact is not None:
        lines.append(f"exact:   {exact}")
    if doc["numeric"] is not None:
        lines.append(f"numeric: {doc['numeric']}")
    rep = doc["report"]
    if rep is not None:
        lines.append(f"oracle:  {rep['oracle']}  ({rep['method']})")
        lines.append(f"abs err: {rep['abs_error']}  digits: {rep['digits']}")
        lines.append("status:  " + ("PASS" if rep["passed"] else "FAIL"))
        if rep["diagnostic"]:
            lines.append(f"note:    {rep['diagnostic']}")
    return lines


def _emit_single(doc: dict, exact, fmt: str, out) -> None:
    if fmt == "json":
        out.write(dump_json(doc) + "\n")
    elif fmt == "latex":
        out.write((to_latex(exact) if exact is not None else str(doc["numeric"])) + "\n")
    else:
        out.write("\n".join(_text_lines(doc, exact)) + "\n")


def _spec(family: str, s: int) -> IntegralSpec:
    try:
        return IntegralSpec(family, s).validate()
    except InvalidSpec as exc:
        raise UsageError(str(exc)) from None


# -- subcommands ----------------------------------------------------------------

def _cmd_closed_form(args, fmt, out) -> int:
    spec = _spec(args.family, args.s)
    exact = closed_form(spec)
    ctx = _context(None)
    numeric = ctx.mp.nstr(eval_gamma_pi(exact, ctx), ctx.decimal_digits)
    doc = _document("closed-form", {"family": args.family, "s": args.s}, exact, numeric)
    _emit_single(doc, exact, fmt, out)
    return EXIT_OK


def _cmd_verify(args, fmt, out) -> int:
    spec = _spec(args.family, args.s)
    ctx = _context(args.digits)
    report = verify(spec, ctx)
    numeric = None if report.exact_numeric is None else ctx.mp.nstr(report.exact_numeric, ctx.decimal_digits)
    doc = _document("verify", {"family": args.family, "s": args.s, "digits": ctx.decimal_digits},
                    report.exact, numeric, _report_fields(report, ctx))
    _emit_single(doc, report.exact, fmt, out)
    return EXIT_OK if report.passed else EXIT_FAILED


def _series_exact(kind: SumKind, y: Fraction):
    """Closed form when one exists: alternating sums with m = 2, even p, at pi/2."""
    if kind.m != 2 or y != Fraction(1, 2) or kind.p % 2 or kind.p < 0:
        return None
    if kind.variant is SumVariant.CBAR:
        return cbar_at_quarter(kind.p // 2)
    if kind.variant is SumVariant.SBAR and kind.p >= 2:
        return sbar_at_quarter(kind.p // 2)
    return None


def _cmd_series(args, fmt, out) -> int:
    y = parse_pi_multiple(args.y)
    ctx = _context(args.digits)
    try:
        kind = SumKind(SumVariant(args.kind), args.p, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    inputs = {"kind": args.kind, "p": args.p, "m": args.m, "y": f"{y}*pi", "digits": ctx.decimal_digits}
    y_num = ctx.mp.pi * y.numerator / y.denominator
    exact = _series_exact(kind, y)
    try:
        if exact is None:
            value = sum_hyperbolic(kind, y_num, ctx)
            doc = _document("series", inputs, None, ctx.mp.nstr(value, ctx.decimal_digits))
            _emit_single(doc, None, fmt, out)
            return EXIT_OK
        report = verify_series(kind, exact, y_num, ctx)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    doc = _document("series", inputs, exact, ctx.mp.nstr(report.exact_numeric, ctx.decimal_digits),
                    _report_fields(report, ctx))
    _emit_single(doc, exact, fmt, out)
    return EXIT_OK if report.passed else EXIT_FAILED


_ROW_FIELDS = ("c1", "c2", "d1", "d2", "e1", "e2", "f1", "f2")


def _cmd_table(args, fmt, out) -> int:
    if args.mmax < 1:
        raise UsageError("--mmax must be at least 1")
    rows = coefficient_table(args.mmax)
    if fmt == "json":
        doc = _document("table", {"mmax": args.mmax},
                        rows=[{"m": r.m, **{f: fraction_json(getattr(r, f)) for f in _ROW_FIELDS}} for r in rows])
        out.write(dump_json(doc) + "\n")
    elif fmt == "latex":
        out.write(r"\begin{tabular}{r" + "r" * len(_ROW_FIELDS) + "}\n")
        out.write(" & ".join(["m"] + [f"${f[0]}_{f[1]}$" for f in _ROW_FIELDS]) + r" \\" + "\n")
        for r in rows:
            cells = [str(r.m)] + [_latex_fraction(getattr(r, f)) for f in _ROW_FIELDS]
            out.write(" & ".join(cells) + r" \\" + "\n")
        out.write(r"\end{tabular}" + "\n")
    else:
        for r in rows:
            out.write(f"m={r.m}  " + "  ".join(f"{f}={fraction_text(getattr(r, f))}" for f in _ROW_FIELDS) + "\n")
    return EXIT_OK


def _latex_fraction(q: Optional[Fraction]) -> str:
    if q is None:
        return "--"
    if q.denominator == 1:
        return f"${q.numerator}$"
    sign = "-" if q < 0 else ""
    return rf"${sign}\frac{{{abs(q.numerator)}}}{{{q.denominator}}}$"


def _cmd_conjecture(args, fmt, out) -> int:
    if args.mmax < 1:
        raise UsageError("--mmax must be at least 1")
    entries = check_conjecture(args.mmax)
    ok = all(e.holds for e in entries)
    if fmt == "json":
        doc = _document("conjecture", {"mmax": args.mmax}, note="conjecture evidence, not proof", entries=[
            {"m": e.m, "c2_plus_e2": fraction_json(e.c2_plus_e2), "d1_plus_f1": fraction_json(e.d1_plus_f1),
             "holds": e.holds} for e in entries])
        out.write(dump_json(doc) + "\n")
    else:
        for e in entries:
            df = "n/a" if e.d1_plus_f1 is None else str(e.d1_plus_f1)
            status = "PASS" if e.holds else "FAIL"
            if fmt == "latex":
                out.write(rf"m={e.m}: $c_2+e_2={e.c2_plus_e2}$, $d_1+f_1={df}$ \quad {status}" + "\n")
            else:
                out.write(f"m={e.m}: c2+e2 = {e.c2_plus_e2}, d1+f1 = {df}  {status}  (conjecture evidence)\n")
    return EXIT_OK if ok else EXIT_FAILED


def _cmd_barnes(args, fmt, out) -> int:
    try:
        spec = BarnesComboSpec(args.combo, args.m)
        spec.integral
    except InvalidSpec as exc:
        raise UsageError(str(exc)) from None
    ctx = _context(args.digits)
    exact = barnes_combination_exact(spec)
    try:
        report = verify_barnes(spec, exact, ctx)
    except ConvergenceError as exc:
        sys.stderr.write(f"computation error: {exc}\n")
        return EXIT_FAILED
    fields = _report_fields(report, ctx)
    fields["imag_abs"] = ctx.mp.nstr(report.subject["imag"], 5)
    inputs = {"combo": spec.kind.value, "m": spec.m, "s": spec.s, "digits": ctx.decimal_digits}
    doc = _document("barnes", inputs, exact, ctx.mp.nstr(report.exact_numeric, ctx.decimal_digits), fields)
    _emit_single(doc, exact, fmt, out)
    return EXIT_OK if report.passed else EXIT_FAILED


_COMMANDS = {
    "closed-form": _cmd_closed_form,
    "verify": _cmd_verify,
    "series": _cmd_series,
    "table": _cmd_table,
    "conjecture": _cmd_conjecture,
    "barnes": _cmd_barnes,
}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        fmt = getattr(args, "format", "text")
        return _COMMANDS[args.command](args, fmt, out)
    except UsageError as exc:
        sys.stderr.write(f"berndt: usage error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
