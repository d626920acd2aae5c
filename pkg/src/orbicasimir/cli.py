"""Command-line interface.

Exit codes: 0 ok, 1 usage, 2 domain/convergence error, 3 failed self-check.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

import mpmath
from mpmath import mpf

from . import checks
from .barnes import barnes_zeta2, barnes_zeta2_ds
from .casimir import (
    HYPERBOLIC_NOTE,
    TriangleSignature,
    elliptic_casimir,
    elliptic_zeta,
    identity_zeta,
    surface_report,
)
from .errors import ConvergenceError, DomainError, UnsupportedVariantError
from .hurwitz import hurwitz_zeta, hurwitz_zeta_ds
from .numkernel import MIN_DIGITS, precision, to_real

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CHECK = 0, 1, 2, 3
DEFAULT_DISPLAY_DIGITS = 30
GUARD = 10


class UsageError(Exception):
    pass


def format_decimal(x, digits: int) -> str:
    """Fixed-point decimal string with exactly ``digits`` significant digits."""
    x = mpf(x)
    if x == 0:
        return "0." + "0" * (digits - 1) if digits > 1 else "0"
    text = mpmath.nstr(x, digits, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
    return text.rstrip(".") if text.endswith(".") else text


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, str]
    digits: int
    results: dict = field(default_factory=dict)
    error_estimates: dict[str, str] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "digits": self.digits,
            "results": self.results,
            "error_estimates": self.error_estimates,
            "warnings": self.warnings,
        }


def dumps_json(record: OutputRecord | dict) -> str:
    data = record.as_dict() if isinstance(record, OutputRecord) else record
    return json.dumps(data, indent=2, ensure_ascii=True)


def _render_text(record: OutputRecord) -> str:
    lines = [f"# {record.command}  digits={record.digits}"]
    if record.inputs:
        lines.append("# " + " ".join(f"{k}={v}" for k, v in record.inputs.items()))
    if record.command == "table":
        lines.append(f"{'p':>6}  {'zeta_half':<{record.digits + 8}}  ratio_p2")
        for p, row in record.results.items():
            lines.append(f"{p:>6}  {row['zeta_half']:<{record.digits + 8}}  {row['ratio_p2']}")
    elif record.command == "check":
        for name, dev in record.results.items():
            tol = record.error_estimates[name]
            status = "FAIL" if f"FAILED: {name}" in record.warnings else "PASS"
            # compact for reading; json/csv keep the full decimal strings
            dev, tol = mpmath.nstr(mpf(dev), 3), mpmath.nstr(mpf(tol), 3)
            lines.append(f"{status}  {name:<28}  deviation={dev:<10}  tolerance={tol}")
    else:
        width = max((len(k) for k in record.results), default=0)
        for k, v in record.results.items():
            lines.append(f"{k:<{width}}  {v}")
        for k, v in record.error_estimates.items():
            lines.append(f"{'error(' + k + ')':<{width}}  {v}")
    for w in record.warnings:
        if not w.startswith("FAILED: "):
            lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def _render_csv(record: OutputRecord) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if record.command == "table":
        writer.writerow(["p", "zeta_half", "ratio_p2"])
        for p, row in record.results.items():
            writer.writerow([p, row["zeta_half"], row["ratio_p2"]])
    elif record.command == "check":
        writer.writerow(["check", "deviation", "tolerance", "status"])
        for name, dev in record.results.items():
            status = "fail" if f"FAILED: {name}" in record.warnings else "pass"
            writer.writerow([name, dev, record.error_estimates[name], status])
    else:
        writer.writerow(["key", "value"])
        for k, v in record.results.items():
            writer.writerow([k, v])
        for k, v in record.error_estimates.items():
            writer.writerow([f"error({k})", v])
        for w in record.warnings:
            writer.writerow(["warning", w])
    return buf.getvalue()


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return dumps_json(record) + "\n"
    if fmt == "csv":
        return _render_csv(record)
    return _render_text(record)


# --- commands --------------------------------------------------------------------------------------

def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"malformed order range {text!r}; expected A..B") from None
    if lo < 2 or hi < lo:
        raise UsageError(f"malformed order range {text!r}; need 2 <= A <= B")
    return lo, hi


def cmd_elliptic(args, digits: int) -> OutputRecord:
    fmt = lambda x: format_decimal(x, digits)
    if args.s is None:
        value = elliptic_casimir(args.p)
        s_text = "-1/2"
    else:
        value = elliptic_zeta(to_real(args.s), args.p)
        s_text = args.s
    return OutputRecord("elliptic", {"p": str(args.p), "s": s_text}, digits, {"zeta": fmt(value)})


def cmd_table(args, digits: int) -> OutputRecord:
    lo, hi = _parse_range(args.p)
    results = {}
    for p in range(lo, hi + 1):
        value = elliptic_casimir(p)
        results[str(p)] = {
            "zeta_half": format_decimal(value, digits),
            "ratio_p2": format_decimal(value / p**2, digits),
        }
    return OutputRecord("table", {"p": f"{lo}..{hi}"}, digits, results)


def cmd_surface(args, digits: int) -> OutputRecord:
    fmt = lambda x: format_decimal(x, digits)
    sig = TriangleSignature(args.p, args.q, args.r)
    rep = surface_report(sig, charged=args.charged)
    results = {"area": fmt(rep.area)}
    for i, (order, value) in enumerate(rep.elliptic_terms, start=1):
        results[f"elliptic_{i}_p{order}"] = fmt(value)
    results.update(
        elliptic_sum=fmt(rep.elliptic_sum),
        identity_density=fmt(rep.identity_density),
        identity_total=fmt(rep.identity_total),
        zeta_half_partial=fmt(rep.zeta_half_partial),
        energy_partial=fmt(rep.energy_partial),
    )
    inputs = {"p": str(args.p), "q": str(args.q), "r": str(args.r), "charged": str(bool(args.charged)).lower()}
    return OutputRecord("surface", inputs, digits, results, warnings=[rep.excluded])


def cmd_identity(args, digits: int) -> OutputRecord:
    fmt = lambda x: format_decimal(x, digits)
    density = identity_zeta(mpf(-0.5))
    results = {"identity_density": fmt(density)}
    inputs = {}
    if args.area is not None:
        area = to_real(args.area)
        if area <= 0:
            raise DomainError(f"area must be positive, got {args.area}")
        inputs["area"] = args.area
        results["identity_total"] = fmt(area * density)
    return OutputRecord("identity", inputs, digits, results)


def cmd_barnes(args, digits: int) -> OutputRecord:
    alpha, beta = args.omega
    s, gamma = to_real(args.s), to_real(args.gamma)
    func = barnes_zeta2_ds if args.deriv else barnes_zeta2
    key = "barnes_zeta2_ds" if args.deriv else "barnes_zeta2"
    inputs = {"s": args.s, "gamma": args.gamma, "omega": f"{alpha} {beta}", "deriv": str(args.deriv).lower()}
    return OutputRecord("barnes", inputs, digits, {key: format_decimal(func(s, gamma, alpha, beta), digits)})


def cmd_hurwitz(args, digits: int) -> OutputRecord:
    s, w = to_real(args.s), to_real(args.w)
    func = hurwitz_zeta_ds if args.deriv else hurwitz_zeta
    key = "hurwitz_zeta_ds" if args.deriv else "hurwitz_zeta"
    inputs = {"s": args.s, "w": args.w, "deriv": str(args.deriv).lower()}
    return OutputRecord("hurwitz", inputs, digits, {key: format_decimal(func(s, w), digits)})


def cmd_check(args, digits: int) -> OutputRecord:
    results, tolerances, warnings = {}, {}, []
    for r in checks.run_suite(args.suite):
        results[r.name] = format_decimal(r.deviation, digits)
        tolerances[r.name] = format_decimal(r.tolerance, digits)
        if not r.passed:
            warnings.append(f"FAILED: {r.name}")
    return OutputRecord("check", {"suite": args.suite}, digits, results, tolerances, warnings)


COMMANDS = {
    "elliptic": cmd_elliptic,
    "table": cmd_table,
    "surface": cmd_surface,
    "identity": cmd_identity,
    "barnes": cmd_barnes,
    "hurwitz": cmd_hurwitz,
    "check": cmd_check,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--digits", type=int, default=DEFAULT_DISPLAY_DIGITS,
                        help="significant digits displayed (working precision is digits+10)")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")

    parser = _Parser(prog="orbicasimir", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("elliptic", parents=[common], help="zeta_p(s) of one elliptic order (default s=-1/2)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", default=None)

    p = sub.add_parser("table", parents=[common], help="zeta_p(-1/2) and zeta_p(-1/2)/p^2 over a range of p")
    p.add_argument("--p", required=True, help="range A..B")

    p = sub.add_parser("surface", parents=[common], help="report for a (p,q,r) triangle surface")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--charged", action="store_true", help="double the energy (charged scalar)")

    p = sub.add_parser("identity", parents=[common], help="identity-element zeta(-1/2) per unit area")
    p.add_argument("--area", default=None)

    p = sub.add_parser("barnes", parents=[common], help="raw two-dimensional Barnes zeta")
    p.add_argument("--s", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--omega", type=int, nargs=2, required=True, metavar=("ALPHA", "BETA"))
    p.add_argument("--deriv", action="store_true")

    p = sub.add_parser("hurwitz", parents=[common], help="raw Hurwitz zeta")
    p.add_argument("--s", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--deriv", action="store_true")

    p = sub.add_parser("check", parents=[common], help="run oracle self-checks")
    p.add_argument("--suite", choices=(*checks.SUITES, "all"), default="all")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.digits < 1:
            raise UsageError("--digits must be >= 1")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    working = max(MIN_DIGITS, args.digits + GUARD)
    try:
        with precision(working):
            record = COMMANDS[args.command](args, args.digits)
            text = render(record, args.format)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ConvergenceError, UnsupportedVariantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(text)
    if args.command == "check" and record.warnings:
        return EXIT_CHECK
    return EXIT_OK
