"""zetaseries command line.

Exit codes: 0 success, 1 verification failure, 2 bad flags or domain
errors, 3 a series that did not converge within its budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import coeffs, constants, gammafns, polys, verify, zetaser
from .errors import DomainError, NotConverged
from .mpnum import PrecisionPolicy, format_rational, parse_complex, parse_rational

DEFAULT_DIGITS = 34
DEFAULT_MAX_TERMS = 10000

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NOT_CONVERGED = 0, 1, 2, 3

SERIES_NAMES = {
    "hasse": "HasseHurwitz",
    "ser": "SerZeta",
    "ser-gregory": "SerGregoryZeta",
    "euler-eta": "EulerEtaZeta",
    "cauchy": "CauchyZeta",
    "gregory-hurwitz": "GregoryHurwitz",
    "cauchy-hurwitz": "CauchyHurwitz",
    "norlund": "NorlundHurwitz",
    "norlund-shift0": "NorlundZetaShift0",
    "norlund-shift1": "NorlundZetaShift1",
    "higher-gregory": "HigherGregoryRelation",
    "stirling": "StirlingZeta",
    "ser-hurwitz": "SerHurwitzRelation",
    "harmonic-hurwitz": "HarmonicHurwitz",
    "harmonic": "HarmonicZeta",
}
COEFF_FAMILIES = ("gregory", "cauchy2", "gregory-higher", "stirling1", "harmonic")


class UsageError(Exception):
    """Bad flag values; reported with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# argument types
# ---------------------------------------------------------------------------

def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _real(text: str) -> Fraction:
    """p/q, an integer, or an exact decimal literal."""
    try:
        re, im = parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if im:
        raise argparse.ArgumentTypeError(f"expected a real number, got {text!r}")
    return re


def _complex(text: str) -> str:
    try:
        parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _lift(text: str):
    if text == "auto":
        return "auto"
    return _nonneg(text)


def _params(items) -> dict:
    """k=v pairs; list-valued keys (a_list, q_list) take comma-separated rationals."""
    out = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--params expects key=value, got {item!r}")
        key = key.replace("-", "_")
        try:
            if key in ("a_list", "q_list"):
                out[key] = [parse_rational(x) for x in value.split(",")]
            elif key in ("m", "r"):
                out[key] = int(value)
            elif key == "a":
                out[key] = parse_rational(value)
            else:
                raise UsageError(f"unknown parameter {key!r}")
        except ValueError as exc:
            raise UsageError(f"bad value for {key}: {exc}") from None
    return out


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zetaseries", description="Finite-difference series for zeta, gamma and related constants.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("coeff", help="exact coefficient tables")
    c.add_argument("--family", required=True, choices=COEFF_FAMILIES)
    c.add_argument("--n", required=True, type=_positive)
    c.add_argument("--k", type=_positive, default=None)
    c.add_argument("--format", choices=("json", "csv", "text"), default="text")

    q = sub.add_parser("poly", help="Fontana-Bessel and Norlund polynomials")
    q.add_argument("--family", required=True, choices=("fontana-bessel", "norlund"))
    q.add_argument("--n", required=True, type=_nonneg)
    q.add_argument("--m", type=_positive, default=1)
    q.add_argument("--eval-at", type=_rational, default=None)

    e = sub.add_parser("eval", help="evaluate one zeta series")
    e.add_argument("--series", required=True, choices=sorted(set(SERIES_NAMES) | set(zetaser.FAMILIES)))
    e.add_argument("--s", required=True, type=_complex)
    e.add_argument("--v", type=_real, default=None)
    e.add_argument("--m", type=_positive, default=1)
    e.add_argument("--a", type=_rational, default=Fraction(0))
    e.add_argument("--k", type=_positive, default=1)
    e.add_argument("--weight", choices=("H1", "H2"), default="H1")
    _numeric_flags(e)

    k = sub.add_parser("const", help="Euler, Stieltjes and Maclaurin constants")
    k.add_argument("--name", required=True, choices=("gamma", "stieltjes", "delta"))
    k.add_argument("--m", type=_nonneg, default=None)
    k.add_argument("--v", type=_real, default=None)
    k.add_argument("--method", default=None)
    k.add_argument("--params", nargs="*", default=[])
    k.add_argument("--exact-terms", type=_nonneg, default=None)
    _numeric_flags(k)

    f = sub.add_parser("special", help="digamma, trigamma and log-gamma")
    f.add_argument("--fn", required=True, choices=("digamma", "trigamma", "lngamma"))
    f.add_argument("--v", required=True, type=_real)
    f.add_argument("--method", default=None)
    f.add_argument("--params", nargs="*", default=[])
    _numeric_flags(f)

    w = sub.add_parser("verify", help="run the self-check suites")
    w.add_argument("--suite", choices=("all",) + tuple(verify.SUITES), default="all")
    w.add_argument("--digits", type=_positive, default=25)

    b = sub.add_parser("bench", help="terms and time needed per family")
    b.add_argument("--quantity", required=True, choices=("gamma", "zeta"))
    b.add_argument("--point", type=_complex, default="2")
    b.add_argument("--families", default=None, help="comma-separated family or method names")
    _numeric_flags(b)
    return p


def _numeric_flags(p):
    p.add_argument("--digits", type=_positive, default=DEFAULT_DIGITS)
    p.add_argument("--max-terms", type=_positive, default=DEFAULT_MAX_TERMS)
    p.add_argument("--lift", type=_lift, default="auto")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _coeff_rows(args) -> tuple[str, list[tuple[int, Fraction]]]:
    n = args.n
    if args.family == "stirling1":
        return "l", list(enumerate(coeffs.stirling1_row(n)))
    if args.family == "gregory-higher":
        return "n", coeffs.table("gregory-higher", 1, n, k=args.k or 1)
    if args.k is not None:
        raise UsageError(f"--k does not apply to {args.family}")
    return "n", coeffs.table(args.family, 1, n)


def _fmt(v) -> str:
    return str(v) if isinstance(v, int) else format_rational(v)


def cmd_coeff(args, out) -> int:
    index, rows = _coeff_rows(args)
    if args.format == "json":
        doc = [{index: i, "value": _fmt(v)} for i, v in rows]
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([index, "value"])
        writer.writerows((i, _fmt(v)) for i, v in rows)
        out.write(buf.getvalue())
    else:
        width = len(str(rows[-1][0]))
        for i, v in rows:
            out.write(f"{i:>{width}}  {_fmt(v)}\n")
    return EXIT_OK


def cmd_poly(args, out) -> int:
    if args.family == "fontana-bessel":
        p, var = polys.fontana_bessel(args.n), "x"
        doc = {"family": "fontana-bessel", "n": args.n}
    else:
        p, var = polys.norlund_poly(args.n, args.m), "a"
        doc = {"family": "norlund", "n": args.n, "m": args.m}
    doc["poly"] = p.to_json(var)
    if args.eval_at is not None:
        doc["at"] = str(args.eval_at)
        doc["value"] = format_rational(polys.poly_eval(p, args.eval_at))
    out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def _emit_result(doc: dict, result, digits: int, out) -> int:
    doc.update(result.to_json(digits))
    out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


def cmd_eval(args, out) -> int:
    family = SERIES_NAMES.get(args.series, args.series)
    v = args.v
    if family == "HasseHurwitz" and v is None:
        v = Fraction(1)
    params = dict(family=family, m=args.m, a=args.a, k=args.k, weight=args.weight)
    if v is not None:
        params["v"] = v
    spec = zetaser.SeriesSpec(**params)
    if v is not None and not spec.is_hurwitz and v != 1:
        raise UsageError(f"{args.series} takes no --v")
    kw = dict(lift=args.lift, max_n=args.max_terms)
    if family == "EulerEtaZeta":
        kw.pop("lift")
    result = zetaser.evaluate(spec, args.s, PrecisionPolicy(args.digits), **kw)
    doc = {"series": family, "s": args.s}
    if spec.is_hurwitz:
        doc["v"] = str(spec.v)
    if family.startswith("Norlund"):
        doc.update(m=spec.m, a=str(spec.a))
    if family in ("HigherGregoryRelation", "StirlingZeta"):
        doc["k"] = spec.k
    if family.startswith("Harmonic"):
        doc["weight"] = spec.weight
    return _emit_result(doc, result, args.digits, out)


def cmd_const(args, out) -> int:
    policy = PrecisionPolicy(args.digits)
    params = _params(args.params)
    kw = dict(lift=args.lift, max_n=args.max_terms)
    doc = {"name": args.name}
    if args.name == "gamma":
        method = args.method or "fontana-mascheroni"
        if args.v is not None or args.m is not None:
            raise UsageError("gamma takes its parameters through --params")
        gamma_kw = {key: params[key] for key in ("m", "a", "a_list", "q_list") if key in params}
        if "r" in params:
            raise UsageError("gamma methods use m, not r")
        doc["method"] = method
        result = constants.euler_gamma_eval(method, policy, **gamma_kw, **kw)
        if args.exact_terms is not None:
            ex = constants.exact_terms(method, args.exact_terms, **gamma_kw)
            doc["exact_terms"] = {"constant": ex.constant, "terms": [format_rational(t) for t in ex.terms]}
        return _emit_result(doc, result, args.digits, out)
    if args.exact_terms is not None:
        raise UsageError("--exact-terms applies to --name gamma")
    if set(params) - {"r", "a"}:
        raise UsageError(f"{args.name} accepts only r and a in --params")
    if args.name == "stieltjes":
        m = 0 if args.m is None else args.m
        if args.v is None:
            method = args.method or "hasse"
            result = constants.stieltjes_eval(m, method, policy, **kw)
        else:
            method = args.method or "gregory"
            result = constants.gen_stieltjes_eval(m, args.v, method, policy, **params, **kw)
    else:
        m = 1 if args.m is None else args.m
        method = args.method or "gregory"
        if args.v is None:
            result = constants.delta_eval(m, method, policy, **params, **kw)
        else:
            result = constants.gen_delta_eval(m, args.v, method, policy, **params, **kw)
    doc.update(m=m, method=method)
    if args.v is not None:
        doc["v"] = str(args.v)
    return _emit_result(doc, result, args.digits, out)


def cmd_special(args, out) -> int:
    policy = PrecisionPolicy(args.digits)
    params = _params(args.params)
    if set(params) - {"r", "a"}:
        raise UsageError("special functions accept only r and a in --params")
    kw = dict(lift=args.lift, max_n=args.max_terms)
    if args.fn == "digamma":
        method = args.method or "gregory"
        result = gammafns.digamma_eval(args.v, method, policy, **params, **kw)
    elif args.fn == "lngamma":
        method = args.method or "gregory"
        result = gammafns.lngamma_eval(args.v, method, policy, **params, **kw)
    else:
        if params:
            raise UsageError("trigamma methods take no parameters")
        method = args.method or "hasse"
        result = gammafns.trigamma_eval(args.v, method, policy, **kw)
    doc = {"fn": args.fn, "v": str(args.v), "method": method}
    return _emit_result(doc, result, args.digits, out)


def cmd_verify(args, out) -> int:
    checks = verify.run_suites(args.suite, args.digits)
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed} passed, {failed} failed\n")
    return EXIT_FAILED if failed else EXIT_OK


BENCH_ZETA = ("hasse", "ser", "ser-gregory", "euler-eta", "cauchy", "norlund-shift0", "higher-gregory", "harmonic")


def _bench_one(args, name: str):
    policy = PrecisionPolicy(args.digits)
    kw = dict(lift=args.lift, max_n=args.max_terms)
    if args.quantity == "gamma":
        if name not in constants.GAMMA_METHODS:
            raise UsageError(f"unknown gamma method {name!r}")
        extra = {"product": {"a_list": [Fraction(1), Fraction(-1, 2)]}}.get(name, {})
        return constants.euler_gamma_eval(name, policy, **extra, **kw)
    family = SERIES_NAMES.get(name, name)
    spec = zetaser.SeriesSpec(family)
    if family == "EulerEtaZeta":
        kw.pop("lift")
    return zetaser.evaluate(spec, args.point, policy, **kw)


def cmd_bench(args, out) -> int:
    default = constants.GAMMA_METHODS if args.quantity == "gamma" else BENCH_ZETA
    names = default if args.families is None else [x.strip() for x in args.families.split(",") if x.strip()]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "terms_used", "working_bits", "wall_time"])
    for name in names:
        t0 = time.perf_counter()
        r = _bench_one(args, name)
        wall = time.perf_counter() - t0
        terms = r.n_terms if r.converged else f"{r.n_terms}+"
        writer.writerow([name, terms, r.working_bits, f"{wall:.4f}"])
    out.write(buf.getvalue())
    return EXIT_OK


COMMANDS = {
    "coeff": cmd_coeff, "poly": cmd_poly, "eval": cmd_eval, "const": cmd_const,
    "special": cmd_special, "verify": cmd_verify, "bench": cmd_bench,
}


def _attach_negatives(argv: list[str]) -> list[str]:
    """Rewrite '--a -1/2' as '--a=-1/2' so argparse does not read a flag."""
    out: list[str] = []
    for tok in argv:
        if (out and out[-1].startswith("--") and "=" not in out[-1] and len(tok) > 1
                and tok[0] == "-" and (tok[1].isdigit() or tok[1] == ".")):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_negatives(argv))
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"zetaseries: error: {exc}\n")
        return EXIT_USAGE
    except NotConverged as exc:
        err.write(f"zetaseries: not converged: {exc}\n")
        return EXIT_NOT_CONVERGED
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        err.write(f"zetaseries: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
