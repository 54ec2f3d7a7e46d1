"""Self-check suites behind ``zetaseries verify``.

Each suite returns a list of :class:`Check` records.  Exact checks compare
rationals; numeric checks compare against :mod:`zetaseries.oracle` at a
tolerance derived from the requested digits.  Output lines are stable for a
fixed digit count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import coeffs, constants, gammafns, oracle, polys, zetaser
from .mpnum import PrecisionPolicy

F = Fraction


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}/{self.name}" + (f" {self.detail}" if self.detail else "")


def _err(x) -> str:
    return f"err={float(x):.1e}"


def _guarded(suite: str, name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash counts as a failure, not an abort
        return Check(suite, name, False, f"{type(exc).__name__}: {exc}")
    return Check(suite, name, ok, detail)


# ---------------------------------------------------------------------------
# exact tables and identities
# ---------------------------------------------------------------------------

GREGORY_1_6 = (F(1, 2), F(-1, 12), F(1, 24), F(-19, 720), F(3, 160), F(-863, 60480))
CAUCHY_1_6 = (F(1, 2), F(5, 12), F(3, 8), F(251, 720), F(95, 288), F(19087, 60480))
CENTRAL_2_8 = (F(-1, 12), F(11, 720), F(-191, 60480), F(2497, 3628800))
PSI_1_4 = (
    (F(1, 2), F(1)),
    (F(-1, 12), F(0), F(1, 2)),
    (F(1, 24), F(0), F(-1, 4), F(1, 6)),
    (F(-19, 720), F(0), F(1, 6), F(-1, 6), F(1, 24)),
)


def norlund_table(n: int, m: int) -> polys.RationalPoly:
    """Closed forms of N_{0..3,m}(a) in a, for a given m."""
    m = F(m)
    if n == 0:
        c = [m]
    elif n == 1:
        c = [m * m / 2, m]
    elif n == 2:
        c = [m ** 3 / 6 - m * m / 4, m * m / 2 - m / 2, m / 2]
    elif n == 3:
        c = [m * m / 6 - m ** 3 / 6 + m ** 4 / 24,
             m / 3 - m * m / 2 + m ** 3 / 6,
             -m / 2 + m * m / 4,
             m / 6]
    else:
        raise ValueError("closed forms only for n <= 3")
    return polys.RationalPoly(c)


def suite_coeffs(digits: int) -> list[Check]:
    S = "coeffs"

    def gregory_list():
        got = tuple(coeffs.gregory(n) for n in range(1, 7))
        return got == GREGORY_1_6, "G_1..G_6"

    def cauchy_list():
        got = tuple(coeffs.cauchy2(n) for n in range(1, 7))
        return got == CAUCHY_1_6, "C_1..C_6"

    def central():
        got = tuple(polys.norlund_value(2 * n, 1, n - 1) for n in range(1, 5))
        return got == CENTRAL_2_8, "M_2..M_8"

    def psi_list():
        ok = all(polys.fontana_bessel(n) == polys.RationalPoly(c) for n, c in enumerate(PSI_1_4, 1))
        return ok, "psi_1..psi_4"

    def norlund_small():
        ok = all(polys.norlund_poly(n, m) == norlund_table(n, m) for n in range(4) for m in range(1, 6))
        return ok, "N_0..N_3, m=1..5"

    def gregory_cauchy_gap():
        ok = all(coeffs.cauchy2(n - 1) - coeffs.cauchy2(n) == coeffs.gregory_abs(n) for n in range(1, 61))
        return ok, "C_(n-1)-C_n=|G_n|, n<=60"

    def norlund_psi():
        ok = True
        for n in range(0, 21):
            psi_next = polys.fontana_bessel(n + 1)
            psi_n = polys.fontana_bessel(n)
            for m in range(1, 6):
                p = polys.norlund_poly(n, m)
                ok &= p == psi_next.shift(m) - psi_next
                ok &= p == sum((psi_n.shift(k) for k in range(m)), polys.RationalPoly())
        return ok, "N_(n,m)=psi_(n+1)(a+m)-psi_(n+1)(a)=sum psi_n(a+k), n<=20, m<=5"

    def norlund_derivative():
        for n in range(0, 21):
            for m in range(1, 6):
                polys.norlund_derivative(n, m)  # raises on mismatch
        return True, "dN/da=binom(a+m,n)-binom(a,n), n<=20, m<=5"

    def stirling_ratio():
        for k in (1, 2, 3):
            for n in range(0, 51):
                if coeffs.stirling_ratio(n, k) != coeffs._stirling_ratio_closed(n, k):
                    return False, f"n={n} k={k}"
        return True, "k<=3, n<=50"

    def binomial_swap():
        ok = all(F(math.comb(n, k), k + 1) == F(math.comb(n + 1, k + 1), n + 1)
                 for n in range(51) for k in range(51))
        return ok, "n,k<=50"

    checks = [
        ("gregory-list", gregory_list), ("cauchy-list", cauchy_list), ("central-norlund", central),
        ("psi-list", psi_list), ("norlund-closed-forms", norlund_small), ("gregory-cauchy-gap", gregory_cauchy_gap),
        ("norlund-psi", norlund_psi), ("norlund-derivative", norlund_derivative),
        ("stirling-ratio", stirling_ratio), ("binomial-swap", binomial_swap),
    ]
    return [_guarded(S, name, fn) for name, fn in checks]


# ---------------------------------------------------------------------------
# series against the Euler-Maclaurin oracle
# ---------------------------------------------------------------------------

SERIES_CASES = (
    ("HasseZeta", {}, "3"),
    ("HasseHurwitz", {"v": F(1, 2)}, "1/2"),
    ("SerZeta", {}, "-1"),
    ("SerGregoryZeta", {}, "2"),
    ("EulerEtaZeta", {}, "0.5+14.134725i"),
    ("CauchyZeta", {}, "3"),
    ("GregoryHurwitz", {"v": F(1, 2)}, "2"),
    ("CauchyHurwitz", {"v": F(3, 2)}, "1/2"),
    ("NorlundHurwitz", {"v": F(2), "m": 2, "a": F(-1, 2)}, "3"),
    ("NorlundZetaShift0", {"m": 3, "a": F(1)}, "2"),
    ("NorlundZetaShift1", {"m": 2, "a": F(2)}, "-1"),
    ("HigherGregoryRelation", {"k": 2}, "1/2"),
    ("StirlingZeta", {"v": F(3, 2), "k": 3}, "1/2"),
    ("SerHurwitzRelation", {"v": F(2)}, "3"),
    ("HarmonicHurwitz", {"v": F(2)}, "3"),
    ("HarmonicZeta", {"weight": "H2"}, "2"),
)


def suite_series(digits: int) -> list[Check]:
    policy = PrecisionPolicy(digits)
    tol = 10.0 ** -(digits - 3)
    cfg = oracle.OracleConfig(digits + 5)
    out = []
    for family, params, s in SERIES_CASES:
        spec = zetaser.SeriesSpec(family, **params)
        v_ref = spec.v - 1 if family == "HarmonicHurwitz" else spec.v

        def run(spec=spec, s=s, v_ref=v_ref):
            got = zetaser.evaluate(spec, s, policy).require().value
            diff = abs(got - oracle.hurwitz_ref(zetaser.exact_s(s).big(policy.output_bits + 32), v_ref, cfg))
            return float(diff) < tol, f"s={s} v={spec.v} " + _err(diff)

        out.append(_guarded("series", family, run))
    return out


# ---------------------------------------------------------------------------
# functional relations
# ---------------------------------------------------------------------------

RELATION_CASES = (
    ("general", 3, 25, 2, F(1, 2)),
    ("psi", 4, 35, 1, 2),
    ("m2-pole", 3, 25, 2, 1),
    ("gregory-half", 3, 30, 1, 0),
    ("harmonic-zeta", -2, 1, 4, 0),
    ("zeta-double", -3, 1, 1, 0),
    ("zeta-a", -1, 1, 2, 1),
    ("ser-hurwitz", F(5, 2), 35, 1, 0),
)


def suite_relations(digits: int) -> list[Check]:
    policy = PrecisionPolicy(digits)
    tol = 10.0 ** -(digits - 7)
    out = []
    for rid, s, v, m, a in RELATION_CASES:
        def run(rid=rid, s=s, v=v, m=m, a=a):
            r = zetaser.verify_relation(rid, s, v, m, a, policy)
            return float(r) < tol, f"s={s} v={v} m={m} a={a} residual={float(r):.1e}"

        out.append(_guarded("relations", rid, run))
    return out


# ---------------------------------------------------------------------------
# contour integral for psi_n
# ---------------------------------------------------------------------------

def suite_appendix(digits: int) -> list[Check]:
    policy = PrecisionPolicy(min(digits, 20))
    out = []
    for n in range(1, 9):
        def run(n=n):
            grid = [F(j, 2) for j in range(-2, 2 * n - 1)]
            worst = max(abs(float(polys.psi_integral(n, x, policy)) - float(polys.psi_value(n, x))) for x in grid)
            return worst < 1e-10, f"x in [-1, {n - 1}] " + _err(worst)

        out.append(_guarded("appendix", f"psi_{n}", run))
    return out


# ---------------------------------------------------------------------------
# constants and gamma-function values
# ---------------------------------------------------------------------------

GAMMA_CASES = (
    ("fontana-mascheroni", {}),
    ("norlund", {"m": 2, "a": F(1, 2)}),
    ("paired-rational", {"a": F(1)}),
    ("product", {"m": 1, "a_list": [F(1), F(-1, 2)]}),
    ("gregory2", {}),
    ("cauchy", {}),
    ("lngamma-form", {"m": 1, "a": F(0)}),
)


def suite_constants(digits: int) -> list[Check]:
    policy = PrecisionPolicy(digits)
    tol = 10.0 ** -(digits - 3)
    gamma = oracle.const_ref("gamma", digits + 10)
    out = []
    for method, params in GAMMA_CASES:
        def run(method=method, params=params):
            d = abs(constants.euler_gamma(method, policy, **params) - gamma)
            return float(d) < tol, _err(d)

        out.append(_guarded("constants", f"gamma-{method}", run))

    def stieltjes_1():
        ref = oracle.laurent_coeff_ref(1, oracle.OracleConfig(min(digits, 20)))
        d = abs(constants.stieltjes(1, "hasse", policy) - ref)
        return float(d) < 1e-12, _err(d)

    def delta_1():
        ref = oracle.const_ref("ln2pi", digits + 10) / 2 - 1
        d = max(abs(constants.delta(1, m, policy) - ref) for m in ("gregory", "cauchy"))
        return float(d) < tol, _err(d)

    out.append(_guarded("constants", "stieltjes-1", stieltjes_1))
    out.append(_guarded("constants", "delta-1", delta_1))
    return out


def suite_special(digits: int) -> list[Check]:
    policy = PrecisionPolicy(digits)
    tol = 10.0 ** -(digits - 3)
    cfg = oracle.OracleConfig(digits + 5)
    v = F(5, 2)
    refs = {
        "digamma": (gammafns.digamma, gammafns.DIGAMMA_METHODS, oracle.digamma_ref(v, cfg)),
        "lngamma": (gammafns.lngamma, gammafns.LNGAMMA_METHODS, oracle.lngamma_ref(v, cfg)),
        "trigamma": (gammafns.trigamma, gammafns.TRIGAMMA_METHODS, oracle.trigamma_ref(v, cfg)),
    }
    out = []
    for fn_name, (fn, methods, ref) in refs.items():
        for method in methods:
            def run(fn=fn, method=method, ref=ref):
                d = abs(fn(v, method, policy) - ref)
                return float(d) < tol, f"v={v} " + _err(d)

            out.append(_guarded("special", f"{fn_name}-{method}", run))
    return out


SUITES = {
    "coeffs": suite_coeffs,
    "series": suite_series,
    "relations": suite_relations,
    "appendix": suite_appendix,
    "constants": suite_constants,
    "special": suite_special,
}


def run_suites(name: str = "all", digits: int = 25) -> list[Check]:
    if name != "all" and name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if digits < 10:
        raise ValueError("verify needs at least 10 digits")
    names = list(SUITES) if name == "all" else [name]
    return [c for n in names for c in SUITES[n](digits)]
