"""Euler's constant, Stieltjes constants and the Maclaurin coefficients delta_m.

Laurent and Maclaurin conventions:

    zeta(s, v) = 1/(s-1) + sum_m (-1)^m gamma_m(v)/m! (s-1)^m,   gamma_0(v) = -Psi(v)
    zeta(s, v) = 1/(s-1) + 3/2 - v + sum_{m>=1} (-1)^m delta_m(v)/m! s^m

so delta_m(v) = (-1)^m (zeta^(m)(0, v) + m!).

Values come from series at a shifted argument (``lift="auto"``) through
gamma_m(v) = gamma_m(v+J) + sum_{j<J} ln^m(v+j)/(v+j) and
delta_m(v) = delta_m(v+J) + sum_{j<J} ln^m(v+j).  Euler's constant methods
are -Psi(1) for the matching digamma family.  With ``lift=0`` every series
runs literally.  :func:`exact_terms` lists the rational terms of the
rational-term series for gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import coeffs, gammafns, polys, weights
from ._series import DEFAULT_MAX_N, SeriesJob, lift_for, real_arg
from .errors import ConstraintViolated, DomainError
from .findiff import EvalResult
from .mpnum import BigComplex, BigReal

__all__ = [
    "GAMMA_METHODS", "STIELTJES_METHODS", "GEN_METHODS", "DELTA_METHODS", "ExactSeries",
    "euler_gamma", "euler_gamma_eval", "exact_terms", "stieltjes", "stieltjes_eval",
    "gen_stieltjes", "gen_stieltjes_eval", "delta", "delta_eval", "gen_delta", "gen_delta_eval", "f_m",
]

GAMMA_METHODS = ("fontana-mascheroni", "norlund", "paired-rational", "product", "gregory2", "cauchy",
                 "lngamma-form")
STIELTJES_METHODS = ("ser", "hasse", "gregory", "cauchy", "harmonic", "harmonic2")
GEN_METHODS = ("gregory", "cauchy", "norlund", "hasse", "harmonic")
DELTA_METHODS = ("gregory", "cauchy", "norlund")


# ---------------------------------------------------------------------------
# Euler's constant
# ---------------------------------------------------------------------------

def _product_params(a_list, q_list, m: int):
    """Check (1+a_1)_m^q_1 ... (1+a_k)_m^q_k = 1 exactly for rational a and q."""
    if not a_list:
        raise DomainError("the product family needs at least one a")
    if not isinstance(m, int) or m < 1:
        raise DomainError("m must be a positive integer")
    a_list = [real_arg(a) for a in a_list]
    q_list = [Fraction(1)] * len(a_list) if q_list is None else [real_arg(q) for q in q_list]
    if len(q_list) != len(a_list):
        raise DomainError("a and q lists differ in length")
    if any(a <= -1 for a in a_list):
        raise DomainError("every a must exceed -1")
    if sum(q_list) == 0:
        raise DomainError("the q weights sum to zero")
    # raise everything to the common denominator L of the q so the exponents are integers
    L = math.lcm(*(q.denominator for q in q_list))
    prod = Fraction(1)
    for a, q in zip(a_list, q_list):
        poch = math.prod((1 + a + j for j in range(m)), start=Fraction(1))
        prod *= poch ** int(q * L)
    if prod != 1:
        raise ConstraintViolated("(1+a_1)_m^q_1 ... (1+a_k)_m^q_k must equal 1")
    return a_list, q_list


def euler_gamma_eval(method="fontana-mascheroni", policy=None, *, m=1, a=0, a_list=None, q_list=None,
                     lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """Euler's constant by one of :data:`GAMMA_METHODS`."""
    kw = dict(lift=lift, max_n=max_n, terms=terms)
    if method == "fontana-mascheroni":
        return _negate(gammafns.digamma_eval(1, "gregory", policy, **kw))
    if method == "norlund":
        return _negate(gammafns.digamma_eval(1, "norlund", policy, r=m, a=a, **kw))
    if method == "paired-rational":
        a = real_arg(a)
        if a <= -1:
            raise DomainError("a must exceed -1")
        b = -a / (1 + a)
        parts = [gammafns.digamma_eval(1, "psi", policy, a=x, **kw) for x in (a, b)]
        return _combine(parts, [Fraction(-1, 2)] * 2)
    if method == "product":
        a_list, q_list = _product_params(a_list, q_list, m)
        parts = [gammafns.digamma_eval(1, "norlund", policy, r=m, a=x, **kw) for x in a_list]
        total = sum(q_list)
        return _combine(parts, [-q / total for q in q_list])
    if method == "gregory2":
        return _negate(gammafns.digamma_eval(1, "gregory2", policy, **kw))
    if method == "cauchy":
        r = gammafns.digamma_eval(2, "cauchy", policy, **kw)
        return _shift(_negate(r), 1)
    if method == "lngamma-form":
        a = real_arg(a)
        if m + 2 * a == 0:
            raise DomainError("m + 2a vanishes")
        return _negate(gammafns.digamma_eval(1, "lngamma-form", policy, r=m, a=a, **kw))
    raise DomainError(f"unknown method {method!r}")


def euler_gamma(method="fontana-mascheroni", policy=None, **kw) -> BigReal:
    return euler_gamma_eval(method, policy, **kw).require().real()


def _negate(r: EvalResult) -> EvalResult:
    return EvalResult(-r.value, r.n_terms, r.working_bits, r.error_estimate, r.converged)


def _shift(r: EvalResult, c) -> EvalResult:
    return EvalResult(r.value + c, r.n_terms, r.working_bits, r.error_estimate, r.converged)


def _combine(parts: list[EvalResult], coefs) -> EvalResult:
    value = BigComplex(0, 0, parts[0].value.prec)
    for p, c in zip(parts, coefs):
        value = value + p.value * BigComplex(BigReal.from_value(c, p.value.prec), 0)
    err = max(float(p.error_estimate) for p in parts)
    return EvalResult(value, max(p.n_terms for p in parts), max(p.working_bits for p in parts),
                      BigReal.from_value(Fraction(err), 64), all(p.converged for p in parts))


@dataclass(frozen=True)
class ExactSeries:
    """gamma = constant + sum of ``terms`` (first N terms, exact rationals)."""

    constant: str
    terms: tuple[Fraction, ...]


def exact_terms(method: str, n_terms: int, *, m=1, a=0, a_list=None, q_list=None) -> ExactSeries:
    """Leading terms of the literal series for gamma, exactly, for rational parameters."""
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    ns = range(1, n_terms + 1)
    if method == "fontana-mascheroni":
        return ExactSeries("0", tuple(coeffs.gregory_abs(n) / n for n in ns))
    if method == "norlund":
        a = Fraction(real_arg(a))
        if a <= -1 or m < 1:
            raise DomainError("need m >= 1 and a > -1")
        const = f"-(1/{m}) sum_(l=1..{m}) ln({a}+l)"
        return ExactSeries(const, tuple(-(-1) ** n * polys.norlund_value(n, m, a) / (m * n) for n in ns))
    if method == "paired-rational":
        a = Fraction(real_arg(a))
        if a <= -1:
            raise DomainError("a must exceed -1")
        b = -a / (1 + a)
        return ExactSeries("0", tuple((-1) ** (n + 1) * (polys.psi_value(n, a) + polys.psi_value(n, b)) / (2 * n)
                                      for n in ns))
    if method == "product":
        a_list, q_list = _product_params(a_list, q_list, m)
        total = sum(q_list)
        return ExactSeries("0", tuple(
            (-1) ** (n + 1) * sum(q * polys.norlund_value(n, m, x) for x, q in zip(a_list, q_list)) / (m * total * n)
            for n in ns))
    if method == "gregory2":
        return ExactSeries("ln(2 pi) - 2", tuple(-2 * (-1) ** n * coeffs.gregory_higher(n, 2) / n for n in ns))
    if method == "cauchy":
        return ExactSeries("1", tuple(-coeffs.cauchy2(n) / (n * (n + 1)) for n in ns))
    if method == "lngamma-form":
        a = Fraction(real_arg(a))
        if m + 2 * a == 0:
            raise DomainError("m + 2a vanishes")
        c = Fraction(-2, m + 2 * a) / m
        const = f"-2/({m}+2*{a}) [lnGamma({a}+1) - ln(2 pi)/2 + 1/2 + (1/{m}) sum_(n<{m}) ({m}-n) ln({a}+n)]"
        return ExactSeries(const, tuple(c * (-1) ** n * polys.norlund_value(n + 1, m, a) / n for n in ns))
    raise DomainError(f"method {method!r} has no rational-term form")


# ---------------------------------------------------------------------------
# generalized Stieltjes constants
# ---------------------------------------------------------------------------

def _gen_params(method: str, v: Fraction, r: int, a: Fraction):
    if method == "gregory" and v <= 0:
        raise DomainError("the Gregory series needs v > 0")
    if method == "cauchy" and v <= 1:
        raise DomainError("the Cauchy-number series needs v > 1")
    if method == "norlund":
        if not isinstance(r, int) or r < 1:
            raise DomainError("r must be a positive integer")
        if a <= -1 or v + a <= 0:
            raise DomainError("need a > -1 and v > -a")
    if method in ("hasse", "harmonic") and v <= 0:
        raise DomainError("need v > 0")


def _norlund_weight(r: int, a: Fraction, prec: int):
    """(-1)^n N_{n+1,r}(a); callers divide the sum by r."""
    def w(n):
        x = weights.norlund(n + 1, r, a, prec)
        return -x if n % 2 else x
    return w


def _gen_stieltjes_core(job: SeriesJob, m: int, x: Fraction, method: str, r: int, a: Fraction) -> BigReal:
    prec = job.bits + 16
    if method == "gregory":
        s = job.diff(x, -1, m, lambda n: weights.gregory_abs(n + 1, prec))
        return s - job.ln_pow(x, m + 1) / (m + 1)
    if method == "cauchy":
        s = job.diff(x, -1, m, lambda n: weights.cauchy2(n + 1, prec))
        return -job.ln_pow(x - 1, m + 1) / (m + 1) - s
    if method == "norlund":
        s = job.diff(x, -1, m, _norlund_weight(r, a, prec))
        head = job.total(job.ln_pow(x + a + l, m + 1) for l in range(r))
        return s / r - head / (r * (m + 1))
    if method == "hasse":
        return -job.diff(x, 0, m + 1, lambda n: Fraction(1, n + 1)) / (m + 1)
    if method == "harmonic":
        return -job.diff(x + 1, 0, m + 1, lambda n: weights.harmonic(n + 1, prec)) / (m + 1)
    raise DomainError(f"unknown method {method!r}")


def _log_prefix(job: SeriesJob, v: Fraction, J: int, m: int, divide: bool) -> BigReal:
    acc = job.zero()
    for j in range(J):
        x = v + j
        if x == 1 and m > 0:
            continue
        t = job.ln_pow(x, m) if m else job.real(1)
        acc = acc + (t / job.real(x) if divide else t)
    return acc


def gen_stieltjes_eval(m: int, v, method="gregory", policy=None, *, r=1, a=0, lift="auto",
                       max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """gamma_m(v) by one of :data:`GEN_METHODS`; gamma_0(v) = -Psi(v)."""
    if not isinstance(m, int) or m < 0:
        raise DomainError("m must be a nonnegative integer")
    if method not in GEN_METHODS:
        raise DomainError(f"unknown method {method!r}")
    v = real_arg(v)
    a = real_arg(a)
    _gen_params(method, v, r, a)
    job = SeriesJob(policy, max_n, terms, extra_bits=4 * m)
    J = lift_for(lift, v, job.policy.target_digits)
    core = _gen_stieltjes_core(job, m, v + J, method, r, a)
    return job.result(core + _log_prefix(job, v, J, m, divide=True))


def gen_stieltjes(m: int, v, method="gregory", policy=None, **kw) -> BigReal:
    return gen_stieltjes_eval(m, v, method, policy, **kw).require().real()


def stieltjes_eval(m: int, method="hasse", policy=None, *, lift="auto", max_n=DEFAULT_MAX_N,
                   terms=None) -> EvalResult:
    """gamma_m by one of :data:`STIELTJES_METHODS`.

    The ``ser`` (1/(n+2)) and ``harmonic2`` (H_{n+2}) weights have no shifted
    form for m >= 1, so those run literally whatever ``lift`` says.
    """
    if not isinstance(m, int) or m < 0:
        raise DomainError("m must be a nonnegative integer")
    if method not in STIELTJES_METHODS:
        raise DomainError(f"unknown method {method!r}")
    kw = dict(lift=lift, max_n=max_n, terms=terms)
    if method == "gregory":
        if m == 0:
            raise DomainError("the Gregory-weight Stieltjes series starts at m = 1")
        return gen_stieltjes_eval(m, 1, "gregory", policy, **kw)
    if method == "hasse":
        return gen_stieltjes_eval(m, 1, "hasse", policy, **kw)
    if method == "cauchy":
        # gamma_m = gamma_m(2) + ln^m(1)/1
        r = gen_stieltjes_eval(m, 2, "cauchy", policy, **kw)
        return _shift(r, 1) if m == 0 else r
    if method == "harmonic":
        return gen_stieltjes_eval(m, 1, "harmonic", policy, **kw)
    if m == 0:
        digamma_method = "ser" if method == "ser" else "harmonic2"
        return _negate(gammafns.digamma_eval(1, digamma_method, policy, **kw))
    job = SeriesJob(policy, max_n, terms, extra_bits=4 * m)
    prec = job.bits + 16
    if method == "ser":
        s = job.diff(Fraction(1), -1, m + 1, lambda n: Fraction(1, n + 2))
    else:
        s = job.diff(Fraction(2), -1, m + 1, lambda n: weights.harmonic(n + 2, prec))
    return job.result(-s / (m + 1))


def stieltjes(m: int, method="hasse", policy=None, **kw) -> BigReal:
    return stieltjes_eval(m, method, policy, **kw).require().real()


# ---------------------------------------------------------------------------
# Maclaurin coefficients
# ---------------------------------------------------------------------------

def f_m(m: int, v, job: SeriesJob | None = None) -> BigReal:
    """(-1)^m m! (1 - v - v sum_{k=1}^m (-1)^k ln^k v / k!), with f_m(0) = (-1)^m m!."""
    job = job if job is not None else SeriesJob(None)
    v = real_arg(v)
    sign_fact = (-1) ** m * math.factorial(m)
    if v == 0:
        return job.real(sign_fact)
    if v < 0:
        raise DomainError("f_m needs v >= 0")
    inner = job.total(job.ln_pow(v, k) * Fraction((-1) ** k, math.factorial(k)) for k in range(1, m + 1))
    return (1 - job.real(v) - job.real(v) * inner) * sign_fact


def _gen_delta_core(job: SeriesJob, m: int, x: Fraction, method: str, r: int, a: Fraction) -> BigReal:
    prec = job.bits + 16
    if method == "gregory":
        return f_m(m, x, job) + job.diff(x, 0, m, lambda n: weights.gregory_abs(n + 1, prec))
    if method == "cauchy":
        return f_m(m, x - 1, job) - job.diff(x, 0, m, lambda n: weights.cauchy2(n + 1, prec))
    if method == "norlund":
        head = job.total(f_m(m, x + a + l, job) for l in range(r))
        return (head + job.diff(x, 0, m, _norlund_weight(r, a, prec))) / r
    raise DomainError(f"unknown method {method!r}")


def gen_delta_eval(m: int, v, method="gregory", policy=None, *, r=1, a=0, lift="auto", max_n=DEFAULT_MAX_N,
                   terms=None) -> EvalResult:
    """delta_m(v) by one of :data:`DELTA_METHODS`."""
    if not isinstance(m, int) or m < 1:
        raise DomainError("m must be a positive integer")
    if method not in DELTA_METHODS:
        raise DomainError(f"unknown method {method!r}")
    v = real_arg(v)
    a = real_arg(a)
    _gen_params(method, v, r, a)
    job = SeriesJob(policy, max_n, terms, extra_bits=4 * m + 8)
    J = lift_for(lift, v, job.policy.target_digits)
    core = _gen_delta_core(job, m, v + J, method, r, a)
    return job.result(core + _log_prefix(job, v, J, m, divide=False))


def gen_delta(m: int, v, method="gregory", policy=None, **kw) -> BigReal:
    return gen_delta_eval(m, v, method, policy, **kw).require().real()


def delta_eval(m: int, method="gregory", policy=None, **kw) -> EvalResult:
    """delta_m = delta_m(1); the Cauchy form runs at v = 2, where delta_m(2) = delta_m(1) for m >= 1."""
    if method not in ("gregory", "cauchy"):
        raise DomainError("delta_m uses the gregory or cauchy weights")
    return gen_delta_eval(m, 1 if method == "gregory" else 2, method, policy, **kw)


def delta(m: int, method="gregory", policy=None, **kw) -> BigReal:
    return delta_eval(m, method, policy, **kw).require().real()
