"""Digamma, trigamma and log-gamma from binomial-transform and Pochhammer series.

Each function takes ``method`` plus the method's parameters (``r`` and ``a``
for the Norlund-type families) and returns a :class:`BigReal`; the ``*_eval``
variants return the full :class:`EvalResult` instead of raising
:class:`NotConverged`.

Arguments are shifted up before summing (``lift="auto"``), using
Psi(v) = Psi(v+J) - sum 1/(v+j), lnGamma(v) = lnGamma(v+J) - sum ln(v+j) and
Psi_1(v) = Psi_1(v+J) + sum 1/(v+j)^2; ``lift=0`` evaluates the series at v
itself.  Methods that need lnGamma take it from the Gregory method.
"""

from __future__ import annotations

from fractions import Fraction

from . import coeffs, weights
from ._series import DEFAULT_MAX_N, SeriesJob, lift_for, real_arg
from .errors import DomainError
from .findiff import EvalResult, fixed_div
from .mpnum import BigReal, PrecisionPolicy, ln_real, rational_to_real

__all__ = [
    "DIGAMMA_METHODS", "TRIGAMMA_METHODS", "LNGAMMA_METHODS",
    "pochhammer", "digamma", "digamma_eval", "digamma_bounds_check",
    "trigamma", "trigamma_eval", "lngamma", "lngamma_eval",
]

DIGAMMA_METHODS = ("gregory", "cauchy", "psi", "norlund", "lngamma-form", "gregory2", "hasse", "harmonic",
                   "harmonic2", "ser", "stirling2", "stern")
TRIGAMMA_METHODS = ("ser", "hasse", "harmonic", "stirling2")
LNGAMMA_METHODS = ("gregory", "cauchy", "norlund", "newton", "hasse", "harmonic")


def pochhammer(v, n: int, prec: int = 128) -> BigReal:
    """(v)_n = v(v+1)...(v+n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = BigReal.from_value(1, prec) if not isinstance(v, BigReal) else BigReal.from_value(1, max(prec, v.prec))
    for j in range(n):
        out = out * (v + j)
    return out


def _params(r, a):
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise DomainError("r must be a positive integer")
    a = real_arg(a)
    if a <= -1:
        raise DomainError("a must exceed -1")
    return r, a


def _norlund_w(r: int, a: Fraction, offset: int, prec: int, sign0: int = 1):
    """n -> sign0 * (-1)^n N_{n+offset,r}(a) / r."""
    def w(n):
        x = weights.norlund(n + offset, r, a, prec) / r
        return x if (n % 2 == 0) == (sign0 > 0) else -x
    return w


def _harmonic_w(shift: int, prec: int, scale=1):
    return lambda n: weights.harmonic(n + shift, prec) * scale


# ---------------------------------------------------------------------------
# log-gamma
# ---------------------------------------------------------------------------

def _lngamma_core(job: SeriesJob, x: Fraction, method: str, r: int, a: Fraction) -> BigReal:
    prec = job.bits + 16
    half_ln2pi = job.ln2pi() / 2
    if method == "gregory":
        s = job.diff(x, 0, 1, lambda n: weights.gregory_abs(n + 1, prec))
        return job.real(x) * job.ln(x) - x + half_ln2pi - s
    if method == "cauchy":
        if x <= 1:
            raise DomainError("the Cauchy-number log-gamma series needs v > 1")
        s = job.diff(x, 0, 1, lambda n: weights.cauchy2(n + 1, prec))
        head = job.real(x - 1) * job.ln(x - 1)
        return head - x + 1 + half_ln2pi + s
    if method == "norlund":
        if x + a <= 0:
            raise DomainError("need v > -a")
        s = job.diff(x, 0, 1, _norlund_w(r, a, 1, prec))
        head = job.total(job.real(x + a + l) * job.ln(x + a + l) for l in range(r)) / r
        return head - x - a - Fraction(r, 2) + half_ln2pi + Fraction(1, 2) - s
    if method == "newton":
        base = max(1, int(x))
        t = x - base
        head = job.total(job.ln(j) for j in range(2, base))
        if t == 0:
            return head

        coef = [t]  # C(t, n+1) for n = 0, 1, ...

        def w(n):
            while len(coef) <= n:
                j = len(coef)
                coef.append(coef[-1] * (t - j) / (j + 1))
            return coef[n] if n % 2 == 0 else -coef[n]

        return head + job.diff(Fraction(base), 0, 1, w)
    if method == "hasse":
        s = job.diff(x, 1, 1, lambda n: Fraction(1, n + 1))
        return -x + Fraction(1, 2) + half_ln2pi + s
    if method == "harmonic":
        s = job.diff(x + 1, 1, 1, _harmonic_w(1, prec))
        return -x + Fraction(1, 2) + half_ln2pi + s
    raise DomainError(f"unknown log-gamma method {method!r}")


def lngamma_eval(v, method="gregory", policy=None, *, r=1, a=0, lift="auto", max_n=DEFAULT_MAX_N,
                 terms=None) -> EvalResult:
    v = real_arg(v)
    if v <= 0:
        raise DomainError("lnGamma series need v > 0")
    if method not in LNGAMMA_METHODS:
        raise DomainError(f"unknown log-gamma method {method!r}")
    r, a = _params(r, a)
    job = SeriesJob(policy, max_n, terms)
    J = lift_for(lift, v, job.policy.target_digits)
    core = _lngamma_core(job, v + J, method, r, a)
    return job.result(core - job.total(job.ln(v + j) for j in range(J)))


def lngamma(v, method="gregory", policy=None, **kw) -> BigReal:
    """lnGamma(v) for real v > 0."""
    return lngamma_eval(v, method, policy, **kw).require().real()


# ---------------------------------------------------------------------------
# digamma
# ---------------------------------------------------------------------------

def _lngamma_inner(job: SeriesJob, x: Fraction) -> BigReal:
    return job.inner_value(lngamma_eval(x, "gregory", job.tighter(), max_n=job.max_n))


def _gamma_inner(job: SeriesJob) -> BigReal:
    """Euler's constant as -Psi(1) from the Gregory digamma series."""
    return -job.inner_value(digamma_eval(1, "gregory", job.tighter(), max_n=job.max_n))


def _stern_sum(job: SeriesJob, a: Fraction) -> BigReal:
    """sum_{n>=1} (-1)^n C(a, n)/n; terminates for integer a >= 0."""
    c = [Fraction(1)]

    def term(n, bits):
        c[0] = c[0] * (a - n + 1) / n
        w = c[0] / n
        x = fixed_div(1 << bits, w.numerator, w.denominator)
        return x if n % 2 == 0 else -x

    if a.denominator == 1 and a >= 0:
        # finite sum: every term past n = a vanishes
        total = sum((Fraction((-1) ** n) * _binom(a, n) / n for n in range(1, int(a) + 1)), Fraction(0))
        return job.real(total)
    return job.explicit(term, start=1)


def _binom(a: Fraction, n: int) -> Fraction:
    c = Fraction(1)
    for j in range(n):
        c = c * (a - j) / (j + 1)
    return c


def _digamma_core(job: SeriesJob, x: Fraction, method: str, r: int, a: Fraction) -> BigReal:
    prec = job.bits + 16
    if method == "gregory":
        return job.ln(x) - job.poch(x, lambda n: weights.gregory_abs(n + 1, prec))
    if method == "cauchy":
        if x <= 1:
            raise DomainError("the Cauchy-number digamma series needs v > 1")
        return job.ln(x - 1) + job.poch(x, lambda n: weights.cauchy2(n + 1, prec))
    if method == "psi":
        if x + a <= 0:
            raise DomainError("need v > -a")

        def w(n):
            p = weights.psi(n + 1, a, prec)
            return -p if n % 2 == 0 else p

        return job.ln(x + a) + job.poch(x, w)
    if method == "norlund":
        if x + a <= 0:
            raise DomainError("need v > -a")
        head = job.total(job.ln(x + a + l) for l in range(r)) / r
        return head + job.poch(x, _norlund_w(r, a, 1, prec, sign0=-1))
    if method == "lngamma-form":
        if x + a <= 0:
            raise DomainError("need v > -a")
        den = Fraction(r, 2) + x + a - 1
        if den == 0:
            raise DomainError("r/2 + v + a - 1 vanishes")
        mid = job.total((r - n - 1) * job.ln(x + a + n) for n in range(r - 1)) / r
        # sum_{n>=1} (-1)^n N_{n+1,r}(a) (n-1)!/(x)_n, reindexed from n = 0
        s = job.poch(x, _norlund_w(r, a, 2, prec, sign0=-1))
        body = _lngamma_inner(job, x + a) + x - job.ln2pi() / 2 - Fraction(1, 2) + mid + s
        return body / job.real(den)
    if method == "gregory2":
        def w(n):
            g = coeffs.gregory_higher(n + 1, 2)
            return -g if n % 2 == 0 else g

        lx = job.ln(x)
        s = job.poch(x, w)
        return 2 * _lngamma_inner(job, x) - 2 * job.real(x) * lx + 2 * x + 2 * lx - job.ln2pi() + 2 * s
    if method == "hasse":
        return job.diff(x, 0, 1, lambda n: Fraction(1, n + 1))
    if method == "harmonic":
        return job.diff(x + 1, 0, 1, _harmonic_w(1, prec))
    if method == "harmonic2":
        w_ = x + 1
        if w_ == 2:
            raise DomainError("the H_{n+2} digamma form is singular at v = 1; lift the argument")
        s = job.diff(w_, 0, 1, _harmonic_w(2, prec))
        body = _lngamma_inner(job, w_) + w_ - Fraction(3, 2) - job.ln2pi() / 2 - s
        return body / job.real(w_ - 2)
    if method == "ser":
        if x == 1:
            raise DomainError("the 1/(n+2) digamma form is singular at v = 1; lift the argument")
        s = job.diff(x, 0, 1, lambda n: Fraction(1, n + 2))
        body = _lngamma_inner(job, x) + x - job.ln2pi() / 2 - Fraction(1, 2) - s
        return body / job.real(x - 1)
    if method == "stirling2":
        s = job.diff(x, 1, 1, lambda n: weights.harmonic(n + 1, prec) / (n + 2), index_shift=1)
        return -1 - 2 * s
    if method == "stern":
        return -_gamma_inner(job) - _stern_sum(job, x - 1)
    raise DomainError(f"unknown digamma method {method!r}")


_HALF_PLANE = {"cauchy": 1, "harmonic2": 0}


def digamma_eval(v, method="gregory", policy=None, *, r=1, a=0, lift="auto", max_n=DEFAULT_MAX_N,
                 terms=None) -> EvalResult:
    v = real_arg(v)
    if method not in DIGAMMA_METHODS:
        raise DomainError(f"unknown digamma method {method!r}")
    r, a = _params(r, a)
    if method in ("psi", "norlund", "lngamma-form"):
        if v + a <= 0:
            raise DomainError("need v > -a")
    elif v <= _HALF_PLANE.get(method, 0):
        raise DomainError(f"the {method} digamma series needs v > {_HALF_PLANE.get(method, 0)}")
    if v <= 0:
        raise DomainError("digamma series need v > 0")
    extra = 0
    job = SeriesJob(policy, max_n, terms)
    J = lift_for(lift, v, job.policy.target_digits)
    if method == "stern":
        # C(a, n) peaks near 2^a before the alternating tail settles
        extra = int(float(v) + J) + 8
        job = SeriesJob(policy, max_n, terms, extra_bits=extra)
    core = _digamma_core(job, v + J, method, r, a)
    prefix = _reciprocal_sum(job, v, J, 1)
    return job.result(core - prefix)


def _reciprocal_sum(job: SeriesJob, v: Fraction, J: int, power: int) -> BigReal:
    bits = job.bits
    acc = 0
    for j in range(J):
        d = (v + j) ** power
        acc += fixed_div(1 << bits, d.denominator, d.numerator)
    return BigReal.from_fixed(acc, bits, bits)


def digamma(v, method="gregory", policy=None, **kw) -> BigReal:
    """Psi(v) for real v in the method's half-plane."""
    return digamma_eval(v, method, policy, **kw).require().real()


def digamma_bounds_check(v, policy=None) -> tuple[BigReal, BigReal, BigReal]:
    """(ln(v-1), Psi(v), ln v) for v > 1, checking the strict ordering."""
    x = real_arg(v)
    if x <= 1:
        raise DomainError("the bounds need v > 1")
    policy = policy if policy is not None else PrecisionPolicy(34)
    value = digamma(x, "gregory", policy)
    prec = policy.working_bits(0) + 16
    lower = ln_real(rational_to_real(x - 1, prec))
    upper = ln_real(rational_to_real(x, prec))
    if not lower < value < upper:
        raise ArithmeticError(f"ln(v-1) < Psi(v) < ln v fails at v = {x}")
    return lower, value, upper


# ---------------------------------------------------------------------------
# trigamma
# ---------------------------------------------------------------------------

def _trigamma_core(job: SeriesJob, x: Fraction, method: str) -> BigReal:
    prec = job.bits + 16
    if method == "ser":
        if x == 1:
            return _trigamma_core(job, x, "hasse")
        s = job.poch(x, lambda n: Fraction(1, n + 2))
        return (1 - s) / job.real(x - 1)
    if method == "hasse":
        return job.poch(x, lambda n: Fraction(1, n + 1))
    if method == "harmonic":
        return job.real(x) * job.poch(x, lambda n: weights.harmonic(n + 1, prec), d=1)
    if method == "stirling2":
        return -2 * job.diff(x, 0, 1, lambda n: weights.harmonic(n + 1, prec) / (n + 2), index_shift=1)
    raise DomainError(f"unknown trigamma method {method!r}")


def trigamma_eval(v, method="hasse", policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    v = real_arg(v)
    if v <= 0:
        raise DomainError("trigamma series need v > 0")
    if method not in TRIGAMMA_METHODS:
        raise DomainError(f"unknown trigamma method {method!r}")
    job = SeriesJob(policy, max_n, terms)
    J = lift_for(lift, v, job.policy.target_digits)
    core = _trigamma_core(job, v + J, method)
    return job.result(core + _reciprocal_sum(job, v, J, 2))


def trigamma(v, method="hasse", policy=None, **kw) -> BigReal:
    """Psi_1(v) for real v > 0; the 1/(v-1) form falls back to the 1/(n+1) form at v = 1."""
    return trigamma_eval(v, method, policy, **kw).require().real()
