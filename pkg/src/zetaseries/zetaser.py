"""Series for ζ(s) and ζ(s,v) built from alternating binomial transforms.

Every evaluator has the shape ``family(s, ..., policy, *, lift, max_n, terms)``
and returns an :class:`~zetaseries.findiff.EvalResult`.

Argument lift
-------------
The transforms T_n[(k+v)^-s] decay only algebraically in n when v is small,
so the raw series need tens of thousands of terms for 30 digits.  By default
every Hurwitz-type family is evaluated as

    ζ(s, v) = sum_{j<J} (v+j)^-s + [same series at v+J],

with J chosen so that v+J is about 1.2*digits + |Im s| + 10; there the
transforms decay geometrically and 60-150 terms suffice.  Pass ``lift=0``
for the literal series at the given argument, or an integer to force J.
Families that only exist for ζ(s) are lifted through their Hurwitz
counterpart, which reduces to them at J = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import coeffs, kernels, polys, weights
from .errors import (
    DomainError,
    EtaZeroDivisor,
    NonPositiveBase,
    NotConverged,
    PoleAtOne,
    PoleSet,
    UnsupportedRegion,
)
from .findiff import (
    START_CAP,
    CallableTerm,
    EvalResult,
    FixedSum,
    PowerLogTerm,
    _weighted,
    accumulate,
    difference_series,
    fixed_div,
    fixed_to_complex,
)
from .mpnum import (
    LOG2_10,
    BigComplex,
    BigReal,
    PrecisionPolicy,
    parse_complex,
    rational_to_real,
)

__all__ = [
    "ComplexArg", "exact_s", "EvalResult", "SeriesSpec", "BoundedSequence", "FAMILIES", "RELATIONS",
    "hasse_hurwitz", "hasse_zeta", "ser_zeta", "ser_gregory_zeta", "euler_eta_zeta", "cauchy_zeta",
    "gregory_hurwitz", "cauchy_hurwitz", "norlund_hurwitz", "norlund_zeta", "higher_gregory_zeta",
    "stirling_zeta", "ser_hurwitz_relation", "harmonic_hurwitz", "harmonic_zeta",
    "dirichlet_series_eval", "verify_relation", "evaluate", "lift_amount",
]

DEFAULT_MAX_N = 10000


# ---------------------------------------------------------------------------
# exact arguments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexArg:
    """Exact complex number with rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def big(self, prec: int) -> BigComplex:
        return BigComplex(rational_to_real(self.re, prec), rational_to_real(self.im, prec), prec)

    def __add__(self, k):
        k = exact_s(k)
        return ComplexArg(self.re + k.re, self.im + k.im)

    def __sub__(self, k):
        k = exact_s(k)
        return ComplexArg(self.re - k.re, self.im - k.im)

    def __rsub__(self, k):
        return exact_s(k) - self

    def __neg__(self):
        return ComplexArg(-self.re, -self.im)

    def __mul__(self, other):
        o = exact_s(other)
        return ComplexArg(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = exact_s(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return ComplexArg((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        return exact_s(other) / self

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __abs__(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def exact_s(s) -> ComplexArg:
    """Exact complex value of int, Fraction, float, complex, str, BigReal or BigComplex."""
    if isinstance(s, ComplexArg):
        return s
    if isinstance(s, bool):
        raise TypeError("bool is not a number here")
    if isinstance(s, (int, Fraction)):
        return ComplexArg(Fraction(s))
    if isinstance(s, float):
        return ComplexArg(Fraction(s))
    if isinstance(s, complex):
        return ComplexArg(Fraction(s.real), Fraction(s.imag))
    if isinstance(s, BigReal):
        return ComplexArg(s.to_fraction())
    if isinstance(s, BigComplex):
        return ComplexArg(s.re.to_fraction(), s.im.to_fraction())
    if isinstance(s, str):
        return ComplexArg(*parse_complex(s))
    raise TypeError(f"cannot use {type(s).__name__} as a complex argument")


def exact_real(x) -> Fraction:
    z = exact_s(x)
    if z.im != 0:
        raise DomainError("expected a real value")
    return z.re


ONE = ComplexArg(Fraction(1))


def _pochhammer(x: ComplexArg, n: int) -> ComplexArg:
    out = ComplexArg(Fraction(1))
    for j in range(n):
        out = out * (x + j)
    return out


# ---------------------------------------------------------------------------
# lift and accumulation helpers
# ---------------------------------------------------------------------------

def lift_amount(lift, v: Fraction, s: ComplexArg, digits: int) -> int:
    """Number of leading terms summed directly before the series starts."""
    if lift is None or lift == "auto":
        target = 1.2 * digits + abs(float(s.im)) + 10
        return max(0, math.ceil(target - float(v)))
    if isinstance(lift, bool) or not isinstance(lift, int) or lift < 0:
        raise ValueError("lift must be 'auto' or a nonnegative integer")
    return lift


class _Run:
    """Shared state of one evaluation: policy, limits and collected statistics."""

    def __init__(self, policy: PrecisionPolicy | None, s: ComplexArg, max_n: int, terms: int | None,
                 lift):
        self.policy = policy if policy is not None else PrecisionPolicy(34)
        self.s = s
        self.max_n = max_n
        self.terms = terms
        self.lift = lift
        self.sums: list[tuple[FixedSum, float]] = []
        self.aux: list[FixedSum] = []  # inner sums: they only affect ``converged``
        self.inner: list[EvalResult] = []
        if terms is not None and terms < 1:
            raise ValueError("terms must be positive")
        if max_n < 1:
            raise ValueError("max_n must be positive")
        # guard bits: 1/(s-1) blow-up near the pole and growth of (v+k)^(1-s) for Re s < 1
        extra = 0
        d = abs(s - 1)
        if 0 < d < 1:
            extra += math.ceil(-math.log2(d))
        self.extra_bits = extra

    def shift(self, v: Fraction) -> int:
        J = lift_amount(self.lift, v, self.s, self.policy.target_digits)
        if self.s.re < 1:
            far = float(v) + J + 2 * START_CAP
            self.extra_bits = max(self.extra_bits, 0) + math.ceil((1 - float(self.s.re)) * math.log2(far))
        return J

    @property
    def bits(self) -> int:
        return self.policy.working_bits(0) + self.extra_bits

    def series(self, x: Fraction, e: ComplexArg, weight: Callable, index_shift: int = 0,
               scale: float = 1.0, m: int = 0) -> BigComplex:
        out = difference_series(PowerLogTerm(x, e.re, e.im, m), weight, self.policy, self.max_n,
                                index_shift, self.terms, self.extra_bits)
        self.sums.append((out, scale))
        return out.value(out.bits)

    def power(self, x: Fraction, e: ComplexArg) -> BigComplex:
        if x <= 0:
            raise NonPositiveBase("power of a nonpositive base")
        return PowerLogTerm(x, e.re, e.im)(0, self.bits)

    def prefix(self, v: Fraction, count: int, e: ComplexArg | None = None) -> BigComplex:
        """sum_{j<count} (v+j)^e, default e = -s."""
        e = -self.s if e is None else e
        bits = self.bits + 8
        if count == 0:
            return BigComplex(0, 0, bits)
        f = PowerLogTerm(v, e.re, e.im)
        re = im = 0
        for j in range(count):
            a, b = f.fixed(j, bits)
            re += a
            im += b
        return fixed_to_complex(re, im, bits)

    def hurwitz(self, s: ComplexArg, v: Fraction) -> BigComplex:
        """Independent ζ(s, v) from the lifted Hasse series, for shifted arguments."""
        inner = PrecisionPolicy(self.policy.target_digits + math.ceil(self.extra_bits / LOG2_10) + 2,
                                self.policy.guard_bits)
        r = hasse_hurwitz(s, v, inner, lift="auto", max_n=self.max_n)
        self.inner.append(r)
        return r.value

    def exact(self, z: ComplexArg) -> BigComplex:
        return z.big(self.bits + 8)

    def result(self, value: BigComplex) -> EvalResult:
        if not self.sums:
            raise AssertionError("no series recorded")
        n_terms = max(s.n_terms for s, _ in self.sums)
        bits = max(s.bits for s, _ in self.sums)
        err = max(float(s.error()) * sc for s, sc in self.sums)
        converged = (all(s.converged for s, _ in self.sums) and all(s.converged for s in self.aux)
                     and all(r.converged for r in self.inner))
        err_real = BigReal.from_value(Fraction(err) if math.isfinite(err) else Fraction(0), 64)
        return EvalResult(value.with_prec(self.policy.output_bits), n_terms, bits, err_real, converged)


def _check_pole(s: ComplexArg):
    if s == ONE:
        raise PoleAtOne("s = 1 is the pole of the zeta function")


def _check_pole_set(s: ComplexArg, k: int):
    if s.is_integer() and 1 <= s.re <= k:
        raise PoleSet(f"s = {s} lies in the excluded set 1..{k}")


def _positive(v, name="v") -> Fraction:
    v = exact_real(v)
    if v <= 0:
        raise NonPositiveBase(f"{name} must be positive")
    return v


def _inv_abs(z: ComplexArg) -> float:
    a = abs(z)
    return 1.0 / a if a else 1.0


# ---------------------------------------------------------------------------
# Hasse and Ser
# ---------------------------------------------------------------------------

def _hasse_core(run: _Run, s: ComplexArg, x: Fraction) -> BigComplex:
    total = run.series(x, 1 - s, lambda n: Fraction(1, n + 1), scale=_inv_abs(s - 1))
    return total / run.exact(s - 1)


def hasse_hurwitz(s, v=1, policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s,v) = 1/(s-1) sum_n 1/(n+1) T_n[(k+v)^(1-s)]."""
    s = exact_s(s)
    v = _positive(v)
    _check_pole(s)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(v)
    return run.result(run.prefix(v, J) + _hasse_core(run, s, v + J))


def hasse_zeta(s, policy=None, **kw) -> EvalResult:
    return hasse_hurwitz(s, 1, policy, **kw)


def _ser_hurwitz_core(run: _Run, s: ComplexArg, x: Fraction) -> BigComplex:
    """ζ(s,x) from (s-2)ζ(s-1,x) and the 1/(n+2) series, x != 1."""
    scale = _inv_abs((s - 1) * (x - 1))
    total = run.series(x, 1 - s, lambda n: Fraction(1, n + 2), scale=scale)
    if s == ComplexArg(Fraction(2)):
        shifted = BigComplex(1, 0, run.bits)  # (s-2)ζ(s-1,x) -> 1 as s -> 2
    else:
        shifted = run.exact(s - 2) * run.hurwitz(s - 1, x)
    return (shifted - total) / run.exact((s - 1) * (x - 1))


def ser_zeta(s, policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s) = 1/(s-1) sum_n 1/(n+2) T_n[(k+1)^-s]."""
    s = exact_s(s)
    _check_pole(s)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(Fraction(1))
    if J == 0:
        total = run.series(Fraction(1), -s, lambda n: Fraction(1, n + 2), scale=_inv_abs(s - 1))
        return run.result(total / run.exact(s - 1))
    return run.result(run.prefix(Fraction(1), J) + _ser_hurwitz_core(run, s, Fraction(1 + J)))


def ser_hurwitz_relation(s, v, policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s,v) = [(s-2)ζ(s-1,v) - sum_n 1/(n+2) T_n[(k+v)^(1-s)]] / ((v-1)(s-1)).

    ζ(s-1, v) comes from :func:`hasse_hurwitz`.  At v = 1 the relation
    degenerates and the call is answered by :func:`ser_zeta`.
    """
    s = exact_s(s)
    v = _positive(v)
    if v == 1:
        return ser_zeta(s, policy, lift=lift, max_n=max_n, terms=terms)
    _check_pole_set(s, 2)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(v)
    return run.result(run.prefix(v, J) + _ser_hurwitz_core(run, s, v + J))


# ---------------------------------------------------------------------------
# Gregory, Cauchy and Norlund weights
# ---------------------------------------------------------------------------

def _gregory_core(run: _Run, s: ComplexArg, x: Fraction) -> BigComplex:
    total = run.series(x, -s, lambda n: weights.gregory_abs(n + 1, run.bits + 16))
    return run.power(x, 1 - s) / run.exact(s - 1) + total


def gregory_hurwitz(s, v, policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s,v) = v^(1-s)/(s-1) + sum_n |G_{n+1}| T_n[(k+v)^-s]."""
    s = exact_s(s)
    v = _positive(v)
    _check_pole(s)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(v)
    return run.result(run.prefix(v, J) + _gregory_core(run, s, v + J))


def ser_gregory_zeta(s, policy=None, **kw) -> EvalResult:
    """ζ(s) = 1/(s-1) + sum_n |G_{n+1}| T_n[(k+1)^-s]."""
    return gregory_hurwitz(s, 1, policy, **kw)


def _cauchy_core(run: _Run, s: ComplexArg, x: Fraction) -> BigComplex:
    total = run.series(x, -s, lambda n: weights.cauchy2(n + 1, run.bits + 16))
    return run.power(x - 1, 1 - s) / run.exact(s - 1) - total


def cauchy_hurwitz(s, v, policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s,v) = (v-1)^(1-s)/(s-1) - sum_n C_{n+1} T_n[(k+v)^-s], v > 1."""
    s = exact_s(s)
    v = exact_real(v)
    if v <= 1:
        raise DomainError("the Cauchy-number series needs v > 1")
    _check_pole(s)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(v)
    return run.result(run.prefix(v, J) + _cauchy_core(run, s, v + J))


def cauchy_zeta(s, policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s) = 1/(s-1) + 1 - sum_n C_{n+1} T_n[(k+2)^-s]."""
    s = exact_s(s)
    _check_pole(s)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(Fraction(2))
    return run.result(run.prefix(Fraction(1), J + 1) + _cauchy_core(run, s, Fraction(2 + J)))


def _as_parameter(a):
    """Rational a stays exact; a BigReal with a long binary expansion stays real."""
    if isinstance(a, BigReal):
        q = a.to_fraction()
        return q if q.denominator < (1 << 64) else a
    return exact_real(a)


def _norlund_weight(m: int, a, bits_hint: int, offset: int = 1) -> Callable[[int], object]:
    """n -> (-1)^n N_{n+offset,m}(a)/m."""
    if isinstance(a, BigReal):
        def weight(n):
            w = polys.norlund_value_real(n + offset, m, a, bits_hint + n + 32) / m
            return -w if n % 2 else w
    else:
        def weight(n):
            w = weights.norlund(n + offset, m, a, bits_hint + 16) / m
            return -w if n % 2 else w
    return weight


def _norlund_core(run: _Run, s: ComplexArg, x: Fraction, m: int, a) -> BigComplex:
    total = run.series(x, -s, _norlund_weight(m, a, run.bits))
    pole = BigComplex(0, 0, run.bits)
    for n in range(m):
        base = x + a + n
        if isinstance(base, BigReal):
            from .mpnum import real_pow_complex

            pole = pole + real_pow_complex(base.with_prec(run.bits), (1 - s).big(run.bits))
        else:
            pole = pole + run.power(base, 1 - s)
    return pole / run.exact((s - 1) * m) + total


def _check_norlund(m: int, a):
    if not isinstance(m, int) or m < 1:
        raise DomainError("m must be a positive integer")


def norlund_hurwitz(s, v, m=1, a=0, policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s,v) = 1/(m(s-1)) sum_{n<m} (v+a+n)^(1-s) + (1/m) sum_n (-1)^n N_{n+1,m}(a) T_n[(k+v)^-s]."""
    s = exact_s(s)
    v = _positive(v)
    a = _as_parameter(a)
    _check_norlund(m, a)
    if a < -1:
        raise DomainError("a must be >= -1")
    if v + a <= 0:
        raise DomainError("need v > -a")
    _check_pole(s)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(v)
    return run.result(run.prefix(v, J) + _norlund_core(run, s, v + J, m, a))


def norlund_zeta(s, m=1, a=0, shift=0, policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s) from the Norlund series on Δ^n 1^-s (shift 0) or Δ^n 2^-s plus 1 (shift 1)."""
    s = exact_s(s)
    a = _as_parameter(a)
    _check_norlund(m, a)
    if shift not in (0, 1):
        raise DomainError("shift must be 0 or 1")
    if shift == 0 and not a > -1:
        raise DomainError("shift 0 needs a > -1")
    if shift == 1 and not a > -2:
        raise DomainError("shift 1 needs a > -2")
    _check_pole(s)
    run = _Run(policy, s, max_n, terms, lift)
    base = Fraction(1 + shift)
    J = run.shift(base)
    return run.result(run.prefix(Fraction(1), J + shift) + _norlund_core(run, s, base + J, m, a))


# ---------------------------------------------------------------------------
# higher-order Gregory and Stirling families
# ---------------------------------------------------------------------------

def _higher_gregory_core(run: _Run, s: ComplexArg, x: Fraction, k: int) -> BigComplex:
    c = [None] + [ComplexArg(Fraction(math.prod(range(k - l + 1, k + 1)))) / _pochhammer(s - l, l)
                  for l in range(1, k + 1)]
    total = run.series(x, -s, lambda n: k * (-coeffs.gregory_higher(n + 1, k) if n % 2
                                             else coeffs.gregory_higher(n + 1, k)))
    acc = total
    for l in range(1, k):
        acc = acc - run.exact(c[l]) * run.hurwitz(s - l, x)
    if x == 1:
        acc = acc + run.exact(k / (s - k))
    else:
        for l in range(1, k + 1):
            acc = acc + run.exact(c[l]) * run.power(x, ComplexArg(Fraction(l)) - s)
    return acc


def higher_gregory_zeta(s, k=1, policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s) from the G^(k) series plus k-1 shifted values ζ(s-l) (taken from the Hasse series)."""
    s = exact_s(s)
    if not isinstance(k, int) or k < 1:
        raise DomainError("k must be a positive integer")
    _check_pole_set(s, k)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(Fraction(1))
    return run.result(run.prefix(Fraction(1), J) + _higher_gregory_core(run, s, Fraction(1 + J), k))


def _stirling_core(run: _Run, s: ComplexArg, x: Fraction, k: int) -> BigComplex:
    factor = ComplexArg(Fraction(math.factorial(k))) / _pochhammer(s - k, k)
    total = run.series(x, ComplexArg(Fraction(k)) - s, lambda n: weights.stirling_ratio(n, k, run.bits + 16),
                       index_shift=k - 1, scale=abs(factor))
    return run.exact(factor) * total


def stirling_zeta(s, v=1, k=1, policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s,v) = k!/(s-k)_k sum_n |S_1(n+k,k)|/(n+k)! T_{n+k-1}[(l+v)^(k-s)]."""
    s = exact_s(s)
    v = _positive(v)
    if not isinstance(k, int) or k < 1:
        raise DomainError("k must be a positive integer")
    _check_pole_set(s, k)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(v)
    return run.result(run.prefix(v, J) + _stirling_core(run, s, v + J, k))


# ---------------------------------------------------------------------------
# harmonic-number weights
# ---------------------------------------------------------------------------

def _h1_core(run: _Run, s: ComplexArg, x: Fraction) -> BigComplex:
    total = run.series(x, 1 - s, lambda n: weights.harmonic(n + 1, run.bits + 16), scale=_inv_abs(s - 1))
    return total / run.exact(s - 1)


def _h2_core(run: _Run, s: ComplexArg, x: Fraction) -> BigComplex:
    if x == 2:
        total = run.series(x, -s, lambda n: weights.harmonic(n + 2, run.bits + 16), scale=_inv_abs(s - 1))
        return (total - 1) / run.exact(s - 1)
    scale = _inv_abs((s - 1) * (x - 2))
    total = run.series(x, 1 - s, lambda n: weights.harmonic(n + 2, run.bits + 16), scale=scale)
    if s == ComplexArg(Fraction(2)):
        shifted = BigComplex(1, 0, run.bits)
    else:
        shifted = run.exact(s - 2) * run.hurwitz(s - 1, x - 1)
    return (run.power(x - 1, 1 - s) + shifted - total) / run.exact((s - 1) * (x - 2))


def harmonic_hurwitz(s, v, weight="H1", policy=None, *, lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s, v-1) from the H_{n+1} series (H1) or the H_{n+2} variant (H2), v > 1."""
    s = exact_s(s)
    v = exact_real(v)
    if v <= 1:
        raise DomainError("harmonic series need v > 1")
    if weight not in ("H1", "H2"):
        raise DomainError("weight must be 'H1' or 'H2'")
    _check_pole(s)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(v)
    core = _h1_core if weight == "H1" else _h2_core
    return run.result(run.prefix(v - 1, J) + core(run, s, v + J))


def harmonic_zeta(s, policy=None, weight="H1", **kw) -> EvalResult:
    return harmonic_hurwitz(s, 2, weight, policy, **kw)


# ---------------------------------------------------------------------------
# Euler transform of the eta series
# ---------------------------------------------------------------------------

def euler_eta_zeta(s, policy=None, *, lift=None, max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """ζ(s) = (1 - 2^(1-s))^-1 sum_n 2^(-n-1) T_n[(k+1)^-s].

    The weights decay geometrically already, so ``lift`` is accepted for a
    uniform signature and ignored.
    """
    s = exact_s(s)
    if s == ONE:
        raise EtaZeroDivisor("1 - 2^(1-s) vanishes at s = 1")
    run = _Run(policy, s, max_n, terms, 0)
    run.shift(Fraction(1))
    divisor = 1 - run.power(Fraction(2), 1 - s)
    if float(abs(divisor)) < 10.0 ** (-run.policy.target_digits):
        raise EtaZeroDivisor(f"1 - 2^(1-s) is zero to working precision at s = {s}")
    total = run.series(Fraction(1), -s, lambda n: Fraction(1, 1 << (n + 1)),
                       scale=1.0 / float(abs(divisor)))
    return run.result(total / divisor)


# ---------------------------------------------------------------------------
# families by name
# ---------------------------------------------------------------------------

FAMILIES = (
    "HasseZeta", "HasseHurwitz", "SerZeta", "SerGregoryZeta", "EulerEtaZeta", "CauchyZeta",
    "GregoryHurwitz", "CauchyHurwitz", "NorlundHurwitz", "NorlundZetaShift0", "NorlundZetaShift1",
    "HigherGregoryRelation", "StirlingZeta", "SerHurwitzRelation", "HarmonicHurwitz", "HarmonicZeta",
)


@dataclass(frozen=True)
class SeriesSpec:
    """A family name plus its parameters, validated on construction."""

    family: str
    m: int = 1
    a: Fraction = Fraction(0)
    k: int = 1
    v: Fraction = Fraction(1)
    weight: str = "H1"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        object.__setattr__(self, "a", exact_real(self.a))
        object.__setattr__(self, "v", exact_real(self.v))
        if not isinstance(self.m, int) or self.m < 1:
            raise DomainError("m must be a positive integer")
        if not isinstance(self.k, int) or self.k < 1:
            raise DomainError("k must be a positive integer")
        f, v, a = self.family, self.v, self.a
        if v <= 0:
            raise NonPositiveBase("v must be positive")
        if f == "CauchyHurwitz" and v <= 1:
            raise DomainError("CauchyHurwitz needs v > 1")
        if f == "NorlundHurwitz" and (a < -1 or v <= -a):
            raise DomainError("NorlundHurwitz needs a >= -1 and v > -a")
        if f == "NorlundZetaShift0" and a <= -1:
            raise DomainError("NorlundZetaShift0 needs a > -1")
        if f == "NorlundZetaShift1" and a <= -2:
            raise DomainError("NorlundZetaShift1 needs a > -2")
        if f == "HarmonicHurwitz" and v <= 1:
            raise DomainError("HarmonicHurwitz needs v > 1")
        if self.weight not in ("H1", "H2"):
            raise DomainError("weight must be 'H1' or 'H2'")

    @property
    def is_hurwitz(self) -> bool:
        return self.family in ("HasseHurwitz", "GregoryHurwitz", "CauchyHurwitz", "NorlundHurwitz",
                               "StirlingZeta", "SerHurwitzRelation", "HarmonicHurwitz")


def evaluate(spec: SeriesSpec, s, policy=None, **kw) -> EvalResult:
    """Dispatch a :class:`SeriesSpec`; HarmonicHurwitz returns ζ(s, v-1)."""
    f, v = spec.family, spec.v
    table = {
        "HasseZeta": lambda: hasse_zeta(s, policy, **kw),
        "HasseHurwitz": lambda: hasse_hurwitz(s, v, policy, **kw),
        "SerZeta": lambda: ser_zeta(s, policy, **kw),
        "SerGregoryZeta": lambda: ser_gregory_zeta(s, policy, **kw),
        "EulerEtaZeta": lambda: euler_eta_zeta(s, policy, **kw),
        "CauchyZeta": lambda: cauchy_zeta(s, policy, **kw),
        "GregoryHurwitz": lambda: gregory_hurwitz(s, v, policy, **kw),
        "CauchyHurwitz": lambda: cauchy_hurwitz(s, v, policy, **kw),
        "NorlundHurwitz": lambda: norlund_hurwitz(s, v, spec.m, spec.a, policy, **kw),
        "NorlundZetaShift0": lambda: norlund_zeta(s, spec.m, spec.a, 0, policy, **kw),
        "NorlundZetaShift1": lambda: norlund_zeta(s, spec.m, spec.a, 1, policy, **kw),
        "HigherGregoryRelation": lambda: higher_gregory_zeta(s, spec.k, policy, **kw),
        "StirlingZeta": lambda: stirling_zeta(s, v, spec.k, policy, **kw),
        "SerHurwitzRelation": lambda: ser_hurwitz_relation(s, v, policy, **kw),
        "HarmonicHurwitz": lambda: harmonic_hurwitz(s, v, spec.weight, policy, **kw),
        "HarmonicZeta": lambda: harmonic_zeta(s, policy, spec.weight, **kw),
    }
    return table[f]()


# ---------------------------------------------------------------------------
# Dirichlet series with bounded coefficients
# ---------------------------------------------------------------------------

class BoundedSequence:
    """A bounded coefficient sequence u_0, u_1, ... for sum u_n (v+n)^-s.

    ``degree`` declares u to be a polynomial in n of that degree (differences
    beyond it vanish); ``alternating`` declares u_n = (-1)^n w_n with w slowly
    varying, which lets inner sums run through the Euler transform.
    Values must be exact rationals (int or Fraction).
    """

    def __init__(self, fn: Callable[[int], object], degree: int | None = None, alternating: bool = False,
                 label: str = "u"):
        self._fn = fn
        self.degree = degree
        self.alternating = alternating
        self.label = label
        self._cache: dict[int, Fraction] = {}

    def __call__(self, n: int) -> Fraction:
        v = self._cache.get(n)
        if v is None:
            v = Fraction(self._fn(n))
            self._cache[n] = v
        return v

    @property
    def is_zero(self) -> bool:
        return self.degree is not None and self.degree < 0

    def shifted(self, J: int) -> "BoundedSequence":
        if J == 0:
            return self
        return BoundedSequence(lambda n: self(n + J), self.degree, self.alternating, f"{self.label}[+{J}]")

    def difference(self) -> "BoundedSequence":
        deg = None if self.degree is None else self.degree - 1
        return BoundedSequence(lambda n: self(n + 1) - self(n), deg, self.alternating, f"Δ{self.label}")

    def diff_at(self, l: int, n: int = 0) -> Fraction:
        """Δ^l u_n from the exact binomial transform of the samples."""
        if self.degree is not None and l > self.degree:
            return Fraction(0)
        acc = Fraction(0)
        c = 1
        for i in range(l + 1):
            term = c * self(n + l - i)
            acc += -term if i % 2 else term
            c = c * (l - i) // (i + 1)
        return acc

    def newton_poly(self) -> polys.RationalPoly:
        """u as a polynomial in n (degree must be declared)."""
        if self.degree is None:
            raise ValueError("sequence has no declared degree")
        out = polys.RationalPoly()
        for i in range(self.degree + 1):
            out = out + polys.binomial_poly(i) * self.diff_at(i)
        return out

    @classmethod
    def constant(cls, c=1) -> "BoundedSequence":
        c = Fraction(c)
        return cls(lambda n: c, 0 if c else -1, label=str(c))

    @classmethod
    def polynomial(cls, coefficients) -> "BoundedSequence":
        p = polys.RationalPoly(coefficients)
        return cls(lambda n: p(n), p.degree if not p.is_zero() else -1, label="poly")

    @classmethod
    def alternating_sign(cls, c=1) -> "BoundedSequence":
        c = Fraction(c)
        return cls(lambda n: -c if n % 2 else c, None, True, label="alt")


def _digits_for_bits(bits: int) -> int:
    return math.ceil(bits / LOG2_10) + 2


def _sequence_zeta(run: _Run, s: ComplexArg, x: Fraction, w: BoundedSequence, bits: int,
                   depth: int, allow_recursion: bool = True) -> BigComplex:
    """Inner value sum_n w_n (x+n)^-s to about ``bits`` bits."""
    if w.is_zero:
        return BigComplex(0, 0, bits)
    policy = PrecisionPolicy(_digits_for_bits(bits), run.policy.guard_bits)
    if w.degree is not None:
        q = w.newton_poly().shift(-x)  # w_n as a polynomial in (x+n)
        acc = BigComplex(0, 0, bits + 16)
        for j, c in enumerate(q.coeffs):
            if c == 0:
                continue
            if s - j == ONE:
                raise PoleAtOne("inner sum hits the pole of the zeta function")
            r = hasse_hurwitz(s - j, x, policy, max_n=run.max_n)
            run.inner.append(r)
            acc = acc + r.value * c
        return acc
    if w.alternating:
        def term(k, prec):
            val = PowerLogTerm(x, -s.re, -s.im)(k, prec) * w(k)
            return -val if k % 2 else val

        out = difference_series(CallableTerm(term), lambda n: Fraction(1, 1 << (n + 1)), policy, run.max_n)
        run.aux.append(out)
        return out.value(out.bits)
    if s.re > 1:
        f = PowerLogTerm(x, -s.re, -s.im)

        def terms():
            wb = bits + 16
            for n in range(run.max_n):
                a, b = f.fixed(n, wb)
                u = w(n)
                yield fixed_div(a, u.numerator, u.denominator), fixed_div(b, u.numerator, u.denominator)

        out = accumulate(terms(), bits + 16, policy.target_digits)
        run.aux.append(out)
        return out.value(out.bits)
    if allow_recursion and depth < 2:
        return _dirichlet_form_b(run, s, x, w, 1, Fraction(0), bits, depth + 1)
    raise UnsupportedRegion("inner Dirichlet sum needs direct summation with Re s > 1")


class _SampledTerm:
    """k -> sum_n w_n (x+k+n)^-s, computed at the requested fixed-point scale."""

    real = False

    def __init__(self, run: _Run, s: ComplexArg, x: Fraction, w: BoundedSequence, depth: int):
        self.run, self.s, self.x, self.w, self.depth = run, s, x, w, depth
        self._base: dict[int, list] = {}
        self._cache: dict[tuple[int, int], tuple[int, int]] = {}

    def exact(self, k):
        return None

    def _poly_values(self, k: int, bits: int) -> BigComplex:
        # ζ(s-j, x+k) = ζ(s-j, x) - sum_{i<k} (x+i)^(j-s): one Hurwitz value per power
        p = self.w.newton_poly()
        base = self._base.get(bits)
        if base is None:
            policy = PrecisionPolicy(_digits_for_bits(bits + 16), self.run.policy.guard_bits)
            base = []
            for j in range(p.degree + 1):
                if self.s - j == ONE:
                    raise PoleAtOne("inner sum hits the pole of the zeta function")
                r = hasse_hurwitz(self.s - j, self.x, policy, max_n=self.run.max_n)
                self.run.inner.append(r)
                base.append([r.value])
            self._base[bits] = base
        y = self.x + k
        q = p.shift(-y)
        acc = BigComplex(0, 0, bits + 16)
        for j, c in enumerate(q.coeffs):
            vals = base[j]
            while len(vals) <= k:
                i = len(vals) - 1
                e = ComplexArg(Fraction(j)) - self.s
                vals.append(vals[-1] - PowerLogTerm(self.x + i, e.re, e.im)(0, bits + 24))
            if c:
                acc = acc + vals[k] * c
        return acc

    def fixed(self, k: int, bits: int) -> tuple[int, int]:
        key = (k, bits)
        hit = self._cache.get(key)
        if hit is None:
            if self.w.is_zero:
                hit = (0, 0)
            else:
                if self.w.degree is not None:
                    z = self._poly_values(k, bits)
                else:
                    z = _sequence_zeta(self.run, self.s, self.x + k, self.w, bits + 16, self.depth)
                hit = (z.re.to_fixed(bits), z.im.to_fixed(bits))
            self._cache[key] = hit
        return hit


def _dirichlet_form_b(run: _Run, s: ComplexArg, x: Fraction, u: BoundedSequence, m: int, a,
                      bits: int, depth: int, record: bool = False) -> BigComplex:
    du = u.difference()
    u0 = u(0)
    inv = run.exact((s - 1) * m)
    head = BigComplex(0, 0, bits)
    for n in range(m):
        head = head + _sequence_zeta(run, s - 1, x + a + n + 1, du, bits, depth)
        if u0:
            head = head + run.power(x + a + n, 1 - s) * u0
    head = head / inv
    weight = _norlund_weight(m, a, bits, offset=1)
    sampled = _SampledTerm(run, s, x + 1, du, depth)
    policy = run.policy if record else PrecisionPolicy(_digits_for_bits(bits), run.policy.guard_bits)
    mid = difference_series(sampled, weight, policy, run.max_n, 0, run.terms if record else None)
    tail = difference_series(PowerLogTerm(x, -s.re, -s.im), weight, policy, run.max_n, 0,
                             run.terms if record else None)
    if record:
        run.sums.insert(0, (tail, 1.0))
        run.sums.append((mid, 1.0))
    else:
        run.aux.extend((mid, tail))
    return head + mid.value(mid.bits) + tail.value(tail.bits) * u0


def _dirichlet_form_a(run: _Run, s: ComplexArg, x: Fraction, u: BoundedSequence, m: int, a,
                      bits: int) -> BigComplex:
    du = u.difference()
    u0 = u(0)
    inv = run.exact((s - 1) * m)
    head = BigComplex(0, 0, bits)
    for n in range(m):
        head = head + _sequence_zeta(run, s - 1, x + a + n + 1, du, bits, 0, allow_recursion=False)
        if u0:
            head = head + run.power(x + a + n, 1 - s) * u0
    head = head / inv
    policy = run.policy
    f = PowerLogTerm(x, -s.re, -s.im)
    diffs: list[BoundedSequence] = [u]
    cap = min(run.max_n, run.terms or START_CAP)
    while True:
        wb = policy.working_bits(cap) + run.extra_bits + 16
        samples = [f.fixed(i, wb) for i in range(2 * cap + 1)]
        rows_re = kernels.alt_sums_windows([p[0] for p in samples], cap + 1)
        rows_im = kernels.alt_sums_windows([p[1] for p in samples], cap + 1)
        d0 = [u.diff_at(l) for l in range(cap + 1)]

        def terms():
            for n in range(cap if run.terms is None else run.terms):
                w1 = weights.norlund(n + 1, m, a, wb) / m
                if n % 2:
                    w1 = -w1
                re = im = 0
                for l in range(n + 1):
                    if d0[l]:
                        re += fixed_div(rows_re[n - l][l], d0[l].numerator, d0[l].denominator)
                        im += fixed_div(rows_im[n - l][l], d0[l].numerator, d0[l].denominator)
                tre, tim = _weighted(re, im, w1, wb)
                # inner ζ(s, x+n+1, Δ^(n+1) u) with weight -(1/m)(-1)^(n+1) N_{n+1,m}(a)
                while len(diffs) <= n + 1:
                    diffs.append(diffs[-1].difference())
                dn = diffs[n + 1]
                if not dn.is_zero:
                    z = _sequence_zeta(run, s, x + n + 1, dn, wb, 0, allow_recursion=False)
                    w2 = weights.norlund(n + 1, m, a, wb) / m
                    if n % 2 == 0:
                        w2 = -w2
                    a2, b2 = _weighted(z.re.to_fixed(wb), z.im.to_fixed(wb), -w2, wb)
                    tre += a2
                    tim += b2
                yield tre, tim

        out = accumulate(terms(), wb, policy.target_digits, run.terms)
        if out.converged or cap >= run.max_n or run.terms is not None:
            break
        cap = min(2 * cap, run.max_n)
    run.sums.insert(0, (out, 1.0))
    return head + out.value(out.bits)


def dirichlet_series_eval(s, v, u: BoundedSequence, m=1, a=0, form="B", policy=None, *,
                          lift="auto", max_n=DEFAULT_MAX_N, terms=None) -> EvalResult:
    """sum_n u_n (v+n)^-s via the Norlund-weighted representations A or B.

    Inner sums over differenced sequences use closed reductions where the
    sequence is declared polynomial (Hurwitz values) or alternating (Euler
    transform); otherwise form B recurses once more and form A sums directly,
    which needs Re s > 1.
    """
    s = exact_s(s)
    v = _positive(v)
    a = exact_real(a)
    if a < -1:
        raise DomainError("a must be >= -1")
    if v + a <= 0:
        raise DomainError("need v > -a")
    if not isinstance(m, int) or m < 1:
        raise DomainError("m must be a positive integer")
    if form not in ("A", "B"):
        raise DomainError("form must be 'A' or 'B'")
    _check_pole(s)
    run = _Run(policy, s, max_n, terms, lift)
    J = run.shift(v)
    bits = run.bits + 16
    pre = BigComplex(0, 0, bits)
    f = PowerLogTerm(v, -s.re, -s.im)
    for j in range(J):
        if u(j):
            pre = pre + f(j, bits) * u(j)
    x, tail_u = v + J, u.shifted(J)
    if form == "B":
        value = _dirichlet_form_b(run, s, x, tail_u, m, a, bits, 0, record=True)
    else:
        value = _dirichlet_form_a(run, s, x, tail_u, m, a, bits)
    return run.result(pre + value)


# ---------------------------------------------------------------------------
# functional relations
# ---------------------------------------------------------------------------

RELATIONS = {
    "general": "(v+a+m/2-1) ζ(s,v) with N_{n+2,m}(a) weights",
    "psi": "(v+a-1/2) ζ(s,v) with psi_{n+2}(a) weights",
    "m2-pole": "(v+a) ζ(s,v) with N_{n+2,2}(a) weights and the (v+a)^(1-s) term",
    "gregory-half": "(v-1/2) ζ(s,v) with G_{n+2} weights",
    "harmonic-zeta": "(m/2) ζ(s) with m H_m^(s-1) - H_m^(s-2)",
    "zeta-double": "ζ(s) = 2(s-2)/(s-1) ζ(s-1) + 2 sum (-1)^n G_{n+2} T_n",
    "zeta-a": "ζ(s-1,a)/(s-1) against ζ(s), ζ(s-1) and N_{n+2,m}(a) weights",
    "ser-hurwitz": "(v-1)(s-1) ζ(s,v) = (s-2) ζ(s-1,v) - sum 1/(n+2) T_n[(k+v)^(1-s)]",
}

_ALIASES = {
    "(v-½) gregory": "gregory-half", "(v-1/2) gregory": "gregory-half",
    "m=2 pole form": "m2-pole", "harmonic ζ(s)": "harmonic-zeta", "harmonic zeta": "harmonic-zeta",
}


def _gen_harmonic(m: int, e: ComplexArg, prec: int) -> BigComplex:
    """sum_{j<=m} j^-e."""
    acc = BigComplex(0, 0, prec)
    for j in range(1, m + 1):
        acc = acc + PowerLogTerm(Fraction(j), -e.re, -e.im)(0, prec)
    return acc


def verify_relation(relation_id: str, s, v=1, m=1, a=0, policy=None, *, max_n=DEFAULT_MAX_N) -> BigReal:
    """|LHS - RHS| for one of :data:`RELATIONS`; ζ values come from the Hasse series.

    The relation's own series is summed literally at the given v (it cannot
    be lifted without assuming the relation), so fast convergence needs
    large v, or s a nonpositive integer where the transforms terminate.
    Raises NotConverged when that series does not settle within max_n.
    """
    rid = _ALIASES.get(relation_id.strip().lower(), relation_id)
    if rid not in RELATIONS:
        raise DomainError(f"unknown relation {relation_id!r}")
    s = exact_s(s)
    v = exact_real(v)
    a = exact_real(a)
    if not isinstance(m, int) or m < 1:
        raise DomainError("m must be a positive integer")
    run = _Run(policy, s, max_n, None, 0)
    run.extra_bits += 8
    if s.re < 1:
        run.extra_bits += math.ceil((1 - float(s.re)) * math.log2(float(abs(v) + abs(a) + m) + 2 * START_CAP))
    _check_pole_set(s, 2)
    one_half = Fraction(1, 2)
    Z = run.hurwitz
    P = run.power
    E = run.exact

    def nseries(base: Fraction, mm: int, aa: Fraction, offset: int = 2) -> BigComplex:
        return run.series(base, -s, _norlund_weight(mm, aa, run.bits, offset=offset))

    if rid in ("general", "psi", "m2-pole", "gregory-half", "ser-hurwitz") and v <= 0:
        raise NonPositiveBase("v must be positive")

    if rid == "general":
        if v + a <= 0:
            raise DomainError("need v + a > 0")
        lhs = E(ComplexArg(v + a + Fraction(m, 2) - 1)) * Z(s, v)
        rhs = -Z(s - 1, v + a) / E(s - 1) + Z(s - 1, v)
        acc = BigComplex(0, 0, run.bits)
        for n in range(m):
            if m - n - 1:
                acc = acc + P(v + a + n, 1 - s) * (m - n - 1)
        rhs = rhs + acc / E((s - 1) * m) + nseries(v, m, a)
    elif rid == "psi":
        if v + a <= 0:
            raise DomainError("need v + a > 0")
        lhs = E(ComplexArg(v + a - one_half)) * Z(s, v)
        rhs = -Z(s - 1, v + a) / E(s - 1) + Z(s - 1, v)

        def pw(n):
            w = weights.psi(n + 2, a, run.bits + 16)
            return -w if n % 2 else w

        rhs = rhs + run.series(v, -s, pw)
    elif rid == "m2-pole":
        if v + a <= 0:
            raise DomainError("need v + a > 0")
        lhs = E(ComplexArg(v + a)) * Z(s, v)
        rhs = (P(v + a, 1 - s) / E((s - 1) * 2) - Z(s - 1, v + a) / E(s - 1) + Z(s - 1, v)
               + nseries(v, 2, a))
    elif rid == "gregory-half":
        lhs = E(ComplexArg(v - one_half)) * Z(s, v)

        def gw(n):
            g = weights.gregory(n + 2, run.bits + 16)
            return -g if n % 2 else g

        rhs = E((s - 2) / (s - 1)) * Z(s - 1, v) + run.series(v, -s, gw)
    elif rid == "harmonic-zeta":
        bits = run.bits
        lhs = E(ComplexArg(Fraction(m, 2))) * Z(s, Fraction(1))
        hm = _gen_harmonic(m, s - 1, bits) * m - _gen_harmonic(m, s - 2, bits)
        rhs = (E((s - 2) / (s - 1)) * Z(s - 1, Fraction(1)) + hm / E((s - 1) * m)
               + nseries(Fraction(1), m, Fraction(0)))
    elif rid == "zeta-double":
        lhs = Z(s, Fraction(1))

        def gw2(n):
            g = 2 * weights.gregory(n + 2, run.bits + 16)
            return -g if n % 2 else g

        rhs = E(2 * (s - 2) / (s - 1)) * Z(s - 1, Fraction(1)) + run.series(Fraction(1), -s, gw2)
    elif rid == "zeta-a":
        if a <= 0:
            raise DomainError("the ζ(s-1,a) relation needs a > 0")
        lhs = Z(s - 1, a) / E(s - 1)
        acc = BigComplex(0, 0, run.bits)
        for n in range(1, m + 1):
            if m - n:
                acc = acc + P(a + n, 1 - s) * (m - n)
        rhs = (P(a, 1 - s) / E(s - 1) - E(ComplexArg(a + Fraction(m, 2))) * Z(s, Fraction(1))
               + Z(s - 1, Fraction(1)) + acc / E((s - 1) * m) + nseries(Fraction(1), m, a))
    else:  # ser-hurwitz
        if v == 1:
            raise DomainError("the relation degenerates at v = 1")
        lhs = E((v - 1) * (s - 1)) * Z(s, v)
        rhs = E(s - 2) * Z(s - 1, v) - run.series(v, 1 - s, lambda n: Fraction(1, n + 2))
    residual = abs(lhs - rhs).with_prec(run.policy.output_bits)
    res = run.result(BigComplex(residual, 0))
    if not res.converged:
        raise NotConverged(f"relation series not converged after {res.n_terms} terms", res)
    return residual
