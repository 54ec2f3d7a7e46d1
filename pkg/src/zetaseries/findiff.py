"""Alternating binomial transforms, forward differences and the series driver.

Convention: T_n[f] = sum_{k=0}^n (-1)^k C(n,k) f(v+k) = (-1)^n Δ^n f(v).

Term values are rounded once to fixed-point integers (scale 2^W); every
later combination is exact integer arithmetic, so the transform of a given
set of samples is bit-identical whatever order the integer additions run in.
A whole row T_0..T_N comes from the in-place difference table in
:mod:`zetaseries.kernels` (O(N^2) integer subtractions).

The working precision W follows ``PrecisionPolicy.working_bits(N)``: the
binomials in T_N add up to 2^N, so up to N bits can cancel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import kernels
from .errors import NotConverged
from .mpnum import (
    LOG2_10,
    BigComplex,
    BigReal,
    PrecisionPolicy,
    _pow_mpf,
    format_real,
)
from mpmath import libmp

RND = libmp.round_nearest


# ---------------------------------------------------------------------------
# term functions
# ---------------------------------------------------------------------------

class TermFunction:
    """k -> f(v+k) for a v fixed at construction.

    Subclasses implement ``__call__(k, prec) -> BigComplex``; ``fixed`` and
    ``exact`` have generic fallbacks.
    """

    real = False  # subclasses set True when im is identically zero

    def __call__(self, k: int, prec: int) -> BigComplex:
        raise NotImplementedError

    def fixed(self, k: int, bits: int) -> tuple[int, int]:
        z = self(k, bits + 24)
        mag = max(z.re.magnitude_bits(), z.im.magnitude_bits())
        if mag > 0:
            z = self(k, bits + 24 + mag)
        return z.re.to_fixed(bits), z.im.to_fixed(bits)

    def exact(self, k: int):
        """Exact rational value, or None when f(v+k) is not rational."""
        return None


class PowerLogTerm(TermFunction):
    """(v+k)^e * ln^m(v+k) for rational v > 0 and exact complex exponent e."""

    def __init__(self, v, e_re, e_im=0, m: int = 0):
        self.v = Fraction(v)
        if self.v <= 0:
            from .errors import NonPositiveBase

            raise NonPositiveBase("base v must be positive")
        self.e_re = Fraction(e_re)
        self.e_im = Fraction(e_im)
        self.m = m
        self.real = self.e_im == 0

    def _scale_bits(self, k: int) -> int:
        x = float(self.v + k)
        mag = float(self.e_re) * math.log2(x)
        if self.m:
            mag += self.m * math.log2(max(abs(math.log(x)), 1e-300))
        return max(0, int(mag) + 1)

    def _raw(self, k: int, prec: int):
        x = self.v + k
        wp = prec + 10 + 2 * self.m.bit_length()
        base = libmp.from_rational(x.numerator, x.denominator, wp + 20, RND)
        if self.e_re == 0 and self.e_im == 0:
            re, im = libmp.fone, libmp.fzero
        else:
            er = libmp.from_rational(self.e_re.numerator, self.e_re.denominator, wp + 20, RND)
            ei = libmp.from_rational(self.e_im.numerator, self.e_im.denominator, wp + 20, RND)
            re, im = _pow_mpf(base, er, ei, wp)
        if self.m:
            lg = libmp.mpf_pow_int(libmp.mpf_log(base, wp, RND), self.m, wp, RND)
            re = libmp.mpf_mul(re, lg, wp, RND)
            im = libmp.mpf_mul(im, lg, wp, RND)
        return re, im

    def __call__(self, k: int, prec: int) -> BigComplex:
        re, im = self._raw(k, prec)
        return BigComplex(BigReal(re, prec), BigReal(im, prec))

    def fixed(self, k: int, bits: int) -> tuple[int, int]:
        re, im = self._raw(k, bits + self._scale_bits(k) + 16)
        return _mpf_fixed(re, bits), _mpf_fixed(im, bits)

    def exact(self, k: int):
        if self.m or self.e_im or self.e_re.denominator != 1:
            return None
        return (self.v + k) ** int(self.e_re)


class CallableTerm(TermFunction):
    """Wrap a plain function ``fn(k, prec) -> BigComplex | BigReal``."""

    def __init__(self, fn: Callable, real: bool = False, exact: Callable | None = None):
        self.fn = fn
        self.real = real
        self._exact = exact

    def __call__(self, k: int, prec: int) -> BigComplex:
        z = self.fn(k, prec)
        if isinstance(z, BigComplex):
            return z
        if isinstance(z, BigReal):
            return BigComplex(z, 0, z.prec)
        return BigComplex(z, 0, prec)

    def exact(self, k: int):
        return None if self._exact is None else Fraction(self._exact(k))


def _mpf_fixed(x, bits: int) -> int:
    sign, man, exp, _ = x
    if not man:
        return 0
    man = int(man)
    shift = exp + bits
    if shift >= 0:
        out = man << shift
    else:
        out = _round_div_pow2(man, -shift)
    return -out if sign else out


def _round_div_pow2(man: int, shift: int) -> int:
    q = man >> shift
    rem = man - (q << shift)
    half = 1 << (shift - 1)
    if rem > half or (rem == half and q & 1):
        q += 1
    return q


def fixed_div(x: int, num: int, den: int) -> int:
    """round(x * num / den) with ties to even, den > 0."""
    q, r = divmod(x * num, den)
    twice = 2 * r
    if twice > den or (twice == den and q & 1):
        q += 1
    return q


def fixed_mul(x: int, y: int, bits: int) -> int:
    """round(x * y / 2^bits)."""
    p = x * y
    if p >= 0:
        return _round_div_pow2(p, bits) if bits else p
    return -_round_div_pow2(-p, bits) if bits else p


def fixed_to_complex(re: int, im: int, bits: int, prec: int | None = None) -> BigComplex:
    p = prec if prec is not None else max(64, bits)
    return BigComplex(BigReal.from_fixed(re, bits, p), BigReal.from_fixed(im, bits, p), p)


# ---------------------------------------------------------------------------
# single transforms
# ---------------------------------------------------------------------------

def _samples(f: TermFunction, count: int, bits: int):
    re, im = [], []
    for k in range(count):
        a, b = f.fixed(k, bits)
        re.append(a)
        im.append(b)
    return re, im


def binom_transform(f: TermFunction, n: int, policy: PrecisionPolicy) -> BigComplex:
    """T_n[f] = sum_k (-1)^k C(n,k) f(v+k), summed in ascending k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    bits = policy.working_bits(n)
    re, im = _samples(f, n + 1, bits)
    acc_re = acc_im = 0
    c = 1
    for k in range(n + 1):
        if k % 2:
            acc_re -= c * re[k]
            acc_im -= c * im[k]
        else:
            acc_re += c * re[k]
            acc_im += c * im[k]
        c = c * (n - k) // (k + 1)
    return fixed_to_complex(acc_re, acc_im, bits)


def forward_difference(f: TermFunction, n: int, policy: PrecisionPolicy) -> BigComplex:
    """Δ^n f(v) = (-1)^n T_n[f]."""
    t = binom_transform(f, n, policy)
    return -t if n % 2 else t


def binom_transform_exact(f, n: int) -> Fraction:
    """Exact T_n when ``f(k)`` (or ``f.exact(k)``) returns rationals."""
    get = f.exact if isinstance(f, TermFunction) else f
    acc = Fraction(0)
    c = 1
    for k in range(n + 1):
        val = get(k)
        if val is None:
            raise ValueError("term function has no exact values")
        acc += (-c if k % 2 else c) * Fraction(val)
        c = c * (n - k) // (k + 1)
    return acc


def binom_transform_row(f: TermFunction, count: int, bits: int) -> tuple[list[int], list[int]]:
    """T_0..T_{count-1} as fixed-point integers at scale 2^bits."""
    re, im = _samples(f, count, bits)
    t_re = kernels.alt_sums(re)
    t_im = kernels.alt_sums(im) if any(im) else [0] * count
    return t_re, t_im


# ---------------------------------------------------------------------------
# series driver
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EvalResult:
    value: BigComplex
    n_terms: int
    working_bits: int
    error_estimate: BigReal
    converged: bool

    def real(self) -> BigReal:
        return self.value.re

    def to_json(self, digits: int) -> dict:
        return {
            "value": {"re": format_real(self.value.re, digits), "im": format_real(self.value.im, digits)},
            "n_terms": self.n_terms,
            "working_bits": self.working_bits,
            "error_estimate": format_real(self.error_estimate, 6),
            "converged": self.converged,
        }

    def require(self) -> "EvalResult":
        if not self.converged:
            raise NotConverged(f"series not converged after {self.n_terms} terms", self)
        return self


@dataclass
class FixedSum:
    """Outcome of a fixed-point summation, before packaging."""

    re: int
    im: int
    bits: int
    n_terms: int
    last_re: int
    last_im: int
    converged: bool

    def value(self, prec: int | None = None) -> BigComplex:
        return fixed_to_complex(self.re, self.im, self.bits, prec)

    def error(self) -> BigReal:
        return abs(fixed_to_complex(self.last_re, self.last_im, self.bits))


N_MIN = 8
RUN_LENGTH = 4
START_CAP = 48


def accumulate(terms: Iterable[tuple[int, int]], bits: int, target_digits: int,
               fixed_terms: int | None = None, n_min: int = N_MIN, run: int = RUN_LENGTH) -> FixedSum:
    """Add fixed-point complex terms with the stopping rule.

    Stops at the first n >= n_min whose last ``run`` terms all satisfy
    |t| < 10^-target * max(1, |partial|); with ``fixed_terms`` it simply adds
    that many terms.  ``converged`` is False if the iterator ran out first.
    """
    one2 = 1 << (2 * bits)
    scale = 10 ** (2 * target_digits)
    pre = pim = 0
    small = 0
    n = -1
    tre = tim = 0
    for n, (tre, tim) in enumerate(terms):
        pre += tre
        pim += tim
        if fixed_terms is not None:
            if n + 1 >= fixed_terms:
                return FixedSum(pre, pim, bits, n + 1, tre, tim, True)
            continue
        mag2 = tre * tre + tim * tim
        ref = max(one2, pre * pre + pim * pim)
        small = small + 1 if mag2 * scale < ref else 0
        if n >= n_min and small >= run:
            return FixedSum(pre, pim, bits, n + 1, tre, tim, True)
    return FixedSum(pre, pim, bits, n + 1, tre, tim, False)


WeightFn = Callable[[int], object]


def _weighted(t_re: int, t_im: int, w, bits: int) -> tuple[int, int]:
    if isinstance(w, int):
        return t_re * w, t_im * w
    if isinstance(w, Fraction):
        return fixed_div(t_re, w.numerator, w.denominator), fixed_div(t_im, w.numerator, w.denominator)
    if isinstance(w, BigReal):
        wf = w.to_fixed(bits)
        return fixed_mul(t_re, wf, bits), fixed_mul(t_im, wf, bits)
    if isinstance(w, BigComplex):
        a, b = w.re.to_fixed(bits), w.im.to_fixed(bits)
        return fixed_mul(t_re, a, bits) - fixed_mul(t_im, b, bits), fixed_mul(t_re, b, bits) + fixed_mul(t_im, a, bits)
    if isinstance(w, tuple):  # precomputed fixed complex weight at this scale
        a, b = w
        return fixed_mul(t_re, a, bits) - fixed_mul(t_im, b, bits), fixed_mul(t_re, b, bits) + fixed_mul(t_im, a, bits)
    raise TypeError(f"unsupported weight type {type(w).__name__}")


def difference_series(f: TermFunction, weight: WeightFn, policy: PrecisionPolicy, max_n: int = 10000,
                      index_shift: int = 0, fixed_terms: int | None = None, extra_bits: int = 0) -> FixedSum:
    """sum_{n>=0} weight(n) * T_{n+index_shift}[f] with the stopping rule.

    Starts with a small table and doubles its length (recomputing samples at
    the matching working precision) until the rule is met or max_n is hit.
    """
    cap = min(max_n, fixed_terms if fixed_terms is not None else START_CAP)
    while True:
        bits = policy.working_bits(cap + index_shift) + extra_bits
        t_re, t_im = binom_transform_row(f, cap + index_shift + 1, bits)

        def terms():
            for n in range(cap):
                w = weight(n)
                yield _weighted(t_re[n + index_shift], t_im[n + index_shift], w, bits)

        out = accumulate(terms(), bits, policy.target_digits, fixed_terms)
        if out.converged or cap >= max_n:
            return out
        cap = min(2 * cap, max_n)


def explicit_series(term: Callable[[int, int], tuple[int, int]], policy: PrecisionPolicy, max_n: int = 10000,
                    fixed_terms: int | None = None, extra_bits: int = 0) -> FixedSum:
    """sum_{n>=0} term(n, bits) where term returns fixed-point (re, im)."""
    bits = policy.working_bits(0) + 16 + extra_bits
    limit = max_n if fixed_terms is None else fixed_terms

    def terms():
        for n in range(limit):
            yield term(n, bits)

    return accumulate(terms(), bits, policy.target_digits, fixed_terms)


def package(total: BigComplex, s: FixedSum, policy: PrecisionPolicy) -> EvalResult:
    return EvalResult(total.with_prec(policy.output_bits), s.n_terms, s.bits,
                      s.error().with_prec(64), s.converged)


# ---------------------------------------------------------------------------
# derivatives from differences
# ---------------------------------------------------------------------------

def derivative_from_differences(f: TermFunction, policy: PrecisionPolicy, max_n: int = 10000) -> BigComplex:
    """dF/dv = sum_n (-1)^n/(n+1) Δ^{n+1} F(v) = -sum_n T_{n+1}/(n+1)."""
    s = difference_series(f, lambda n: Fraction(-1, n + 1), policy, max_n, index_shift=1)
    if not s.converged:
        raise NotConverged(f"derivative series not converged after {s.n_terms} terms",
                           package(s.value(), s, policy))
    return s.value(policy.output_bits)


def kth_derivative_from_differences(f: TermFunction, k: int, policy: PrecisionPolicy,
                                    max_n: int = 10000) -> BigComplex:
    """d^kF/dv^k = k! sum_n S_1(n+k,k)/(n+k)! Δ^{n+k} F(v).

    sgn S_1(n+k,k) = (-1)^n and Δ^{n+k} = (-1)^{n+k} T_{n+k}, so each term is
    (-1)^k k! |S_1(n+k,k)|/(n+k)! T_{n+k}.
    """
    from . import weights  # weights imports this module

    if k < 1:
        raise ValueError("k must be positive")
    sign = -1 if k % 2 else 1
    kf = math.factorial(k)
    prec = policy.working_bits(0) + 32
    s = difference_series(f, lambda n: sign * kf * weights.stirling_ratio(n, k, prec), policy, max_n,
                          index_shift=k)
    if not s.converged:
        raise NotConverged(f"derivative series not converged after {s.n_terms} terms",
                           package(s.value(), s, policy))
    return s.value(policy.output_bits)


def digits_to_bits(d: int) -> int:
    return math.ceil(d * LOG2_10)
