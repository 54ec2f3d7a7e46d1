"""Shared driver for the real-valued series behind the constants and gamma functions."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

from .findiff import EvalResult, FixedSum, PowerLogTerm, _weighted, accumulate, difference_series, fixed_div
from .mpnum import BigComplex, BigReal, PrecisionPolicy, ln_pow, ln_real, pi_real, rational_to_real
from .zetaser import exact_real

DEFAULT_MAX_N = 10000


def lift_for(lift, v, digits: int) -> int:
    """Argument shift J so that v + J sits where the series decay geometrically."""
    if lift is None or lift == "auto":
        return max(0, math.ceil(1.2 * digits + 10 - float(v)))
    if isinstance(lift, bool) or not isinstance(lift, int) or lift < 0:
        raise ValueError("lift must be 'auto' or a nonnegative integer")
    return lift


def real_arg(v) -> Fraction:
    """Exact value of a real argument; a BigReal is taken as the dyadic it stores."""
    return exact_real(v)


class SeriesJob:
    """One evaluation: policy, term limits and the sums it ran."""

    def __init__(self, policy: PrecisionPolicy | None, max_n: int = DEFAULT_MAX_N, terms: int | None = None,
                 extra_bits: int = 0):
        self.policy = policy if policy is not None else PrecisionPolicy(34)
        if max_n < 1:
            raise ValueError("max_n must be positive")
        if terms is not None and terms < 1:
            raise ValueError("terms must be positive")
        self.max_n = max_n
        self.terms = terms
        self.extra_bits = extra_bits
        self.sums: list[FixedSum] = []
        self.inner: list[EvalResult] = []

    @property
    def bits(self) -> int:
        return self.policy.working_bits(0) + self.extra_bits + 16

    def tighter(self, digits: int = 4) -> PrecisionPolicy:
        return self.policy.tighter(digits + math.ceil(self.extra_bits / 3.32))

    # -- elementary pieces --------------------------------------------------

    def real(self, x) -> BigReal:
        return rational_to_real(Fraction(x), self.bits)

    def ln(self, x) -> BigReal:
        return ln_real(self.real(x))

    def ln_pow(self, x, m: int) -> BigReal:
        return ln_pow(self.real(x), m)

    def ln2pi(self) -> BigReal:
        return ln_real(pi_real(self.bits) * 2)

    def zero(self) -> BigReal:
        return BigReal.from_value(0, self.bits)

    def total(self, values) -> BigReal:
        acc = self.zero()
        for t in values:
            acc = acc + t
        return acc

    def inner_value(self, r: EvalResult) -> BigReal:
        self.inner.append(r)
        return r.value.re

    # -- series ------------------------------------------------------------

    def diff(self, x: Fraction, e: int, m: int, weight: Callable[[int], object], index_shift: int = 0) -> BigReal:
        """sum_n weight(n) T_{n+index_shift}[(k+x)^e ln^m(k+x)]."""
        out = difference_series(PowerLogTerm(x, e, 0, m), weight, self.policy, self.max_n, index_shift,
                                self.terms, self.extra_bits)
        self.sums.append(out)
        return out.value(out.bits).re

    def poch(self, x: Fraction, weight: Callable[[int], object], d: int = 0) -> BigReal:
        """sum_{n>=0} weight(n) n!/(x)_{n+1+d} for x > 0."""
        x = Fraction(x)
        if x <= 0:
            raise ValueError("Pochhammer series needs x > 0")
        bits = self.bits
        p, q = x.numerator, x.denominator
        r = 1 << bits
        for j in range(1 + d):
            r = fixed_div(r, q, p + j * q)

        def terms():
            nonlocal r
            n = 0
            while True:
                yield _weighted(r, 0, weight(n), bits)
                n += 1
                r = fixed_div(r, n * q, p + (n + d) * q)

        limit = self.max_n if self.terms is None else self.terms
        out = accumulate(_take(terms(), limit), bits, self.policy.target_digits, self.terms)
        self.sums.append(out)
        return out.value(bits).re

    def explicit(self, term: Callable[[int, int], int], start: int = 0) -> BigReal:
        """sum_{n>=start} term(n, bits), term returning a fixed-point real."""
        bits = self.bits
        limit = self.max_n if self.terms is None else self.terms

        def terms():
            n = start
            while True:
                yield term(n, bits), 0
                n += 1

        out = accumulate(_take(terms(), limit), bits, self.policy.target_digits, self.terms)
        self.sums.append(out)
        return out.value(bits).re

    def result(self, value: BigReal) -> EvalResult:
        if self.sums:
            n_terms = max(s.n_terms for s in self.sums)
            bits = max(s.bits for s in self.sums)
            err = max(float(s.error()) for s in self.sums)
            converged = all(s.converged for s in self.sums)
        else:  # closed form, e.g. a terminating case
            n_terms, bits, err, converged = 0, self.bits, 0.0, True
        converged = converged and all(r.converged for r in self.inner)
        err_real = BigReal.from_value(Fraction(err) if math.isfinite(err) else Fraction(0), 64)
        out = BigComplex(value.with_prec(self.policy.output_bits), 0, self.policy.output_bits)
        return EvalResult(out, n_terms, bits, err_real, converged)


def _take(it, limit: int):
    for n, t in enumerate(it):
        if n >= limit:
            return
        yield t


def signed(sign_of_n: Callable[[int], int], w: Callable[[int], object]) -> Callable[[int], object]:
    """Attach a sign pattern to a weight function."""
    return lambda n: w(n) if sign_of_n(n) > 0 else -w(n)
