"""Exact polynomials: Fontana-Bessel psi_n(x) and Norlund N_{n,m}(a).

psi_n(x) = 1/(n-1)! * sum_{l=0}^{n-1} S_1(n-1, l) x^(l+1)/(l+1) + G_n,   psi_0 = 1
N_{n,m}(a) = 1/n! * sum_l S_1(n, l)/(l+1) * ((a+m)^(l+1) - a^(l+1))

Series code only needs values at one rational point, so besides the
polynomial objects there are integer-arithmetic evaluators
(:func:`psi_value`, :func:`norlund_value`) that never build the polynomial.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import reduce

import mpmath

from . import coeffs
from .errors import DegenerateLeading, DomainError
from .mpnum import BigReal, PrecisionPolicy, format_rational


class RationalPoly:
    """Dense polynomial with Fraction coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, power: int, c=1):
        return cls([0] * power + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly([other])
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPoly({[format_rational(c) for c in self.coeffs]})"

    def _lift(self, other):
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return RationalPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly([-x for x in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly([x * other for x in self.coeffs])
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return RationalPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        return poly_eval(self, x)

    def derivative(self) -> "RationalPoly":
        return RationalPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, c) -> "RationalPoly":
        """p(x + c) by repeated synthetic division (Taylor shift)."""
        c = Fraction(c)
        a = list(self.coeffs)
        n = len(a)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                a[j] += c * a[j + 1]
        return RationalPoly(a)

    def to_json(self, var: str = "x") -> dict:
        return {"var": var, "coeffs": [format_rational(c) for c in self.coeffs]}


def poly_eval(p: RationalPoly, a) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    a = Fraction(a)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * a + c
    return acc


def poly_eval_real(p: RationalPoly, a: BigReal) -> BigReal:
    """Horner evaluation in floating point, with extra working bits."""
    wp = a.prec + 2 * max(1, p.degree).bit_length() + 10
    x = a.with_prec(wp)
    acc = BigReal.from_value(0, wp)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc.with_prec(a.prec)


def binomial_poly(n: int, shift=0) -> RationalPoly:
    """binom(x + shift, n) as a polynomial in x."""
    out = RationalPoly([1])
    for j in range(n):
        out = out * RationalPoly([Fraction(shift) - j, 1])
    return out * Fraction(1, math.factorial(n))


# ---------------------------------------------------------------------------
# psi_n and N_{n,m}
# ---------------------------------------------------------------------------

_lock = threading.RLock()
_psi_cache: dict[int, RationalPoly] = {}
_norlund_cache: dict[tuple[int, int], RationalPoly] = {}


def fontana_bessel(n: int) -> RationalPoly:
    """psi_n(x)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = _psi_cache.get(n)
    if p is not None:
        return p
    if n == 0:
        p = RationalPoly([1])
    else:
        row = coeffs.stirling1_row(n - 1)
        f = math.factorial(n - 1)
        c = [coeffs.gregory(n)] + [Fraction(row[l], f * (l + 1)) for l in range(n)]
        p = RationalPoly(c)
    with _lock:
        return _psi_cache.setdefault(n, p)


def norlund_poly(n: int, m: int) -> RationalPoly:
    """N_{n,m}(a) as a polynomial in a."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 1:
        raise ValueError("m must be positive")
    key = (n, m)
    p = _norlund_cache.get(key)
    if p is not None:
        return p
    row = coeffs.stirling1_row(n)
    f = math.factorial(n)
    out = RationalPoly()
    for l in range(n + 1):
        if row[l]:
            power = RationalPoly.monomial(l + 1)
            out = out + (power.shift(m) - power) * Fraction(row[l], f * (l + 1))
    with _lock:
        return _norlund_cache.setdefault(key, out)


def norlund_derivative(n: int, m: int) -> RationalPoly:
    """d/da N_{n,m}(a), checked against binom(a+m, n) - binom(a, n)."""
    d = norlund_poly(n, m).derivative()
    expected = binomial_poly(n, m) - binomial_poly(n, 0)
    if d != expected:
        raise AssertionError(f"derivative identity failed for n={n}, m={m}")
    return d


# fast values at a rational point --------------------------------------------

def _lcm_upto(m: int) -> int:
    return reduce(math.lcm, range(1, m + 1), 1)


def _antiderivative_sum(n: int, x: Fraction) -> Fraction:
    """sum_l S_1(n, l) x^(l+1)/(l+1), i.e. the integral of the falling factorial from 0 to x."""
    row = coeffs.stirling1_row(n)
    p, q = x.numerator, x.denominator
    L = _lcm_upto(n + 1)
    acc = 0
    pw = p  # p^(l+1) q^(n-l) built incrementally
    qpow = [1] * (n + 1)
    for i in range(1, n + 1):
        qpow[i] = qpow[i - 1] * q
    for l in range(n + 1):
        c = row[l]
        if c:
            acc += c * (L // (l + 1)) * pw * qpow[n - l]
        pw *= p
    return Fraction(acc, L * q ** (n + 1))


_value_cache: dict[tuple, Fraction] = {}


def psi_value(n: int, x) -> Fraction:
    """psi_n(x) exactly, without building the polynomial."""
    x = Fraction(x)
    if n == 0:
        return Fraction(1)
    key = ("psi", n, x)
    v = _value_cache.get(key)
    if v is None:
        v = _antiderivative_sum(n - 1, x) / math.factorial(n - 1) + coeffs.gregory(n)
        _value_cache[key] = v
    return v


def norlund_value(n: int, m: int, a) -> Fraction:
    """N_{n,m}(a) = psi_{n+1}(a+m) - psi_{n+1}(a) exactly."""
    a = Fraction(a)
    if m < 1:
        raise ValueError("m must be positive")
    key = ("N", n, m, a)
    v = _value_cache.get(key)
    if v is None:
        v = (_antiderivative_sum(n, a + m) - _antiderivative_sum(n, a)) / math.factorial(n)
        _value_cache[key] = v
    return v


def norlund_value_real(n: int, m: int, a: BigReal, prec: int) -> BigReal:
    """N_{n,m}(a) at a real point by Horner on the antiderivative sum.

    The integer-coefficient terms cancel down to roughly the size of the
    result, so the evaluation runs with enough extra bits to absorb that.
    """
    if m < 1:
        raise ValueError("m must be positive")
    row = coeffs.stirling1_row(n)
    bound = abs(float(a)) + m + 1
    wp = prec + 16 + int(n * math.log2(bound)) + 2 * n.bit_length()
    total = []
    for x in (a.with_prec(wp) + m, a.with_prec(wp)):
        acc = BigReal.from_value(0, wp)
        for l in range(n, -1, -1):
            acc = acc * x + Fraction(row[l], l + 1)
        total.append(acc * x)
    return ((total[0] - total[1]) / math.factorial(n)).with_prec(prec)


# ---------------------------------------------------------------------------
# integral representation of psi_n
# ---------------------------------------------------------------------------

def psi_integral(n: int, x, policy: PrecisionPolicy) -> BigReal:
    """psi_n(x) from its real-line integral

        psi_n(x) = (-1)^(n+1)/pi * Int (pi cos(pi x) - v sin(pi x)) e^(v(x+1)) / ((1+e^v)^n (v^2+pi^2)) dv

    valid for -1 <= x <= n-1.  Away from the endpoints the integrand decays
    exponentially on both sides.  At x = -1 (left) or x = n-1 (right) it
    tends to c*pi/(v^2+pi^2); that algebraic part is integrated in closed
    form (c*pi/2 per half-line) and only the exponentially small remainder
    goes to quadrature.
    """
    x = Fraction(x)
    if n < 1:
        raise DomainError("n must be positive")
    if not (-1 <= x <= n - 1):
        raise DomainError(f"x must lie in [-1, {n - 1}]")
    bits = policy.working_bits(0)
    ctx = mpmath.MPContext()
    ctx.prec = bits
    X = ctx.mpf(x.numerator) / x.denominator
    pi = ctx.pi
    if x.denominator == 1:
        cos_px, sin_px = ctx.mpf(-1 if x.numerator % 2 else 1), ctx.zero
    else:
        cos_px, sin_px = ctx.cospi(X), ctx.sinpi(X)
    left_edge = x == -1
    right_edge = x == n - 1

    def weight(v):
        # e^(v(x+1)) / (1+e^v)^n without overflow
        if v > 0:
            return ctx.exp(v * (X + 1 - n)) / (1 + ctx.exp(-v)) ** n
        return ctx.exp(v * (X + 1)) / (1 + ctx.exp(v)) ** n

    def left(v):
        num = pi * cos_px - v * sin_px
        w = weight(v)
        if left_edge:  # e^(v(x+1)) = 1, subtract the limit 1
            w = 1 / (1 + ctx.exp(v)) ** n - 1
        return num * w / (v * v + pi * pi)

    def right(v):
        num = pi * cos_px - v * sin_px
        w = weight(v)
        if right_edge:
            w = 1 / (1 + ctx.exp(-v)) ** n - 1
        return num * w / (v * v + pi * pi)

    digits = policy.target_digits + 5
    rate_left = 1 if left_edge else min(1, float(x + 1))
    rate_right = 1 if right_edge else min(1, float(n - 1 - x))
    V_left = digits * math.log(10) / rate_left + 10
    V_right = digits * math.log(10) / rate_right + 10

    def nodes(V):
        k = max(4, int(V // 4))
        return [ctx.mpf(V) * j / k for j in range(k + 1)]

    total = ctx.quad(left, [-t for t in reversed(nodes(V_left))])
    total += ctx.quad(right, nodes(V_right))
    if left_edge:
        total += pi * cos_px / 2
    if right_edge:
        total += pi * cos_px / 2
    value = (-1) ** (n + 1) * total / pi
    return BigReal(value._mpf_, bits)


# ---------------------------------------------------------------------------
# large-n asymptotics of N_{n,m}(a)
# ---------------------------------------------------------------------------

def norlund_asymptotic(n: int, m: int, a, terms: int = 1, prec: int = 128) -> BigReal:
    """Leading terms of N_{n,m}(a) ~ (-1)^(n+1)/(pi n^(a+1)) sum_l g^(l)(a)/ln^(l+1) n,
    g(a) = sin(pi a) Gamma(a+1).  Only l = 0, 1 are available.
    """
    from . import oracle

    if terms not in (1, 2):
        raise ValueError("terms must be 1 or 2")
    if n < 10:
        raise DomainError("asymptotic form needs n >= 10")
    if m < 1:
        raise ValueError("m must be positive")
    a = Fraction(a) if not isinstance(a, BigReal) else a.to_fraction()
    if a < -1:
        raise DomainError("a must be >= -1")
    integer_a = a.denominator == 1
    if integer_a and terms == 1:
        raise DegenerateLeading("sin(pi a) = 0: the leading term vanishes")
    wp = prec + 20
    digits = math.ceil(wp / math.log2(10)) + 2
    ctx = mpmath.MPContext()
    ctx.prec = wp
    A = ctx.mpf(a.numerator) / a.denominator
    pi = ctx.pi
    if a == -1:
        # limits of g and g' at a = -1: -pi and pi*gamma
        g0 = -pi
        g1 = pi * ctx.mpf(oracle.const_ref("gamma", bits=wp).mpf)
    else:
        gam = ctx.exp(ctx.mpf(oracle.lngamma_ref(a + 1, digits).mpf))
        s = ctx.zero if integer_a else ctx.sinpi(A)
        c = ctx.cospi(A)
        g0 = s * gam
        g1 = pi * c * gam
        if terms == 2 and not integer_a:
            g1 += s * gam * ctx.mpf(oracle.digamma_ref(a + 1, digits).mpf)
    ln_n = ctx.log(n)
    series = g0 / ln_n
    if terms == 2:
        series += g1 / ln_n ** 2
    value = (-1) ** (n + 1) * series / (pi * ctx.power(n, A + 1))
    return BigReal(value._mpf_, prec)
