"""Multiprecision scalars and the working-precision policy.

Exact quantities are :class:`fractions.Fraction` (exported as ``BigRational``).
Floating values are :class:`BigReal`, an immutable binary float carrying its
own precision, and :class:`BigComplex`, a pair of BigReals.  Rounding is
always round-to-nearest-even and there is no global context, so results
depend only on the inputs and the precision they carry.

The low-level arithmetic is delegated to ``mpmath.libmp`` raw tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from mpmath import libmp

from .errors import NonPositiveBase

BigRational = Fraction

RND = libmp.round_nearest
MIN_PREC = 64
LOG2_10 = math.log2(10)

_ZERO = libmp.fzero


def _mpf_of(x, prec: int):
    """Raw mpf tuple for a BigReal, int or Fraction (rounded to prec)."""
    if isinstance(x, BigReal):
        return x.mpf
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        return libmp.from_int(x, prec, RND)
    if isinstance(x, Fraction):
        return libmp.from_rational(x.numerator, x.denominator, prec, RND)
    raise TypeError(f"cannot convert {type(x).__name__} to BigReal")


def _prec_of(x, default: int) -> int:
    return x.prec if isinstance(x, BigReal) else default


class BigReal:
    """Immutable binary floating-point number with an explicit precision."""

    __slots__ = ("mpf", "prec")

    def __init__(self, mpf, prec: int):
        if prec < MIN_PREC:
            raise ValueError(f"precision {prec} below minimum {MIN_PREC}")
        if mpf[3] > prec:
            mpf = libmp.mpf_pos(mpf, prec, RND)
        object.__setattr__(self, "mpf", mpf)
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("BigReal is immutable")

    # construction -------------------------------------------------------
    @classmethod
    def from_value(cls, x, prec: int) -> "BigReal":
        if isinstance(x, BigReal):
            return x.with_prec(prec)
        return cls(_mpf_of(x, prec), prec)

    @classmethod
    def from_fixed(cls, value: int, bits: int, prec: int) -> "BigReal":
        """value * 2**-bits rounded to prec."""
        return cls(libmp.from_man_exp(value, -bits, prec, RND), prec)

    @classmethod
    def from_str(cls, text: str, prec: int) -> "BigReal":
        return cls(libmp.from_str(text, prec, RND), prec)

    def with_prec(self, prec: int) -> "BigReal":
        return BigReal(libmp.mpf_pos(self.mpf, prec, RND), prec)

    # conversion ---------------------------------------------------------
    def to_fraction(self) -> Fraction:
        sign, man, exp, _ = self.mpf
        if not man:
            return Fraction(0)
        man = int(man)
        val = Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)
        return -val if sign else val

    def to_fixed(self, bits: int) -> int:
        """round(self * 2**bits), ties to even."""
        sign, man, exp, _ = self.mpf
        if not man:
            return 0
        man = int(man)
        shift = exp + bits
        if shift >= 0:
            out = man << shift
        else:
            out = _round_shift(man, -shift)
        return -out if sign else out

    def __float__(self) -> float:
        return libmp.to_float(self.mpf)

    def to_decimal(self, digits: int) -> str:
        return libmp.to_str(self.mpf, digits, strip_zeros=False)

    def __repr__(self) -> str:
        return f"BigReal('{libmp.to_str(self.mpf, max(1, int(self.prec / LOG2_10)))}', prec={self.prec})"

    def __str__(self) -> str:
        return libmp.to_str(self.mpf, max(1, int(self.prec / LOG2_10)))

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.mpf == _ZERO or not self.mpf[1]

    def sign(self) -> int:
        return libmp.mpf_sign(self.mpf)

    def magnitude_bits(self) -> int:
        """floor(log2|x|)+1, or a very negative number for zero."""
        sign, man, exp, bc = self.mpf
        if not man:
            return -(10 ** 9)
        return exp + bc

    # arithmetic ---------------------------------------------------------
    def _binary(self, other, op):
        if isinstance(other, BigReal):
            prec = max(self.prec, other.prec)
            return BigReal(op(self.mpf, other.mpf, prec, RND), prec)
        if isinstance(other, (int, Fraction)):
            prec = self.prec
            return BigReal(op(self.mpf, _mpf_of(other, prec + 64), prec, RND), prec)
        return NotImplemented

    def _rbinary(self, other, op):
        if isinstance(other, (int, Fraction)):
            prec = self.prec
            return BigReal(op(_mpf_of(other, prec + 64), self.mpf, prec, RND), prec)
        return NotImplemented

    def __add__(self, other):
        return self._binary(other, libmp.mpf_add)

    def __radd__(self, other):
        return self._rbinary(other, libmp.mpf_add)

    def __sub__(self, other):
        return self._binary(other, libmp.mpf_sub)

    def __rsub__(self, other):
        return self._rbinary(other, libmp.mpf_sub)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return BigReal(libmp.mpf_mul_int(self.mpf, other, self.prec, RND), self.prec)
        return self._binary(other, libmp.mpf_mul)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, int) and not isinstance(other, bool) and other:
            return BigReal(libmp.mpf_div(self.mpf, libmp.from_int(other), self.prec, RND), self.prec)
        return self._binary(other, libmp.mpf_div)

    def __rtruediv__(self, other):
        return self._rbinary(other, libmp.mpf_div)

    def __neg__(self):
        return BigReal(libmp.mpf_neg(self.mpf), self.prec)

    def __pos__(self):
        return self

    def __abs__(self):
        return BigReal(libmp.mpf_abs(self.mpf), self.prec)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return BigReal(libmp.mpf_pow_int(self.mpf, n, self.prec, RND), self.prec)

    # comparison is exact on the represented values
    def _cmp(self, other) -> int:
        if isinstance(other, BigReal):
            return libmp.mpf_cmp(self.mpf, other.mpf)
        if isinstance(other, (int, Fraction)):
            a = self.to_fraction()
            return (a > other) - (a < other)
        raise TypeError

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash(self.to_fraction())


def _round_shift(man: int, shift: int) -> int:
    """Nonnegative man >> shift, rounded to nearest, ties to even."""
    q = man >> shift
    rem = man - (q << shift)
    half = 1 << (shift - 1)
    if rem > half or (rem == half and q & 1):
        q += 1
    return q


Realish = Union[BigReal, int, Fraction]


class BigComplex:
    """Complex number stored as two BigReals of equal precision."""

    __slots__ = ("re", "im")

    def __init__(self, re: Realish, im: Realish = 0, prec: int | None = None):
        if prec is None:
            prec = max(_prec_of(re, MIN_PREC), _prec_of(im, MIN_PREC))
        object.__setattr__(self, "re", BigReal.from_value(re, prec))
        object.__setattr__(self, "im", BigReal.from_value(im, prec))

    def __setattr__(self, name, value):
        raise AttributeError("BigComplex is immutable")

    @property
    def prec(self) -> int:
        return self.re.prec

    def with_prec(self, prec: int) -> "BigComplex":
        return BigComplex(self.re, self.im, prec)

    def is_real(self) -> bool:
        return self.im.is_zero()

    def conj(self) -> "BigComplex":
        return BigComplex(self.re, -self.im)

    def __repr__(self):
        return f"BigComplex({self.re!s}, {self.im!s}, prec={self.prec})"

    def _coerce(self, other):
        if isinstance(other, BigComplex):
            return other
        if isinstance(other, (BigReal, int, Fraction)):
            return BigComplex(other, 0, _prec_of(other, self.prec))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return BigComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return BigComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (BigReal, int, Fraction)):
            return BigComplex(self.re * other, self.im * other)
        if not isinstance(other, BigComplex):
            return NotImplemented
        if other.im.is_zero():
            return BigComplex(self.re * other.re, self.im * other.re)
        return BigComplex(self.re * other.re - self.im * other.im,
                          self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (BigReal, int, Fraction)):
            return BigComplex(self.re / other, self.im / other)
        if not isinstance(other, BigComplex):
            return NotImplemented
        if other.im.is_zero():
            return BigComplex(self.re / other.re, self.im / other.re)
        prec = max(self.prec, other.prec) + 8
        a, b = self.re.with_prec(prec), self.im.with_prec(prec)
        c, d = other.re.with_prec(prec), other.im.with_prec(prec)
        den = c * c + d * d
        out = BigComplex((a * c + b * d) / den, (b * c - a * d) / den)
        return out.with_prec(prec - 8)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return BigComplex(-self.re, -self.im)

    def __abs__(self) -> BigReal:
        return BigReal(libmp.mpf_hypot(self.re.mpf, self.im.mpf, self.prec, RND), self.prec)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))


def as_complex(x, prec: int | None = None) -> BigComplex:
    if isinstance(x, BigComplex):
        return x if prec is None else x.with_prec(prec)
    p = prec if prec is not None else _prec_of(x, MIN_PREC)
    return BigComplex(x, 0, p)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def rational_to_real(q: Fraction | int, p: int) -> BigReal:
    """q correctly rounded to p bits."""
    if p < MIN_PREC:
        raise ValueError(f"precision must be at least {MIN_PREC} bits")
    return BigReal(_mpf_of(Fraction(q), p), p)


def _check_positive(x: BigReal):
    if x.sign() <= 0:
        raise NonPositiveBase(f"base must be positive, got {x}")


def ln_real(x: BigReal) -> BigReal:
    _check_positive(x)
    return BigReal(libmp.mpf_log(x.mpf, x.prec, RND), x.prec)


def ln_pow(x: BigReal, m: int) -> BigReal:
    """ln(x)**m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    _check_positive(x)
    if m == 0:
        return BigReal.from_value(1, x.prec)
    wp = x.prec + 8 + m.bit_length() * 2
    lg = libmp.mpf_log(x.mpf, wp, RND)
    return BigReal(libmp.mpf_pow_int(lg, m, x.prec, RND), x.prec)


def exp_real(x: BigReal) -> BigReal:
    return BigReal(libmp.mpf_exp(x.mpf, x.prec, RND), x.prec)


def sqrt_real(x: BigReal) -> BigReal:
    if x.sign() < 0:
        raise NonPositiveBase("square root of a negative number")
    return BigReal(libmp.mpf_sqrt(x.mpf, x.prec, RND), x.prec)


def cos_sin_real(x: BigReal) -> tuple[BigReal, BigReal]:
    c, s = libmp.mpf_cos_sin(x.mpf, x.prec, RND)
    return BigReal(c, x.prec), BigReal(s, x.prec)


def pi_real(prec: int) -> BigReal:
    return BigReal(libmp.mpf_pi(prec, RND), prec)


def real_pow_complex(base: BigReal | int | Fraction, s) -> BigComplex:
    """base**s = exp(s ln base) for a positive real base."""
    s = as_complex(s) if not isinstance(s, BigComplex) else s
    if not isinstance(base, BigReal):
        base = BigReal.from_value(base, s.prec)
    _check_positive(base)
    prec = max(base.prec, s.prec)
    re, im = _pow_mpf(base.mpf, s.re.mpf, s.im.mpf, prec)
    return BigComplex(BigReal(re, prec), BigReal(im, prec))


def _pow_mpf(base_mpf, sre, sim, prec):
    wp = prec + 20
    if sim == _ZERO or not sim[1]:
        if sre == _ZERO or not sre[1]:
            return libmp.from_int(1), _ZERO
        lg = libmp.mpf_log(base_mpf, wp + _exp_bits(sre), RND)
        return libmp.mpf_exp(libmp.mpf_mul(sre, lg, wp + _exp_bits(sre), RND), prec, RND), _ZERO
    extra = max(_exp_bits(sre), _exp_bits(sim))
    lg = libmp.mpf_log(base_mpf, wp + extra, RND)
    mag = libmp.mpf_exp(libmp.mpf_mul(sre, lg, wp + extra, RND), wp, RND)
    c, sn = libmp.mpf_cos_sin(libmp.mpf_mul(sim, lg, wp + extra, RND), wp, RND)
    return libmp.mpf_mul(mag, c, prec, RND), libmp.mpf_mul(mag, sn, prec, RND)


def _exp_bits(x) -> int:
    """Extra bits to absorb the magnitude of an exponent factor."""
    sign, man, exp, bc = x
    if not man:
        return 0
    return max(0, exp + bc) + 4


# ---------------------------------------------------------------------------
# precision policy
# ---------------------------------------------------------------------------

def _linear(n: int) -> int:
    return n


@dataclass(frozen=True)
class PrecisionPolicy:
    """Target accuracy plus the working-precision rule for series of length n."""

    target_digits: int
    guard_bits: int = 32
    cancellation_model: Callable[[int], int] = field(default=_linear, compare=False)

    def __post_init__(self):
        if self.target_digits <= 0:
            raise ValueError("target_digits must be positive")
        if self.guard_bits < 0:
            raise ValueError("guard_bits must be nonnegative")

    @property
    def base_bits(self) -> int:
        return math.ceil(self.target_digits * LOG2_10) + self.guard_bits

    def working_bits(self, n: int = 0) -> int:
        return max(MIN_PREC, self.base_bits + max(0, self.cancellation_model(n)))

    @property
    def output_bits(self) -> int:
        """Precision used for returned values."""
        return max(MIN_PREC, math.ceil(self.target_digits * LOG2_10) + 16)

    def tolerance(self) -> Fraction:
        return Fraction(1, 10 ** self.target_digits)

    def tighter(self, extra_digits: int) -> "PrecisionPolicy":
        return PrecisionPolicy(self.target_digits + extra_digits, self.guard_bits, self.cancellation_model)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def format_real(x: BigReal, digits: int) -> str:
    return x.to_decimal(digits)


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Accept 'p/q' or an integer literal; anything else is rejected."""
    t = text.strip()
    if "/" in t:
        num, den = t.split("/", 1)
        if not _is_int(num) or not _is_int(den) or den.strip().startswith(("-", "+")):
            raise ValueError(f"not a rational literal: {text!r}")
        d = int(den)
        if d == 0:
            raise ValueError("zero denominator")
        return Fraction(int(num), d)
    if not _is_int(t):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(int(t))


def _is_int(t: str) -> bool:
    t = t.strip()
    if t[:1] in "+-":
        t = t[1:]
    return t.isdigit()


def parse_complex(text: str) -> tuple[Fraction, Fraction]:
    """Exact (re, im) from '2', '1/2', '0.5+14.134725i', '-3i', '1e-30'."""
    t = text.strip().replace(" ", "").replace("j", "i")
    if not t:
        raise ValueError("empty complex literal")
    if not t.endswith("i"):
        return _parse_part(t), Fraction(0)
    body = t[:-1]
    # split at the last sign that is not part of an exponent
    cut = -1
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE":
            cut = i
            break
    if cut < 0:
        re_text, im_text = "", body
    else:
        re_text, im_text = body[:cut], body[cut:]
    if im_text in ("", "+"):
        im_text = "1"
    elif im_text == "-":
        im_text = "-1"
    return (_parse_part(re_text) if re_text else Fraction(0)), _parse_part(im_text)


def _parse_part(t: str) -> Fraction:
    try:
        return Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a real literal: {t!r}") from None
