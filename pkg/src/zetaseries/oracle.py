"""Reference values used only to validate the series modules.

Nothing here imports the series code.  Hurwitz zeta comes from
Euler-Maclaurin summation with a remainder bound, log-gamma and digamma
from Stirling's expansion after shifting the argument, constants from two
independent fixed-point schemes each, and Stieltjes constants from a
trapezoid rule on a circle around s = 1.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import libmp

from . import coeffs
from .errors import DomainError, PoleAtOne
from .mpnum import (
    LOG2_10,
    RND,
    BigComplex,
    BigReal,
    as_complex,
    cos_sin_real,
    ln_real,
    real_pow_complex,
)


@dataclass(frozen=True)
class OracleConfig:
    target_digits: int = 30
    euler_maclaurin_shift: int = 10
    bernoulli_terms: int = 10

    @property
    def bits(self) -> int:
        return math.ceil((self.target_digits + 10) * LOG2_10) + 20


def _cfg(cfg) -> OracleConfig:
    if cfg is None:
        return OracleConfig()
    if isinstance(cfg, OracleConfig):
        return cfg
    return OracleConfig(target_digits=int(cfg))


def _exact(x) -> Fraction:
    if isinstance(x, BigReal):
        return x.to_fraction()
    return Fraction(x)


_cache: dict = {}
_lock = threading.Lock()


def _memo(key, fn):
    v = _cache.get(key)
    if v is None:
        v = fn()
        with _lock:
            v = _cache.setdefault(key, v)
    return v


# ---------------------------------------------------------------------------
# constants, fixed point
# ---------------------------------------------------------------------------

def _atan_inv(x: int, one: int) -> int:
    """atan(1/x) * one by the Gregory series."""
    total = term = one // x
    x2 = x * x
    k = 1
    sign = -1
    while term:
        term //= x2
        total += sign * (term // (2 * k + 1))
        sign = -sign
        k += 1
    return total


def _atanh_inv(x: int, one: int) -> int:
    """atanh(1/x) * one."""
    total = term = one // x
    x2 = x * x
    k = 1
    while term:
        term //= x2
        total += term // (2 * k + 1)
        k += 1
    return total


def _pi_machin(bits: int) -> int:
    one = 1 << (bits + 20)
    return (16 * _atan_inv(5, one) - 4 * _atan_inv(239, one)) >> 20


def _pi_agm(bits: int) -> int:
    g = 40
    one = 1 << (bits + g)
    a = one
    b = math.isqrt(one * one // 2)
    t = one // 4
    p = 1
    while abs(a - b) > 4:
        an = (a + b) // 2
        b = math.isqrt(a * b)
        t -= p * (a - an) ** 2 // one
        a = an
        p *= 2
    return ((a + b) ** 2 // (4 * t)) >> g


def _ln2_a(bits: int) -> int:
    one = 1 << (bits + 20)
    return (2 * _atanh_inv(3, one)) >> 20


def _ln2_b(bits: int) -> int:
    one = 1 << (bits + 20)
    return (18 * _atanh_inv(26, one) - 2 * _atanh_inv(4801, one) + 8 * _atanh_inv(8749, one)) >> 20


def _gamma_euler_maclaurin(bits: int, ln2_fixed: int) -> int:
    """H_N - ln N - 1/(2N) + sum B_2k/(2k N^2k) with N = 2^e."""
    e = 10
    N = 1 << e
    g = 30
    one = 1 << (bits + g)
    h = sum(Fraction(1, j) for j in range(1, N + 1))
    acc = h - Fraction(1, 2 * N)
    tol = Fraction(1, 1 << (bits + g))
    k = 1
    while True:
        term = coeffs.bernoulli(2 * k) / (2 * k * Fraction(N) ** (2 * k))
        acc += term
        nxt = abs(coeffs.bernoulli(2 * k + 2)) / ((2 * k + 2) * Fraction(N) ** (2 * k + 2))
        if nxt < tol:
            break
        k += 1
    val = acc.numerator * one // acc.denominator
    return (val - e * (ln2_fixed << g)) >> g


def _gamma_brent_mcmillan(bits: int, ln2_fixed: int) -> int:
    """gamma = U/V - ln n with U = sum (n^k/k!)^2 H_k, V = sum (n^k/k!)^2."""
    g = 30
    one = 1 << (bits + g)
    e = 1
    while 4 * (1 << e) < (bits + g) * math.log(2) + 10:
        e += 1
    n = 1 << e
    n2 = n * n
    a = one  # (n^k/k!)^2 scaled
    b = 0  # a * H_k
    u, v = 0, a
    k = 1
    while a:
        a = a * n2 // (k * k)
        b = (b * n2 // k + a) // k
        u += b
        v += a
        k += 1
    return (u * one // v - e * (ln2_fixed << g)) >> g


def _fixed_to_real(x: int, bits: int) -> BigReal:
    return BigReal.from_fixed(x, bits, max(64, bits))


def _agree(a: int, b: int, label: str, slack: int = 64):
    if abs(a - b) > slack:
        raise AssertionError(f"reference schemes for {label} disagree by {abs(a - b)} ulp")


def _const_fixed(name: str, bits: int) -> int:
    def compute():
        if name == "pi":
            x, y = _pi_machin(bits), _pi_agm(bits)
            _agree(x, y, "pi")
            return x
        if name == "ln2":
            x, y = _ln2_a(bits), _ln2_b(bits)
            _agree(x, y, "ln2")
            return x
        if name == "gamma":
            l2 = _const_fixed("ln2", bits + 40)
            x = _gamma_euler_maclaurin(bits + 40, l2) >> 40
            y = _gamma_brent_mcmillan(bits + 40, l2) >> 40
            _agree(x, y, "gamma")
            return x
        if name == "ln2pi":
            pi = _const_fixed("pi", bits + 40)
            l2 = _const_fixed("ln2", bits + 40)
            one = 1 << (bits + 40)
            # scheme 1: libmp log of 2*pi
            two_pi = libmp.from_man_exp(2 * pi, -(bits + 40))
            x = libmp.to_fixed(libmp.mpf_log(two_pi, bits + 60, RND), bits + 40)
            # scheme 2: ln 2 + 2 atanh((pi-1)/(pi+1)) by series
            t = (pi - one) * one // (pi + one)
            t2 = t * t // one
            term, total, k = t, 0, 0
            while term:
                total += term // (2 * k + 1)
                term = term * t2 // one
                k += 1
            y = l2 + 2 * total
            _agree(x, y, "ln2pi", slack=1 << 20)
            return x >> 40
        raise ValueError(f"unknown constant {name!r}")

    return _memo(("const", name, bits), compute)


def const_ref(name: str, digits_or_bits=None, *, bits: int | None = None) -> BigReal:
    """Reference constant: 'pi', 'ln2', 'gamma' or 'ln2pi'.

    A plain integer argument is taken as decimal digits when <= 200 and as
    bits otherwise; ``bits=`` is explicit.
    """
    if bits is None:
        d = 30 if digits_or_bits is None else int(digits_or_bits)
        bits = math.ceil(d * LOG2_10) + 20 if d <= 200 else d
    return _fixed_to_real(_const_fixed(name, bits), bits)


# ---------------------------------------------------------------------------
# Hurwitz zeta by Euler-Maclaurin
# ---------------------------------------------------------------------------

def _em_parameters(s_re: float, s_im: float, a: float, digits: int, N0: int, M0: int):
    """Smallest shift N and Bernoulli count M whose remainder bound
    4|(s)_2M| / (2 pi)^2M * (a+N)^(1-sigma-2M) / (sigma+2M-1) is below 10^-(digits+5)."""
    log_tol = -(digits + 5) * math.log(10)
    s_abs = math.hypot(s_re, s_im)
    N = max(N0, int(s_abs) + 2)
    while True:
        log_poch = 0.0
        for M in range(1, 40 + 4 * digits):
            for j in (2 * M - 2, 2 * M - 1):
                log_poch += math.log(max(abs(complex(s_re + j, s_im)), 1e-300))
            if M < M0:
                continue
            den = s_re + 2 * M - 1
            if den <= 0:
                continue
            bound = (math.log(4) + log_poch - 2 * M * math.log(2 * math.pi)
                     + (1 - s_re - 2 * M) * math.log(a + N) - math.log(den))
            if bound < log_tol:
                return N, M
        N = int(N * 1.5) + 5


def hurwitz_ref(s, v, cfg=None) -> BigComplex:
    """zeta(s, v) for real v > 0 by Euler-Maclaurin with a remainder bound."""
    cfg = _cfg(cfg)
    v = _exact(v)
    if v <= 0:
        raise DomainError("v must be positive")
    if not isinstance(s, BigComplex):
        s = as_complex(s, cfg.bits) if isinstance(s, BigReal) else BigComplex(_exact_or_self(s), 0, cfg.bits)
    if s.im.is_zero() and s.re == 1:
        raise PoleAtOne("zeta has a pole at s = 1")
    s_re, s_im = float(s.re), float(s.im)
    N, M = _em_parameters(s_re, s_im, float(v), cfg.target_digits, cfg.euler_maclaurin_shift, cfg.bernoulli_terms)
    # terms reach (v+N)^(1-Re s); budget bits for that cancellation
    extra = max(0, int((1 - s_re) * math.log2(float(v) + N))) + 10
    wp = cfg.bits + extra
    s = s.with_prec(wp)
    return _memo(("hurwitz", s.re.mpf, s.im.mpf, v, cfg.target_digits),
                 lambda: _hurwitz_em(s, v, N, M, wp).with_prec(cfg.bits))


def _exact_or_self(x):
    return Fraction(x)


def _hurwitz_em(s: BigComplex, v: Fraction, N: int, M: int, wp: int) -> BigComplex:
    total = BigComplex(0, 0, wp)
    neg_s = -s
    for k in range(N):
        total = total + real_pow_complex(BigReal.from_value(v + k, wp), neg_s)
    x = BigReal.from_value(v + N, wp)
    x_neg_s = real_pow_complex(x, neg_s)
    total = total + x_neg_s * x / (s - 1) + x_neg_s / 2
    # sum_k B_2k/(2k)! (s)_{2k-1} x^(-s-2k+1)
    poch = s  # (s)_1
    xpow = x_neg_s / x  # x^(-s-1)
    inv_x2 = 1 / (x * x)
    for k in range(1, M + 1):
        b = coeffs.bernoulli(2 * k) / math.factorial(2 * k)
        total = total + poch * xpow * b
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        xpow = xpow * inv_x2
    return total


def dirichlet_ref(s, v, terms: int, prec: int = 256):
    """Plain partial sum sum_{k<terms} (v+k)^-s and the integral tail bound
    (v+terms-1)^(1-Re s)/(Re s - 1), for Re s > 1."""
    s = s if isinstance(s, BigComplex) else BigComplex(_exact(s), 0, prec)
    v = _exact(v)
    if s.re <= 1:
        raise DomainError("direct summation needs Re s > 1")
    total = BigComplex(0, 0, prec)
    for k in range(terms):
        total = total + real_pow_complex(BigReal.from_value(v + k, prec), -s)
    sr = float(s.re)
    bound = (float(v) + terms - 1) ** (1 - sr) / (sr - 1)
    return total, bound


# ---------------------------------------------------------------------------
# log-gamma, digamma
# ---------------------------------------------------------------------------

def _shift_for(v: Fraction, digits: int) -> int:
    target = math.ceil(1.2 * digits) + 10
    return max(0, math.ceil(target - v))


def lngamma_ref(v, cfg=None) -> BigReal:
    """ln Gamma(v) for v > 0 via Stirling's series at v+L."""
    cfg = _cfg(cfg)
    v = _exact(v)
    if v <= 0:
        raise DomainError("v must be positive")

    def compute():
        wp = cfg.bits + 20
        L = _shift_for(v, cfg.target_digits)
        z = v + L
        zr = BigReal.from_value(z, wp)
        lz = ln_real(zr)
        acc = (zr - Fraction(1, 2)) * lz - zr + const_ref("ln2pi", bits=wp) / 2
        tol = Fraction(1, 10 ** (cfg.target_digits + 8))
        zpow = zr  # z^(2k-1)
        z2 = zr * zr
        k = 1
        while True:
            b = coeffs.bernoulli(2 * k)
            acc = acc + b / (2 * k * (2 * k - 1)) / zpow
            bnext = abs(coeffs.bernoulli(2 * k + 2)) / ((2 * k + 2) * (2 * k + 1))
            zpow = zpow * z2
            if abs(bnext / zpow) < tol:
                break
            k += 1
        if L:
            prod = Fraction(1)
            for j in range(L):
                prod *= v + j
            acc = acc - ln_real(BigReal.from_value(prod, wp))
        return acc.with_prec(cfg.bits)

    return _memo(("lngamma", v, cfg.target_digits), compute)


def digamma_ref(v, cfg=None) -> BigReal:
    """Psi(v) for v > 0 via the asymptotic series at v+L."""
    cfg = _cfg(cfg)
    v = _exact(v)
    if v <= 0:
        raise DomainError("v must be positive")

    def compute():
        wp = cfg.bits + 20
        L = _shift_for(v, cfg.target_digits)
        z = v + L
        zr = BigReal.from_value(z, wp)
        acc = ln_real(zr) - 1 / (2 * zr)
        tol = Fraction(1, 10 ** (cfg.target_digits + 8))
        z2 = zr * zr
        zpow = z2
        k = 1
        while True:
            acc = acc - coeffs.bernoulli(2 * k) / (2 * k) / zpow
            zpow = zpow * z2
            if abs(coeffs.bernoulli(2 * k + 2) / (2 * k + 2) / zpow) < tol:
                break
            k += 1
        acc = acc - sum((Fraction(1) / (v + j) for j in range(L)), Fraction(0))
        return acc.with_prec(cfg.bits)

    return _memo(("digamma", v, cfg.target_digits), compute)


def trigamma_ref(v, cfg=None) -> BigReal:
    return hurwitz_ref(2, v, cfg).re


# ---------------------------------------------------------------------------
# Stieltjes constants
# ---------------------------------------------------------------------------

def laurent_coeff_ref(m: int, cfg=None) -> BigReal:
    """gamma_m from the Taylor coefficients of (s-1) zeta(s) around s = 1.

    (s-1) zeta(s) = 1 + sum_m (-1)^m gamma_m/m! (s-1)^(m+1); coefficients come
    from the trapezoid rule on |s-1| = 1/2, doubling the node count until two
    successive estimates agree to the target.
    """
    cfg = _cfg(cfg)
    if not 0 <= m <= 8:
        raise DomainError("m must be in 0..8")

    def compute():
        inner = OracleConfig(cfg.target_digits + 10, cfg.euler_maclaurin_shift, cfg.bernoulli_terms)
        wp = inner.bits
        tol = Fraction(1, 10 ** (cfg.target_digits + 2))
        nodes = max(16, 4 * (m + 2))
        prev = None
        samples: dict[int, BigComplex] = {}
        while True:
            est = _trapezoid_coeff(m + 1, nodes, inner, wp, samples)
            if prev is not None and abs((est - prev).to_fraction()) < tol:
                value = est * ((-1) ** m * math.factorial(m))
                return value.with_prec(cfg.bits)
            prev = est
            nodes *= 2
            if nodes > 4096:
                raise ArithmeticError("Laurent coefficient quadrature did not stabilise")

    return _memo(("laurent", m, cfg.target_digits), compute)


def _trapezoid_coeff(k: int, nodes: int, cfg: OracleConfig, wp: int, samples) -> BigReal:
    """(1/N) sum_j g(1 + r w^j) w^(-jk) / r^k with r = 1/2, w = e^(2 pi i/N)."""
    pi = const_ref("pi", bits=wp)
    r = Fraction(1, 2)
    total = BigReal.from_value(0, wp)
    # g(conj s) = conj g(s): sum j = 0..N/2 with weights
    for j in range(nodes // 2 + 1):
        theta = pi * (2 * j) / nodes
        key = Fraction(j, nodes)
        g = samples.get(key)
        if g is None:
            c, sn = cos_sin_real(theta)
            s = BigComplex(1 + r * c, r * sn)
            g = hurwitz_ref(s, 1, cfg) * (s - 1)
            samples[key] = g
        ck, sk = cos_sin_real(theta * k)
        # Re(g * e^(-i k theta))
        part = g.re * ck + g.im * sk
        weight = 1 if j in (0, nodes // 2) else 2
        total = total + part * weight
    return total / nodes * (2 ** k)
