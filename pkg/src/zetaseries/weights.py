"""Series weights for long sums.

Below ``EXACT_LIMIT`` every weight is the exact rational from :mod:`coeffs`
or :mod:`polys`.  Past it the exact values get expensive (their denominators
grow like n!), so weights come from fixed-point sweeps carried with ample
guard bits and are returned as :class:`BigReal`.  Both paths meet at the
seam: ``check_seam`` compares them there.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from . import coeffs, kernels, polys
from .findiff import fixed_div
from .mpnum import BigReal

EXACT_LIMIT = 256

_lock = threading.RLock()
_tables: dict[tuple, list[int]] = {}


def _bits_for(prec: int) -> int:
    # fixed guard for sweeps up to ~2^20 terms; multiples of 64 let nearby precisions share tables
    return (prec + 80 + 63) // 64 * 64


def _grow(key: tuple, count: int, build) -> list[int]:
    """Cached fixed table with at least ``count`` entries."""
    with _lock:
        t = _tables.get(key)
        if t is None or len(t) < count:
            size = max(count, 2 * len(t) if t else 0, 2 * EXACT_LIMIT)
            t = build(size)
            _tables[key] = t
        return t


def _real(x: int, bits: int, prec: int) -> BigReal:
    return BigReal.from_fixed(x, bits, prec)


def _gregory_table(count: int, bits: int) -> list[int]:
    """|G_1|..|G_count| at scale 2^bits."""
    return _grow(("G", bits), count, lambda size: kernels.gregory_abs_fixed(size, bits))


def gregory_abs(n: int, prec: int):
    """|G_n|."""
    if n < EXACT_LIMIT:
        return coeffs.gregory_abs(n)
    bits = _bits_for(prec)
    return _real(_gregory_table(n, bits)[n - 1], bits, prec)


def gregory(n: int, prec: int):
    """G_n with its sign (-1)^(n-1)."""
    g = gregory_abs(n, prec)
    return g if n % 2 else -g


def cauchy2(n: int, prec: int):
    """C_n = 1 - sum_{k<=n} |G_k|."""
    if n < EXACT_LIMIT:
        return coeffs.cauchy2(n)
    bits = _bits_for(prec)

    def build(size):
        out, acc = [], 1 << bits
        for g in _gregory_table(size, bits)[:size]:
            acc -= g
            out.append(acc)
        return out

    return _real(_grow(("C", bits), n, build)[n - 1], bits, prec)


def harmonic(n: int, prec: int):
    if n < EXACT_LIMIT:
        return coeffs.harmonic(n)
    bits = _bits_for(prec)

    def build(size):
        one = 1 << bits
        out, acc = [], 0
        for j in range(1, size + 1):
            acc += fixed_div(one, 1, j)
            out.append(acc)
        return out

    t = _grow(("H", bits), n, build)
    return _real(t[n - 1], bits, prec)


def stirling_ratio(n: int, k: int, prec: int):
    """|S_1(n+k,k)|/(n+k)! = e_{k-1}(1, 1/2, ..., 1/(n+k-1)) / (n+k)."""
    if n + k < EXACT_LIMIT:
        return coeffs.stirling_ratio(n, k)
    N = n + k
    bits = _bits_for(prec)

    def build(size):
        # row N-1 holds e_0..e_{k-1} of 1, 1/2, ..., 1/(N-1)
        one = 1 << bits
        e = [one] + [0] * (k - 1)
        out = [e[k - 1]]  # N = 1: empty product set
        for j in range(1, size):
            for r in range(k - 1, 0, -1):
                e[r] += fixed_div(e[r - 1], 1, j)
            out.append(e[k - 1])
        return out

    t = _grow(("S", k, bits), N, build)
    return _real(fixed_div(t[N - 1], 1, N), bits, prec)


def _binomial_fixed(x: Fraction, size: int, bits: int) -> list[int]:
    """C(x, j) for j < size at scale 2^bits."""
    out = [1 << bits]
    c = out[0]
    for j in range(1, size):
        f = (x - j + 1) / j
        c = fixed_div(c, f.numerator, f.denominator)
        out.append(c)
    return out


def _signed_gregory_fixed(size: int, bits: int) -> list[int]:
    """G_0 = 1, G_1, ..., G_{size-1} at scale 2^bits."""
    t = _gregory_table(size, bits)
    return [1 << bits] + [t[i - 1] if i % 2 else -t[i - 1] for i in range(1, size)]


def psi(n: int, x, prec: int):
    """psi_n(x) = sum_j G_{n-j} C(x, j), G_0 = 1."""
    x = Fraction(x)
    if n < EXACT_LIMIT:
        return polys.psi_value(n, x)
    bits = _bits_for(prec)

    def build(size):
        g = _signed_gregory_fixed(size, bits)
        return kernels.fixed_convolve(g, _binomial_fixed(x, size, bits), size, bits)

    t = _grow(("psi", x, bits), n + 1, build)
    return _real(t[n], bits, prec)


def norlund(n: int, m: int, a, prec: int):
    """N_{n,m}(a) = psi_{n+1}(a+m) - psi_{n+1}(a)."""
    a = Fraction(a)
    if n < EXACT_LIMIT:
        return polys.norlund_value(n, m, a)
    bits = _bits_for(prec)

    def build(size):
        g = _signed_gregory_fixed(size + 1, bits)
        hi = _binomial_fixed(a + m, size + 1, bits)
        lo = _binomial_fixed(a, size + 1, bits)
        d = [p - q for p, q in zip(hi, lo)]
        return kernels.fixed_convolve(g, d, size + 1, bits)[1:]

    t = _grow(("N", m, a, bits), n + 1, build)
    return _real(t[n], bits, prec)


def check_seam(prec: int = 256) -> float:
    """Largest relative gap between exact and swept weights just below the seam."""
    n = EXACT_LIMIT - 1
    bits = _bits_for(prec)
    g = _signed_gregory_fixed(n + 2, bits)
    a, m = Fraction(1, 2), 2
    d = [p - q for p, q in zip(_binomial_fixed(a + m, n + 2, bits), _binomial_fixed(a, n + 2, bits))]
    pairs = [
        (coeffs.gregory_abs(n), _real(_gregory_table(n, bits)[n - 1], bits, prec)),
        (polys.norlund_value(n, m, a), _real(kernels.fixed_convolve(g, d, n + 2, bits)[n + 1], bits, prec)),
    ]
    return max(abs(float((real - exact) / exact)) for exact, real in pairs)
