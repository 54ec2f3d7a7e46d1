"""Exact coefficient families with memoization.

All caches grow monotonically under a single lock and never rewrite an
entry, so concurrent readers only ever see complete values.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import reduce

from . import kernels

_lock = threading.RLock()

# signed Stirling numbers of the first kind, row n has entries l = 0..n
_stirling_rows: list[tuple[int, ...]] = [(1,)]


def stirling1_row(n: int) -> tuple[int, ...]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_stirling_rows):
        with _lock:
            while len(_stirling_rows) <= n:
                m = len(_stirling_rows) - 1
                _stirling_rows.append(tuple(kernels.stirling1_next_row(list(_stirling_rows[m]), m)))
    return _stirling_rows[n]


def stirling1(n: int, l: int) -> int:
    """S_1(n, l) with x(x-1)...(x-n+1) = sum_l S_1(n, l) x^l."""
    if l < 0 or l > n:
        return 0
    return stirling1_row(n)[l]


def _lcm_upto(m: int) -> int:
    return reduce(math.lcm, range(1, m + 1), 1)


def _stirling_weighted_sum(n: int, k: int, absolute: bool) -> Fraction:
    """(1/n!) sum_l S_1(n, l)/(l+k), computed over a common denominator."""
    row = stirling1_row(n)
    den = _lcm_upto(n + k)
    acc = 0
    for l in range(1, n + 1):
        c = row[l]
        if absolute and c < 0:
            c = -c
        acc += c * (den // (l + k))
    return Fraction(acc, den * math.factorial(n))


# ---------------------------------------------------------------------------
# Gregory coefficients
# ---------------------------------------------------------------------------

_gregory_cache: list[Fraction] = [Fraction(0)]  # index 0 unused


def _gregory_recurrence(upto: int) -> list[Fraction]:
    """G_1..G_upto from the recurrence, in integer arithmetic.

    G_n = (-1)^(n-1)/(n+1) + sum_{k=1}^{n-1} (-1)^(n+1-k) G_k/(n+1-k), G_1 = 1/2.
    Every G_k is stored as a_k / Q with Q = upto! * lcm(1..upto+1); the sum is
    formed over the extra factor R = lcm(1..upto+1) and divided back exactly.
    """
    R = _lcm_upto(upto + 1)
    Q = math.factorial(upto) * R
    a = [0, Q // 2]
    for n in range(2, upto + 1):
        acc = (-1) ** (n - 1) * (Q * (R // (n + 1)))
        for k in range(1, n):
            term = a[k] * (R // (n + 1 - k))
            acc += term if (n + 1 - k) % 2 == 0 else -term
        value, rem = divmod(acc, R)
        assert rem == 0, "Gregory recurrence left a remainder"
        a.append(value)
    return [Fraction(0)] + [Fraction(x, Q) for x in a[1:]]


def gregory_stirling(n: int) -> Fraction:
    """G_n = (1/n!) sum_{l=1}^n S_1(n, l)/(l+1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return _stirling_weighted_sum(n, 1, absolute=False)


def gregory(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    if n >= len(_gregory_cache):
        with _lock:
            if n >= len(_gregory_cache):
                upto = max(n, 2 * (len(_gregory_cache) - 1), 32)
                values = _gregory_recurrence(upto)
                for m in range(len(_gregory_cache), upto + 1):
                    if values[m] != gregory_stirling(m):
                        raise AssertionError(f"Gregory coefficient {m}: recurrence and Stirling sum disagree")
                    _gregory_cache.append(values[m])
    return _gregory_cache[n]


def gregory_abs(n: int) -> Fraction:
    return abs(gregory(n))


def gregory_abs_float(count: int) -> list[float]:
    """|G_1|..|G_count| as doubles (for long tail sweeps only)."""
    return kernels.gregory_abs_float(count)


# ---------------------------------------------------------------------------
# Cauchy numbers of the second kind, higher-order Gregory coefficients
# ---------------------------------------------------------------------------

_cauchy_cache: dict[int, Fraction] = {0: Fraction(1)}


def cauchy2(n: int) -> Fraction:
    """C_n = (1/n!) sum_l |S_1(n, l)|/(l+1), with C_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    value = _cauchy_cache.get(n)
    if value is None:
        value = _stirling_weighted_sum(n, 1, absolute=True)
        with _lock:
            value = _cauchy_cache.setdefault(n, value)
    return value


_higher_cache: dict[tuple[int, int], Fraction] = {}


def gregory_higher(n: int, k: int) -> Fraction:
    """G_n^(k) = (1/n!) sum_l S_1(n, l)/(l+k)."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if k == 1:
        return gregory(n)
    key = (n, k)
    value = _higher_cache.get(key)
    if value is None:
        value = _stirling_weighted_sum(n, k, absolute=False)
        with _lock:
            value = _higher_cache.setdefault(key, value)
    return value


# ---------------------------------------------------------------------------
# harmonic numbers, Stirling ratios, Bell polynomials, Bernoulli numbers
# ---------------------------------------------------------------------------

_harmonic: dict[int, list[Fraction]] = {}


def harmonic_gen(n: int, s: int) -> Fraction:
    """H_n^(s) = sum_{j=1}^n j^-s."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if s < 1:
        raise ValueError("order must be positive")
    table = _harmonic.get(s)
    if table is None or len(table) <= n:
        with _lock:
            table = list(_harmonic.get(s, [Fraction(0)]))
            for j in range(len(table), n + 1):
                table.append(table[-1] + Fraction(1, j ** s))
            _harmonic[s] = table
    return table[n]


def harmonic(n: int) -> Fraction:
    return harmonic_gen(n, 1)


def _stirling_ratio_closed(n: int, k: int) -> Fraction:
    if k == 1:
        return Fraction(1, n + 1)
    if k == 2:
        return harmonic(n + 1) / (n + 2)
    h = harmonic(n + 2)
    return (h * h - harmonic_gen(n + 2, 2)) / (2 * (n + 3))


def stirling_ratio(n: int, k: int) -> Fraction:
    """|S_1(n+k, k)| / (n+k)!."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    direct = Fraction(abs(stirling1(n + k, k)), math.factorial(n + k))
    if k <= 3 and direct != _stirling_ratio_closed(n, k):
        raise AssertionError(f"Stirling ratio closed form mismatch at n={n}, k={k}")
    return direct


def bell_modified(m: int, x) -> Fraction:
    """P_m with exp(sum x_n z^n / n) = sum P_m z^m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if len(x) < m:
        raise ValueError("need at least m arguments")
    p = [Fraction(1)]
    for j in range(1, m + 1):
        p.append(sum((Fraction(x[i - 1]) * p[j - i] for i in range(1, j + 1)), Fraction(0)) / j)
    return p[m]


_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from sum_{k<=m} C(m+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_bernoulli_cache):
        with _lock:
            b = list(_bernoulli_cache)
            for m in range(len(b), n + 1):
                if m > 1 and m % 2 == 1:
                    b.append(Fraction(0))
                    continue
                acc = Fraction(0)
                c = 1  # C(m+1, k)
                for k in range(m):
                    acc += c * b[k]
                    c = c * (m + 1 - k) // (k + 1)
                b.append(-acc / (m + 1))
            _bernoulli_cache[:] = b
    return _bernoulli_cache[n]


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

FAMILIES = ("gregory", "cauchy2", "stirling1", "gregory-higher", "harmonic", "stirling-ratio", "bernoulli")


def table(family: str, n_from: int, n_to: int, k: int = 1, l: int | None = None):
    """[(n, value)] for the named family over n_from..n_to inclusive."""
    if n_to < n_from:
        raise ValueError("empty range")
    fns = {
        "gregory": gregory,
        "cauchy2": cauchy2,
        "harmonic": harmonic,
        "bernoulli": bernoulli,
        "gregory-higher": lambda n: gregory_higher(n, k),
        "stirling-ratio": lambda n: stirling_ratio(n, k),
        "stirling1": lambda n: Fraction(stirling1(n, k if l is None else l)),
    }
    if family not in fns:
        raise ValueError(f"unknown coefficient family {family!r}")
    return [(n, fns[family](n)) for n in range(n_from, n_to + 1)]
