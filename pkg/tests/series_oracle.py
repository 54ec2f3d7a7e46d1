"""Exact power-series helpers used as independent references in tests."""

import math
from fractions import Fraction


def reciprocal(c, n):
    """First n coefficients of 1/f for f = sum c_k z^k with c_0 != 0."""
    out = [Fraction(1) / c[0]]
    for k in range(1, n):
        acc = sum(c[j] * out[k - j] for j in range(1, min(k, len(c) - 1) + 1))
        out.append(-acc / c[0])
    return out


def multiply(a, b, n):
    return [sum(a[j] * b[k - j] for j in range(k + 1) if j < len(a) and k - j < len(b)) for k in range(n)]


def gregory_series(n):
    """Coefficients of z/ln(1+z) up to z^n: G_0..G_n."""
    # ln(1+z)/z = sum (-1)^k z^k/(k+1)
    return reciprocal([Fraction((-1) ** k, k + 1) for k in range(n + 1)], n + 1)


def cauchy2_series(n):
    """Coefficients of z/((1+z) ln(1+z)) up to z^n, times (-1)^k: C_0..C_n."""
    geo = [Fraction((-1) ** k) for k in range(n + 1)]
    raw = multiply(gregory_series(n), geo, n + 1)
    return [(-1) ** k * c for k, c in enumerate(raw)]


def bernoulli_series(n):
    """B_0..B_n from z/(e^z - 1)."""
    c = reciprocal([Fraction(1, math.factorial(k + 1)) for k in range(n + 1)], n + 1)
    return [c[k] * math.factorial(k) for k in range(n + 1)]


def falling_factorial(n):
    """Coefficients of x(x-1)...(x-n+1), constant first."""
    p = [1]
    for j in range(n):
        q = [0] * (len(p) + 1)
        for i, c in enumerate(p):
            q[i + 1] += c
            q[i] -= j * c
        p = q
    return p
