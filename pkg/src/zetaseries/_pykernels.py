"""Pure-Python versions of the hot kernels (same API as ``_kernels``)."""

import numpy as np


def alt_sums(values):
    """out[j] = sum_i (-1)^i C(j, i) values[i] for j < len(values).

    In-place forward differences: after j passes a[0] holds (-1)^j Δ^j.
    """
    a = list(values)
    n = len(a)
    if n == 0:
        return []
    out = [a[0]]
    for j in range(1, n):
        for k in range(n - j):
            a[k] = a[k] - a[k + 1]
        out.append(a[0])
    return out


def alt_sums_windows(values, width):
    """out[j][l] = sum_i (-1)^i C(j, i) values[i + l], l < width."""
    a = list(values)
    n = len(a)
    rows = [a[:width]]
    for j in range(1, n - width + 1):
        for k in range(n - j):
            a[k] = a[k] - a[k + 1]
        rows.append(a[:width])
    return rows


def stirling1_next_row(row, n):
    """Row n+1 of the signed Stirling triangle from row n."""
    out = [0] * (n + 2)
    for l in range(1, n + 2):
        left = row[l - 1]
        right = row[l] if l <= n else 0
        out[l] = left - n * right
    return out


def gregory_abs_float(count):
    """|G_1| .. |G_count| in double precision.

    Uses |G_n| = 1/(n+1) - sum_{k<n} |G_k| / (n+1-k).
    """
    g = np.zeros(count + 1)
    if count >= 1:
        g[1] = 0.5
    inv = 1.0 / np.arange(1, count + 2, dtype=float)
    for n in range(2, count + 1):
        # weights 1/(n+1-k) for k = 1..n-1 are inv[n-k]
        g[n] = inv[n] - np.dot(g[1:n], inv[n - 1:0:-1])
    return g[1:].tolist()


def gregory_abs_fixed(count, bits):
    """|G_1| .. |G_count| as integers at scale 2^bits (floor division)."""
    one = 1 << bits
    g = [0] * (count + 1)
    for n in range(1, count + 1):
        acc = one // (n + 1)
        for k in range(1, n):
            acc -= g[k] // (n + 1 - k)
        g[n] = acc
    return g[1:]


def fixed_convolve(a, b, count, bits):
    """out[n] = sum_{j<=n} a[n-j] * b[j] / 2^bits for n < count."""
    out = []
    for n in range(count):
        acc = 0
        for j in range(n + 1):
            acc += a[n - j] * b[j]
        out.append(acc >> bits)
    return out
