# cython: boundscheck=False, wraparound=False
"""Compiled kernels; see _pykernels for the reference behaviour."""

from libc.stdlib cimport malloc, free


def alt_sums(values):
    cdef list a = list(values)
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t j, k
    cdef list out
    if n == 0:
        return []
    out = [a[0]]
    for j in range(1, n):
        for k in range(n - j):
            a[k] = a[k] - a[k + 1]
        out.append(a[0])
    return out


def alt_sums_windows(values, Py_ssize_t width):
    cdef list a = list(values)
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t j, k
    cdef list rows = [a[:width]]
    for j in range(1, n - width + 1):
        for k in range(n - j):
            a[k] = a[k] - a[k + 1]
        rows.append(a[:width])
    return rows


def stirling1_next_row(row, Py_ssize_t n):
    cdef list out = [0] * (n + 2)
    cdef Py_ssize_t l
    cdef object nn = n
    for l in range(1, n + 2):
        if l <= n:
            out[l] = row[l - 1] - nn * row[l]
        else:
            out[l] = row[l - 1]
    return out


def gregory_abs_float(Py_ssize_t count):
    cdef double *g = <double *> malloc((count + 2) * sizeof(double))
    cdef Py_ssize_t n, k
    cdef double acc
    if g == NULL:
        raise MemoryError()
    try:
        g[0] = 0.0
        if count >= 1:
            g[1] = 0.5
        for n in range(2, count + 1):
            acc = 0.0
            for k in range(1, n):
                acc += g[k] / <double>(n + 1 - k)
            g[n] = 1.0 / <double>(n + 1) - acc
        return [g[n] for n in range(1, count + 1)]
    finally:
        free(g)


def gregory_abs_fixed(Py_ssize_t count, Py_ssize_t bits):
    cdef object one = (<object>1) << bits
    cdef list g = [0] * (count + 1)
    cdef Py_ssize_t n, k
    cdef object acc
    for n in range(1, count + 1):
        acc = one // (n + 1)
        for k in range(1, n):
            acc -= g[k] // (n + 1 - k)
        g[n] = acc
    return g[1:]


def fixed_convolve(list a, list b, Py_ssize_t count, Py_ssize_t bits):
    cdef list out = []
    cdef Py_ssize_t n, j
    cdef object acc
    for n in range(count):
        acc = 0
        for j in range(n + 1):
            acc += a[n - j] * b[j]
        out.append(acc >> bits)
    return out
