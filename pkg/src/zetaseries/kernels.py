"""Kernel dispatch: the compiled extension when importable, else pure Python.

``ZETASERIES_PURE=1`` in the environment forces the Python versions.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("ZETASERIES_PURE") != "1":
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None
    else:
        _impl = _compiled
        BACKEND = "cython"
else:
    _compiled = None


def backend(name=None):
    """Module implementing the kernels ('cython', 'python' or current)."""
    if name is None:
        return _impl
    if name == "python":
        return _pykernels
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not available")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def available_backends():
    return ["python"] + (["cython"] if _compiled is not None else [])


def alt_sums(values):
    return _impl.alt_sums(values)


def alt_sums_windows(values, width):
    return _impl.alt_sums_windows(values, width)


def stirling1_next_row(row, n):
    return _impl.stirling1_next_row(row, n)


def gregory_abs_float(count):
    return _impl.gregory_abs_float(count)


def gregory_abs_fixed(count, bits):
    return _impl.gregory_abs_fixed(count, bits)


def fixed_convolve(a, b, count, bits):
    return _impl.fixed_convolve(list(a), list(b), count, bits)
