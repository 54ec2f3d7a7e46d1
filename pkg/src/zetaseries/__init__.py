"""Arbitrary-precision zeta, Stieltjes, Euler-constant and gamma-function values
from finite-difference series, with exact rational coefficient tables."""

from .constants import (
    delta, euler_gamma, euler_gamma_eval, exact_terms, gen_delta, gen_stieltjes, stieltjes,
)
from .errors import (
    ConstraintViolated, DegenerateLeading, DomainError, EtaZeroDivisor, NonPositiveBase, NotConverged, PoleAtOne,
    PoleSet, UnsupportedRegion, ZetaSeriesError,
)
from .findiff import EvalResult, binom_transform, forward_difference
from .gammafns import digamma, digamma_bounds_check, lngamma, pochhammer, trigamma
from .mpnum import BigComplex, BigReal, PrecisionPolicy
from .polys import RationalPoly, fontana_bessel, norlund_poly
from .zetaser import (
    BoundedSequence, SeriesSpec, dirichlet_series_eval, evaluate, hasse_hurwitz, hasse_zeta, verify_relation,
)

__version__ = "0.1.0"

__all__ = [
    "BigComplex", "BigReal", "BoundedSequence", "ConstraintViolated", "DegenerateLeading", "DomainError",
    "EtaZeroDivisor", "EvalResult", "NonPositiveBase", "NotConverged", "PoleAtOne", "PoleSet", "PrecisionPolicy",
    "RationalPoly", "SeriesSpec", "UnsupportedRegion", "ZetaSeriesError", "binom_transform", "delta", "digamma",
    "digamma_bounds_check", "dirichlet_series_eval", "euler_gamma", "euler_gamma_eval", "evaluate", "exact_terms",
    "fontana_bessel", "forward_difference", "gen_delta", "gen_stieltjes", "hasse_hurwitz", "hasse_zeta", "lngamma",
    "norlund_poly", "pochhammer", "stieltjes", "trigamma", "verify_relation",
]
