import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zetaseries import coeffs, polys
from zetaseries.errors import DegenerateLeading, DomainError
from zetaseries.mpnum import BigReal, PrecisionPolicy
from zetaseries.polys import RationalPoly

from series_oracle import falling_factorial, gregory_series

F = Fraction
small_q = st.fractions(min_value=-5, max_value=5, max_denominator=12)


def binom_in_x(k):
    """binom(x, k) as a polynomial, built from the falling factorial."""
    return RationalPoly(falling_factorial(k)) * F(1, math.factorial(k))


def psi_from_generating_function(n):
    # z (1+z)^x / ln(1+z) = sum_n psi_n(x) z^n  =>  psi_n = sum_k G_(n-k) binom(x, k)
    g = gregory_series(n)
    return sum((binom_in_x(k) * g[n - k] for k in range(n + 1)), RationalPoly())


def antiderivative(p):
    return RationalPoly([0] + [c / (i + 1) for i, c in enumerate(p.coeffs)])


def norlund_from_integral(n, m):
    big = antiderivative(binom_in_x(n))
    return big.shift(m) - big


# -- RationalPoly -----------------------------------------------------------

def test_poly_canonical_form():
    assert RationalPoly([1, 2, 0, 0]).degree == 1
    assert RationalPoly([0, 0]).is_zero() and RationalPoly().degree == -1
    with pytest.raises(AttributeError):
        RationalPoly([1]).coeffs = (2,)


@given(st.lists(small_q, max_size=6), st.lists(small_q, max_size=6), small_q)
def test_poly_ring_operations_evaluate_pointwise(a, b, x):
    p, q = RationalPoly(a), RationalPoly(b)
    assert polys.poly_eval(p + q, x) == polys.poly_eval(p, x) + polys.poly_eval(q, x)
    assert polys.poly_eval(p * q, x) == polys.poly_eval(p, x) * polys.poly_eval(q, x)
    assert polys.poly_eval(p.shift(3), x) == polys.poly_eval(p, x + 3)


def test_poly_json():
    assert polys.fontana_bessel(2).to_json("x") == {"var": "x", "coeffs": ["-1/12", "0/1", "1/2"]}


# -- psi_n --------------------------------------------------------------------

def test_fontana_bessel_examples():
    assert polys.fontana_bessel(0) == RationalPoly([1])
    assert polys.fontana_bessel(2) == RationalPoly([F(-1, 12), 0, F(1, 2)])
    assert polys.fontana_bessel(4) == RationalPoly([F(-19, 720), 0, F(1, 6), F(-1, 6), F(1, 24)])


@pytest.mark.parametrize("n", range(0, 16))
def test_fontana_bessel_matches_generating_function(n):
    assert polys.fontana_bessel(n) == psi_from_generating_function(n)


def test_psi_at_zero_is_gregory():
    assert all(polys.poly_eval(polys.fontana_bessel(n), 0) == coeffs.gregory(n) for n in range(1, 30))
    assert polys.poly_eval(polys.fontana_bessel(3), 0) == F(1, 24)


@given(st.integers(min_value=1, max_value=25), small_q)
def test_psi_value_matches_polynomial(n, x):
    assert polys.psi_value(n, x) == polys.poly_eval(polys.fontana_bessel(n), x)


@given(st.integers(min_value=1, max_value=20))
def test_psi_forward_difference_lowers_index(n):
    p = polys.fontana_bessel(n)
    assert p.shift(1) - p == polys.fontana_bessel(n - 1)


# -- N_{n,m}(a) ---------------------------------------------------------------

def test_norlund_examples():
    for m in range(1, 7):
        M = F(m)
        assert polys.norlund_poly(0, m) == RationalPoly([M])
        assert polys.norlund_poly(1, m) == RationalPoly([M * M / 2, M])
        assert polys.norlund_poly(2, m) == RationalPoly([M ** 3 / 6 - M * M / 4, M * M / 2 - M / 2, M / 2])
    central = [polys.norlund_value(2 * n, 1, n - 1) for n in range(1, 5)]
    assert central == [F(-1, 12), F(11, 720), F(-191, 60480), F(2497, 3628800)]


@pytest.mark.parametrize("n", range(0, 12))
@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_norlund_is_integral_of_binomial(n, m):
    assert polys.norlund_poly(n, m) == norlund_from_integral(n, m)


def test_norlund_specialisations():
    assert polys.poly_eval(polys.norlund_poly(3, 1), -1) == F(-3, 8)
    assert polys.poly_eval(polys.norlund_poly(5, 1), 0) == F(3, 160)
    for n in range(0, 25):
        assert polys.norlund_poly(n, 1) == polys.fontana_bessel(n)
        if n:
            assert polys.norlund_value(n, 1, 0) == coeffs.gregory(n)
        assert polys.norlund_value(n, 1, -1) == (-1) ** n * coeffs.cauchy2(n)


@given(st.integers(min_value=0, max_value=20), st.integers(min_value=1, max_value=5))
def test_norlund_difference_and_telescoping(n, m):
    p = polys.norlund_poly(n, m)
    nxt = polys.fontana_bessel(n + 1)
    assert p == nxt.shift(m) - nxt
    assert p == sum((polys.fontana_bessel(n).shift(k) for k in range(m)), RationalPoly())


@given(st.integers(min_value=0, max_value=25), st.integers(min_value=1, max_value=6), small_q)
def test_norlund_value_matches_polynomial(n, m, a):
    assert polys.norlund_value(n, m, a) == polys.poly_eval(polys.norlund_poly(n, m), a)


def test_norlund_value_real_matches_exact():
    a = F(3, 7)
    x = polys.norlund_value_real(12, 3, BigReal.from_value(a, 200), 200)
    assert float(abs(x - polys.norlund_value(12, 3, a))) < 1e-50


def test_norlund_derivative_examples():
    assert polys.norlund_derivative(0, 3).is_zero()
    assert polys.norlund_derivative(1, 1) == RationalPoly([1])
    assert polys.norlund_derivative(2, 2) == RationalPoly([1, 2])  # binom(a+2,2)-binom(a,2) = 2a+1


@given(st.integers(min_value=0, max_value=20), st.integers(min_value=1, max_value=5))
def test_norlund_derivative_identity(n, m):
    assert polys.norlund_derivative(n, m) == binom_in_x(n).shift(m) - binom_in_x(n)


# -- integral representation ------------------------------------------------

@pytest.mark.parametrize("n,x,expected", [
    (1, F(0), F(1, 2)),
    (3, F(1), F(-1, 24)),
    (4, F(-1), F(251, 720)),
])
def test_psi_integral_examples(n, x, expected):
    got = polys.psi_integral(n, x, PrecisionPolicy(15))
    assert abs(float(got) - float(expected)) < 1e-10


def test_psi_integral_domain():
    with pytest.raises(DomainError):
        polys.psi_integral(3, F(3), PrecisionPolicy(15))
    with pytest.raises(DomainError):
        polys.psi_integral(3, F(-3, 2), PrecisionPolicy(15))


# -- asymptotics --------------------------------------------------------------

def test_norlund_asymptotic_leading_term():
    n = 100
    # (-1)^(n+1) Gamma(1/2) sin(-pi/2) / (pi sqrt(n) ln n)
    expected = (-1) ** (n + 1) * math.sqrt(math.pi) * -1 / (math.pi * math.sqrt(n) * math.log(n))
    got = float(polys.norlund_asymptotic(n, 1, F(-1, 2)))
    assert abs(got - expected) < 1e-15


def test_norlund_asymptotic_integer_a_is_degenerate():
    with pytest.raises(DegenerateLeading):
        polys.norlund_asymptotic(100, 1, 0)
    # the two-term form is still defined
    assert float(polys.norlund_asymptotic(100, 1, 0, terms=2)) != 0


def test_two_term_asymptotic_error_shrinks_with_n():
    # the correction series is in powers of 1/ln n, so progress is slow but steady
    a = F(1, 3)
    errs = [abs(float(polys.norlund_asymptotic(n, 1, a, 2)) / float(polys.norlund_value(n, 1, a)) - 1)
            for n in (100, 400, 1600)]
    assert errs[0] > errs[1] > errs[2]
