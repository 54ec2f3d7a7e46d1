import math
import threading
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zetaseries import coeffs

from series_oracle import bernoulli_series, cauchy2_series, falling_factorial, gregory_series

F = Fraction


# -- Stirling numbers -------------------------------------------------------

def test_stirling_examples():
    assert coeffs.stirling1(3, 2) == -3
    assert coeffs.stirling1(4, 1) == -6
    assert all(coeffs.stirling1(n, n) == 1 for n in range(51))
    assert coeffs.stirling1(3, 5) == 0
    assert coeffs.stirling1(0, 0) == 1


@pytest.mark.parametrize("n", [0, 1, 5, 12, 30])
def test_stirling_rows_expand_falling_factorial(n):
    assert list(coeffs.stirling1_row(n)) == falling_factorial(n)


@given(st.integers(min_value=1, max_value=40), st.integers(min_value=1, max_value=40))
def test_stirling_sign_pattern(n, l):
    v = coeffs.stirling1(n, l)
    if l <= n:
        assert v != 0 and (v > 0) == ((n - l) % 2 == 0)


# -- Gregory and Cauchy -----------------------------------------------------

def test_gregory_examples():
    assert coeffs.gregory(2) == F(-1, 12)
    assert coeffs.gregory(4) == F(-19, 720)
    assert coeffs.gregory(6) == F(-863, 60480)


def test_gregory_against_generating_function():
    ref = gregory_series(40)
    assert [coeffs.gregory(n) for n in range(1, 41)] == ref[1:]


def test_gregory_two_routes_agree():
    assert all(coeffs.gregory(n) == coeffs.gregory_stirling(n) for n in range(1, 61))


def test_gregory_signs():
    assert all(coeffs.gregory(n) == (-1) ** (n - 1) * coeffs.gregory_abs(n) for n in range(1, 61))
    assert all(coeffs.gregory_abs(n) > 0 for n in range(1, 61))


def test_cauchy_examples():
    assert coeffs.cauchy2(2) == F(5, 12)
    assert coeffs.cauchy2(4) == F(251, 720)
    assert coeffs.cauchy2(6) == F(19087, 60480)
    assert coeffs.cauchy2(0) == 1


def test_cauchy_against_generating_function():
    assert [coeffs.cauchy2(n) for n in range(0, 31)] == cauchy2_series(30)


def test_cauchy_positive_decreasing_and_telescoping():
    c = [coeffs.cauchy2(n) for n in range(61)]
    assert all(x > 0 for x in c)
    assert all(c[n - 1] > c[n] for n in range(1, 61))
    assert all(c[n - 1] - c[n] == coeffs.gregory_abs(n) for n in range(1, 61))
    assert all(c[n] == 1 - sum(coeffs.gregory_abs(k) for k in range(1, n + 1)) for n in range(0, 61, 10))


def test_fontana_partial_sums_increase_below_one():
    partial, prev = F(0), F(-1)
    for n in range(1, 201):
        partial += coeffs.gregory_abs(n)
        assert prev < partial < 1
        prev = partial


def test_gregory_float_sweep_tracks_exact():
    fl = coeffs.gregory_abs_float(120)
    for n in (1, 2, 10, 60, 120):
        assert abs(fl[n - 1] - float(coeffs.gregory_abs(n))) <= 1e-13 * float(coeffs.gregory_abs(n))


# -- higher order, harmonic, Stirling ratios --------------------------------

def test_gregory_higher_examples():
    assert all(coeffs.gregory_higher(n, 1) == coeffs.gregory(n) for n in range(1, 21))
    assert coeffs.gregory_higher(1, 2) == F(1, 3)
    assert coeffs.gregory_higher(2, 2) == F(-1, 24)


@pytest.mark.parametrize("n,k", [(0, 1), (1, 0)])
def test_gregory_higher_domain(n, k):
    with pytest.raises(ValueError):
        coeffs.gregory_higher(n, k)


def test_harmonic_examples():
    assert coeffs.harmonic(0) == 0
    assert coeffs.harmonic(1) == 1
    assert coeffs.harmonic(3) == F(11, 6)
    assert coeffs.harmonic_gen(2, 2) == F(5, 4)


@given(st.integers(min_value=0, max_value=60), st.integers(min_value=1, max_value=4))
def test_harmonic_gen_is_partial_sum(n, s):
    assert coeffs.harmonic_gen(n, s) == sum((F(1, j ** s) for j in range(1, n + 1)), F(0))


def test_stirling_ratio_examples():
    assert all(coeffs.stirling_ratio(n, 1) == F(1, n + 1) for n in range(51))
    assert coeffs.stirling_ratio(0, 2) == F(1, 2)
    assert coeffs.stirling_ratio(1, 3) == F(1, 4)


def test_stirling_ratio_closed_forms():
    h = coeffs.harmonic
    h2 = lambda n: coeffs.harmonic_gen(n, 2)
    for n in range(51):
        assert coeffs.stirling_ratio(n, 2) == h(n + 1) / (n + 2)
        assert coeffs.stirling_ratio(n, 3) == (h(n + 2) ** 2 - h2(n + 2)) / (2 * (n + 3))


@given(st.integers(min_value=0, max_value=30), st.integers(min_value=4, max_value=8))
def test_stirling_ratio_definition(n, k):
    assert coeffs.stirling_ratio(n, k) == F(abs(coeffs.stirling1(n + k, k)), math.factorial(n + k))


# -- Bell polynomials and Bernoulli numbers ---------------------------------

def test_bell_examples():
    x1, x2 = F(3, 7), F(-2, 5)
    assert coeffs.bell_modified(0, []) == 1
    assert coeffs.bell_modified(1, [x1]) == x1
    assert coeffs.bell_modified(2, [x1, x2]) == x1 ** 2 / 2 + x2 / 2


@given(st.integers(min_value=0, max_value=25), st.integers(min_value=1, max_value=6))
def test_bell_reproduces_stirling_ratio(n, k):
    # |S_1(N,k)|/N! = P_(k-1)(x_1..x_(k-1))/N with x_j = (-1)^(j-1) H_(N-1)^(j), N = n+k
    N = n + k
    xs = [(-1) ** (j - 1) * coeffs.harmonic_gen(N - 1, j) for j in range(1, k)]
    assert coeffs.bell_modified(k - 1, xs) / N == coeffs.stirling_ratio(n, k)


def test_bernoulli_examples():
    assert coeffs.bernoulli(0) == 1
    assert coeffs.bernoulli(1) == F(-1, 2)
    assert coeffs.bernoulli(2) == F(1, 6)
    assert coeffs.bernoulli(12) == F(-691, 2730)


def test_bernoulli_against_generating_function():
    assert [coeffs.bernoulli(n) for n in range(31)] == bernoulli_series(30)


# -- tables and cache --------------------------------------------------------

def test_table_rows():
    rows = coeffs.table("gregory", 1, 6)
    assert rows[-1] == (6, F(-863, 60480))
    assert [v for _, v in coeffs.table("cauchy2", 1, 3)] == [F(1, 2), F(5, 12), F(3, 8)]
    assert coeffs.table("stirling1", 3, 4, k=1) == [(3, 2), (4, -6)]
    with pytest.raises(ValueError):
        coeffs.table("nope", 1, 2)
    with pytest.raises(ValueError):
        coeffs.table("gregory", 5, 2)


def test_concurrent_readers_agree():
    results = []

    def work():
        results.append(tuple(coeffs.gregory(n) for n in range(1, 80)))

    threads = [threading.Thread(target=work) for _ in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1
