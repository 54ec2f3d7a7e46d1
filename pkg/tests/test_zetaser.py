import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from zetaseries import oracle, zetaser
from zetaseries.errors import DomainError, EtaZeroDivisor, NonPositiveBase, PoleAtOne, PoleSet, UnsupportedRegion
from zetaseries.mpnum import PrecisionPolicy, real_pow_complex
from zetaseries.zetaser import BoundedSequence, SeriesSpec

from conftest import close, zeta_ref

P30 = PrecisionPolicy(30)
P25 = PrecisionPolicy(25)
PI = oracle.const_ref("pi", 60)
RIEMANN = "1/2+14.134725i"


def value(r):
    assert r.converged
    return r.value


def re(r):
    return value(r).re


# -- Hasse / Ser / Euler / Cauchy ---------------------------------------------

def test_hasse_examples():
    assert close(re(zetaser.hasse_zeta(2, P30)), PI * PI / 6, 1e-30)
    assert close(re(zetaser.hasse_hurwitz(0, 1, P30)), F(-1, 2), 1e-30)
    assert close(re(zetaser.hasse_hurwitz(-1, 1, P30)), F(-1, 12), 1e-30)
    assert close(re(zetaser.hasse_zeta(3, PrecisionPolicy(20))), zeta_ref(3).re, 1e-20)


def test_hasse_near_pole_keeps_regular_part():
    eps = F(1, 10 ** 30)
    r = re(zetaser.hasse_zeta(1 + eps, PrecisionPolicy(60)))
    assert close(r - 10 ** 30, oracle.const_ref("gamma", 60), 1e-29)


@pytest.mark.parametrize("sign", [1, -1])
def test_pole_factorisation(sign):
    eps = F(sign, 10 ** 10)
    r = re(zetaser.hasse_zeta(1 + eps, P25))
    assert close(r * eps, 1, 1e-9)


def test_hasse_on_critical_line_matches_ser():
    a, b = value(zetaser.hasse_zeta(RIEMANN, P25)), value(zetaser.ser_zeta(RIEMANN, P25))
    assert close(a.re, b.re, 1e-25) and close(a.im, b.im, 1e-25)
    ref = zeta_ref(RIEMANN)
    assert close(a.re, ref.re, 1e-24) and close(a.im, ref.im, 1e-24)


def test_ser_examples():
    assert close(re(zetaser.ser_zeta(2, P30)), PI * PI / 6, 1e-30)
    assert close(re(zetaser.ser_zeta(-1, PrecisionPolicy(20))), F(-1, 12), 1e-20)
    s = F(7, 2)
    assert close(re(zetaser.ser_zeta(s, P30)), re(zetaser.hasse_zeta(s, P30)), 1e-25)


def test_ser_gregory_examples():
    assert close(re(zetaser.ser_gregory_zeta(2, P30)), PI * PI / 6, 1e-30)
    # the first two weighted terms at s=2 are 1/2 and (1/12)(1 - 1/4)
    head = re(zetaser.ser_gregory_zeta(2, P30, lift=0, terms=2))
    assert close(head - 1, F(1, 2) + F(1, 16), 1e-30)
    eps = F(1, 10 ** 20)
    r = re(zetaser.ser_gregory_zeta(1 + eps, PrecisionPolicy(40)))
    assert close(r - 10 ** 20, oracle.const_ref("gamma", 40), 1e-19)


def test_euler_eta_examples():
    assert close(re(zetaser.euler_eta_zeta(2, P30)), PI * PI / 6, 1e-30)
    assert close(re(zetaser.euler_eta_zeta(-2, P25)), 0, 1e-20)
    with pytest.raises(EtaZeroDivisor):
        zetaser.euler_eta_zeta(1, P25)
    t = 2 * math.pi / math.log(2)
    with pytest.raises(EtaZeroDivisor):
        zetaser.euler_eta_zeta(f"1+{t!r}i", PrecisionPolicy(10))


def test_cauchy_examples():
    assert close(re(zetaser.cauchy_zeta(2, P30)), PI * PI / 6, 1e-30)
    assert close(re(zetaser.cauchy_zeta(-1, P25)), F(-1, 12), 1e-25)
    s = 2
    head = re(zetaser.cauchy_zeta(s, P30, lift=0, terms=2))
    expected = F(1, s - 1) + 1 - F(1, 2 ** (s + 1)) - F(5, 12) * (F(1, 2 ** s) - F(1, 3 ** s))
    assert close(head, expected, 1e-30)


@pytest.mark.parametrize("fn", [zetaser.hasse_zeta, zetaser.ser_zeta, zetaser.ser_gregory_zeta, zetaser.cauchy_zeta])
def test_pole_at_one(fn):
    with pytest.raises(PoleAtOne):
        fn(1, P25)


# -- Hurwitz families ---------------------------------------------------------

def test_gregory_hurwitz_half():
    assert close(re(zetaser.gregory_hurwitz(2, F(1, 2), P30)), PI * PI / 2, 1e-25)


@pytest.mark.parametrize("s,v", [(2, F(3, 2)), (F(1, 2), 3), ("2+3i", F(5, 4))])
def test_norlund_reductions(s, v):
    a = value(zetaser.norlund_hurwitz(s, v, 1, 0, P25))
    b = value(zetaser.gregory_hurwitz(s, v, P25))
    assert close(a.re, b.re, 1e-24) and close(a.im, b.im, 1e-24)
    a = value(zetaser.norlund_hurwitz(s, v, 1, -1, P25))
    b = value(zetaser.cauchy_hurwitz(s, v, P25))
    assert close(a.re, b.re, 1e-24) and close(a.im, b.im, 1e-24)


def test_hurwitz_domains():
    with pytest.raises(NonPositiveBase):
        zetaser.gregory_hurwitz(2, 0, P25)
    with pytest.raises(DomainError):
        zetaser.cauchy_hurwitz(2, 1, P25)
    with pytest.raises(DomainError):
        zetaser.norlund_hurwitz(2, F(1, 2), 1, F(-1, 2), P25)
    with pytest.raises(DomainError):
        zetaser.norlund_hurwitz(2, 3, 1, F(-3, 2), P25)
    with pytest.raises(DomainError):
        zetaser.harmonic_hurwitz(2, 1, "H1", P25)
    with pytest.raises(NonPositiveBase):
        zetaser.hasse_hurwitz(2, F(-1, 2), P25)


def test_norlund_zeta_reductions():
    assert close(re(zetaser.norlund_zeta(2, 1, 0, 0, P30)), PI * PI / 6, 1e-30)
    assert close(re(zetaser.norlund_zeta(2, 1, -1, 1, P30)), PI * PI / 6, 1e-30)
    assert close(re(zetaser.norlund_zeta(3, 3, 2, 0, P30)), zeta_ref(3).re, 1e-25)
    with pytest.raises(DomainError):
        zetaser.norlund_zeta(2, 1, -1, 0, P25)
    with pytest.raises(DomainError):
        zetaser.norlund_zeta(2, 1, -2, 1, P25)


def test_higher_gregory():
    a = re(zetaser.higher_gregory_zeta(F(5, 2), 1, P30))
    b = re(zetaser.ser_gregory_zeta(F(5, 2), P30))
    assert close(a, b, 1e-28)
    assert close(re(zetaser.higher_gregory_zeta(3, 2, P25)), zeta_ref(3).re, 1e-20)
    assert close(re(zetaser.higher_gregory_zeta(5, 3, P25)), zeta_ref(5).re, 1e-18)
    for s in (1, 2, 3):
        with pytest.raises(PoleSet):
            zetaser.higher_gregory_zeta(s, 3, P25)


def test_stirling_zeta():
    a = re(zetaser.stirling_zeta(2, 1, 1, P30))
    assert close(a, re(zetaser.hasse_hurwitz(2, 1, P30)), 1e-30)
    assert close(re(zetaser.stirling_zeta(3, 1, 2, P25)), zeta_ref(3).re, 1e-20)
    assert close(re(zetaser.stirling_zeta(4, 2, 3, P25)), zeta_ref(4).re - 1, 1e-18)
    with pytest.raises(PoleSet):
        zetaser.stirling_zeta(2, 1, 3, P25)


def test_ser_hurwitz_relation():
    a = value(zetaser.ser_hurwitz_relation(F(5, 2), 1, P25))
    b = value(zetaser.ser_zeta(F(5, 2), P25))
    assert a.re == b.re
    assert close(re(zetaser.ser_hurwitz_relation(3, 2, P25)), zeta_ref(3).re - 1, 1e-20)
    a = re(zetaser.ser_hurwitz_relation(F(1, 2), F(3, 2), P25))
    assert close(a, re(zetaser.gregory_hurwitz(F(1, 2), F(3, 2), P25)), 1e-20)
    with pytest.raises(PoleSet):
        zetaser.ser_hurwitz_relation(2, 3, P25)


def test_harmonic_hurwitz():
    assert close(re(zetaser.harmonic_hurwitz(2, 2, "H1", P25)), PI * PI / 6, 1e-20)
    assert close(re(zetaser.harmonic_hurwitz(3, 2, "H2", P25)), zeta_ref(3).re, 1e-18)
    assert close(re(zetaser.harmonic_hurwitz(4, 3, "H1", P25)), zeta_ref(4).re - 1, 1e-18)


HURWITZ = {
    "hasse": lambda s, v: zetaser.hasse_hurwitz(s, v, P25),
    "gregory": lambda s, v: zetaser.gregory_hurwitz(s, v, P25),
    "cauchy": lambda s, v: zetaser.cauchy_hurwitz(s, v + 1, P25),
    "norlund": lambda s, v: zetaser.norlund_hurwitz(s, v, 2, F(1, 2), P25),
    "stirling": lambda s, v: zetaser.stirling_zeta(s, v, 2, P25),
    "ser-hurwitz": lambda s, v: zetaser.ser_hurwitz_relation(s, v + 1, P25),
    "harmonic": lambda s, v: zetaser.harmonic_hurwitz(s, v + 1, "H1", P25),
}


@pytest.mark.parametrize("family", sorted(HURWITZ))
@pytest.mark.parametrize("s", [F(5, 2), "1/2+2i"])
def test_recurrence_in_v(family, s):
    # zeta(s, w) - zeta(s, w+1) = w^-s; cauchy, ser-hurwitz and harmonic are run one step up
    v = F(7, 4)
    w = v + 1 if family in ("cauchy", "ser-hurwitz") else v
    w = v if family == "harmonic" else w
    a = value(HURWITZ[family](s, v))
    b = value(HURWITZ[family](s, v + 1))
    z = zetaser.exact_s(s)
    p = real_pow_complex(w, z.big(200) * -1)
    assert close(a.re - b.re, p.re, 1e-23) and close(a.im - b.im, p.im, 1e-23)


def test_norlund_terms_shrink_with_a():
    used = [zetaser.norlund_hurwitz(3, 1, 1, a, PrecisionPolicy(6), lift=0, max_n=3000).n_terms for a in range(4)]
    assert used == sorted(used, reverse=True)


@given(st.integers(min_value=0, max_value=50), st.integers(min_value=0, max_value=50))
def test_binomial_reindexing(n, k):
    assert F(math.comb(n, k), k + 1) == F(math.comb(n + 1, k + 1), n + 1)


def test_results_are_deterministic():
    a = zetaser.gregory_hurwitz("1/2+14.134725i", F(3, 2), P25).to_json(25)
    b = zetaser.gregory_hurwitz("1/2+14.134725i", F(3, 2), P25).to_json(25)
    assert a == b and set(a) == {"value", "n_terms", "working_bits", "error_estimate", "converged"}


def test_terms_budget_reports_non_convergence():
    r = zetaser.hasse_zeta(2, P30, lift=0, max_n=20)
    assert not r.converged and r.n_terms == 20


# -- SeriesSpec ---------------------------------------------------------------

@pytest.mark.parametrize("kw", [
    dict(family="GregoryHurwitz", v=0),
    dict(family="CauchyHurwitz", v=1),
    dict(family="NorlundHurwitz", a=F(-3, 2)),
    dict(family="NorlundHurwitz", a=-1, v=1),
    dict(family="HigherGregoryRelation", k=0),
    dict(family="StirlingZeta", k=0),
    dict(family="HarmonicHurwitz", v=1),
    dict(family="Nope"),
    dict(family="HasseZeta", m=0),
])
def test_series_spec_rejects(kw):
    with pytest.raises(DomainError):
        SeriesSpec(**kw)


def test_series_spec_dispatch():
    for fam in zetaser.FAMILIES:
        spec = SeriesSpec(fam, m=2, a=1, k=2, v=F(5, 2))
        target = zeta_ref(F(7, 2), F(3, 2) if fam == "HarmonicHurwitz" else (F(5, 2) if spec.is_hurwitz else 1))
        r = zetaser.evaluate(spec, F(7, 2), PrecisionPolicy(20))
        assert close(re(r), target.re, 1e-19), fam


# -- Dirichlet series with bounded coefficients -------------------------------

@pytest.mark.parametrize("form", ["A", "B"])
def test_dirichlet_constant_sequence(form):
    r = zetaser.dirichlet_series_eval(3, F(3, 2), BoundedSequence.constant(1), 2, 1, form, P25)
    assert close(re(r), re(zetaser.norlund_hurwitz(3, F(3, 2), 2, 1, P25)), 1e-24)


def test_dirichlet_linear_sequence():
    # sum (n+1)(2+n)^-3 = zeta(2, 2) - zeta(3, 2)
    u = BoundedSequence.polynomial([1, 1])
    r = zetaser.dirichlet_series_eval(3, 2, u, 1, 0, "B", P25)
    assert close(re(r), zeta_ref(2, 2).re - zeta_ref(3, 2).re, 1e-18)


def test_dirichlet_alternating_sequence():
    r = zetaser.dirichlet_series_eval(2, 1, BoundedSequence.alternating_sign(), 1, 0, "B", P25)
    assert close(re(r), PI * PI / 12, 1e-15)


def test_dirichlet_general_sequence():
    # u_n = 1/(n+1) has no declared structure; at v = 1 the sum is zeta(s+1).
    # Its inner sums fall back to direct summation, whose algebraic tail is reported as unconverged.
    u = BoundedSequence(lambda n: F(1, n + 1))
    r = zetaser.dirichlet_series_eval(F(5, 2), 1, u, 1, 0, "B", PrecisionPolicy(12), max_n=2000)
    assert close(r.value.re, zeta_ref(F(7, 2)).re, 1e-8)
    assert not r.converged


def test_dirichlet_domains():
    u = BoundedSequence.constant(1)
    with pytest.raises(PoleAtOne):
        zetaser.dirichlet_series_eval(1, 2, u)
    with pytest.raises(DomainError):
        zetaser.dirichlet_series_eval(2, 2, u, 1, F(-3, 2))
    with pytest.raises(DomainError):
        zetaser.dirichlet_series_eval(2, 2, u, form="C")
    with pytest.raises(UnsupportedRegion):
        zetaser.dirichlet_series_eval(F(1, 2), 2, BoundedSequence(lambda n: F(1, n + 1)), 1, 0, "A", P25)
