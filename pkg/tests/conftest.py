from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from zetaseries import kernels, oracle, weights
from zetaseries.mpnum import BigComplex
from zetaseries.zetaser import exact_s

settings.register_profile("repo", max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@pytest.fixture(params=kernels.available_backends())
def backend(request, monkeypatch):
    """Run a test once per kernel backend, with the weight tables rebuilt."""
    monkeypatch.setattr(kernels, "_impl", kernels.backend(request.param))
    monkeypatch.setattr(weights, "_tables", {})
    return request.param


def zeta_ref(s, v=1, digits=40) -> BigComplex:
    cfg = oracle.OracleConfig(digits)
    return oracle.hurwitz_ref(exact_s(s).big(cfg.bits), Fraction(v), cfg)


def close(x, y, tol) -> bool:
    return float(abs(x - y)) < tol


# one line per acceptance criterion, collected by tests/test_acceptance.py
CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[n])
