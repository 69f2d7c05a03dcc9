from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from alcovekit import rational as rq
from alcovekit.alcove import build_alcove
from alcovekit.lie_data import build_root_system

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


fractions = st.fractions(min_value=-3, max_value=3, max_denominator=12)


@st.composite
def root_space_points(draw, type_name):
    """Random rational point of the root subspace (combination of simple roots)."""
    rs = build_root_system(type_name)
    coeffs = [draw(fractions) for _ in rs.simple_roots]
    return rq.combination(coeffs, rs.simple_roots)


@st.composite
def alcove_points(draw, type_name):
    """Random rational point of the closed alcove via barycentric weights."""
    alc = build_alcove(type_name)
    w = [draw(st.integers(0, 6)) for _ in alc.vertices]
    if not any(w):
        w[draw(st.integers(0, len(w) - 1))] = 1
    total = sum(w)
    t = [Fraction(x, total) for x in w]
    return rq.combination(t, alc.vertices)


@pytest.fixture
def e6():
    return build_root_system("E6")


@pytest.fixture
def e7():
    return build_root_system("E7")
