from fractions import Fraction

import pytest
from hypothesis import assume, strategies as st

from napoleonkit.geom import Point, point, signed_area
from napoleonkit.qsqrt3 import F3

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


rationals = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 40))
small_rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 50))
f3s = st.builds(F3, rationals, rationals)
nonzero_f3s = f3s.filter(bool)
rational_points = st.builds(lambda x, y: point(x, y), small_rationals, small_rationals)
f3_points = st.builds(Point, f3s, f3s)


@st.composite
def triangles(draw, pts=rational_points):
    tri = draw(st.tuples(pts, pts, pts))
    assume(signed_area(*tri))
    return tri


@pytest.fixture
def tri345():
    return point(0, 0), point(4, 0), point(0, 3)


@pytest.fixture
def equilateral():
    return point(0, 0), point(1, 0), Point(F3(Fraction(1, 2)), F3(0, Fraction(1, 2)))
