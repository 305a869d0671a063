from fractions import Fraction

import pytest
from hypothesis import strategies as st

from betticone import BettiDiagram

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
cells = st.tuples(st.integers(0, 3), st.integers(-1, 3))


@st.composite
def diagrams(draw, values=small_fractions, min_size=0, max_size=5):
    entries = draw(st.dictionaries(cells, values, min_size=min_size, max_size=max_size))
    return BettiDiagram(entries)


@st.composite
def nonzero_integral_diagrams(draw):
    entries = draw(st.dictionaries(cells, st.integers(-4, 4).filter(bool), min_size=1, max_size=4))
    return BettiDiagram(entries)


@st.composite
def vectors(draw, max_codim=4, max_degree=5, twists=(-2, 3)):
    c = draw(st.integers(1, max_codim))
    degs = draw(st.lists(st.integers(1, max_degree), min_size=c, max_size=c))
    return (draw(st.integers(*twists)), *degs)


@pytest.fixture
def half_integer_gamma():
    return BettiDiagram.from_table([[1, Fraction(1, 2)], [1, Fraction(3, 2)]])


@pytest.fixture
def square_gamma():
    return BettiDiagram.from_table([[2, 1], [2, 3]])


@pytest.fixture
def cokernel_gamma():
    return BettiDiagram.from_table([
        [2, "-", "-"],
        ["-", 3, "-"],
        ["-", 1, 1],
        ["-", "-", 1],
    ])


@pytest.fixture
def incomparable_gamma():
    return BettiDiagram.from_table([
        [2, 1, "-", "-"],
        ["-", "-", "-", "-"],
        ["-", 2, "-", "-"],
        ["-", 2, 1, "-"],
        ["-", 1, 2, "-"],
        ["-", "-", 2, "-"],
        ["-", "-", "-", "-"],
        ["-", "-", 1, 2],
    ])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
