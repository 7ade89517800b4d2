from fractions import Fraction

from hypothesis import strategies as st

from di9.formula import Atom, Not, Or
from di9.world import ALWAYS, AtomTimeline, Valuation

NAMES = ["p", "q", "r", "s"]

rationals = st.builds(
    Fraction, st.integers(min_value=-40, max_value=40), st.integers(min_value=1, max_value=4)
)
time_points = st.one_of(st.just(ALWAYS), rationals)

formulas = st.recursive(
    st.sampled_from(NAMES).map(Atom),
    lambda sub: st.one_of(sub.map(Not), st.builds(Or, sub, sub)),
    max_leaves=12,
)

timelines = st.builds(AtomTimeline, time_points, st.booleans())


@st.composite
def worlds(draw, names=NAMES):
    return Valuation({n: draw(timelines) for n in names})


@st.composite
def assignments(draw, names=NAMES):
    return {n: draw(st.booleans()) for n in names}


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
