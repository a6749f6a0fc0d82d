from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from qpolya.arith import CyclotomicNumber

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ORDERS = [1, 2, 3, 4, 5, 6, 8, 12]

fractions = st.builds(
    Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=12),
)


@st.composite
def cyclotomics(draw, order=None):
    s = draw(st.sampled_from(ORDERS)) if order is None else order
    coeffs = draw(st.lists(fractions, min_size=0, max_size=s + 2))
    return CyclotomicNumber(coeffs, s)


# acceptance criteria record (number, title, passed, seconds, limit) here
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, secs, limit in sorted(ACCEPTANCE_RESULTS):
        mark = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{mark}] AC{num:02d} {title}: {secs:.2f} s (limit {limit} s)")
