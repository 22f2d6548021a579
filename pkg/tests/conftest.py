import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))


@st.composite
def knot_fractions(draw, max_alpha=199):
    """beta/alpha with odd alpha in [3, max_alpha] and gcd(beta, alpha) = 1."""
    from fractions import Fraction
    from math import gcd

    alpha = draw(st.integers(1, (max_alpha - 1) // 2)) * 2 + 1
    beta = draw(st.integers(1, alpha - 1).filter(lambda b: gcd(b, alpha) == 1))
    return Fraction(beta, alpha)


def pytest_terminal_summary(terminalreporter):
    lines = sys.modules.get("test_acceptance")
    lines = getattr(lines, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
