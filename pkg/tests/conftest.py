import sys
import time

import hypothesis.strategies as st
from hypothesis import settings

from treegrammar.poly import LaurentPoly, Monomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

VARS = ("x", "y", "z")

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def monomials(draw, laurent=True):
    lo = -2 if laurent else 0
    exps = draw(st.dictionaries(st.sampled_from(VARS), st.integers(lo, 3), max_size=3))
    return Monomial(exps)


@st.composite
def polys(draw, laurent=True, max_terms=4):
    terms = draw(st.dictionaries(monomials(laurent), fractions, max_size=max_terms))
    return LaurentPoly(terms)


_START = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.acceptance_lines(time.perf_counter() - _START):
        terminalreporter.write_line(line)
