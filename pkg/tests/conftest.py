import pytest
from hypothesis import settings, strategies as st

from starres.monomial import Monomial, minimal_generators

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def monomials(n, exp_max=3, allow_one=True):
    m = st.tuples(*[st.integers(0, exp_max)] * n).map(Monomial)
    return m if allow_one else m.filter(lambda u: not u.is_one())


@st.composite
def ideals(draw, n=None, n_max=3, exp_max=3, gens_max=4):
    if n is None:
        n = draw(st.integers(1, n_max))
    gens = draw(st.lists(monomials(n, exp_max, allow_one=False), min_size=1, max_size=gens_max))
    return minimal_generators(gens, n)


@st.composite
def ideal_pairs(draw, n_max=3, exp_max=3, gens_max=3):
    n = draw(st.integers(1, n_max))
    return draw(ideals(n, exp_max=exp_max, gens_max=gens_max)), draw(ideals(n, exp_max=exp_max, gens_max=gens_max))


@pytest.fixture
def acceptance_lines():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
