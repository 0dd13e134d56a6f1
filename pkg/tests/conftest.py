import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from oracle import Model

from grs import AlgebraElement, Scalar
from grs.algebra import Monomial
from grs.dual import FunctionalElement, grouplike, letter

settings.register_profile("repo", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

# admissible numeric points: both values are squares of rationals
SPOTS = [(Fraction(4), Fraction(9)), (Fraction(9, 4), Fraction(25, 16))]


@pytest.fixture(scope="session", params=SPOTS, ids=lambda p: f"r={p[0]},s={p[1]}")
def model(request):
    return Model(*request.param)


@pytest.fixture(scope="session")
def model49():
    return Model(4, 9)


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
half = st.integers(min_value=-6, max_value=6)


@st.composite
def scalars(draw, max_terms=4):
    n = draw(st.integers(0, max_terms))
    return Scalar({(draw(half), draw(half)): draw(coeffs) for _ in range(n)})


@st.composite
def monomials(draw, top=2):
    k = draw(st.integers(0, top))
    l = 0 if k else draw(st.integers(0, top))
    return Monomial(k, l, draw(st.integers(-top, top)), draw(st.integers(0, top)), draw(st.integers(0, top)),
                    draw(st.integers(-1, 1)))


@st.composite
def elements(draw, max_terms=3, top=2):
    n = draw(st.integers(0, max_terms))
    x = AlgebraElement()
    for _ in range(n):
        x = x + AlgebraElement.monomial(draw(monomials(top)), draw(scalars(2)))
    return x


dual_letters = st.one_of(
    st.sampled_from([letter(k) for k in ("A", "B", "C", "Dt", "F")]),
    st.builds(lambda u, v, w: grouplike(Scalar.monomial(1, u, 0), Scalar.monomial(1, 0, v), Scalar.monomial(1, w, w)),
              st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)),
)


@st.composite
def functionals(draw, max_terms=3, max_len=3):
    n = draw(st.integers(0, max_terms))
    phi = FunctionalElement()
    for _ in range(n):
        word = draw(st.lists(dual_letters, max_size=max_len))
        phi = phi + FunctionalElement({tuple(word): draw(scalars(2))})
    return phi


gen_words = st.lists(st.sampled_from(["a", "b", "c", "d", "f", "f^-1", "Det", "Det^-1"]), max_size=6)


# acceptance verdicts, filled by test_acceptance and echoed after the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}")
