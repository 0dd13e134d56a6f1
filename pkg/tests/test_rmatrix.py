import itertools
import time

import pytest

from grs import rmatrix as rm
from grs.algebra import AlgebraElement, Bound, Monomial, basis_monomials, generator
from grs.dual import pair
from grs.scalars import LAMBDA, ONE, R, S, Scalar

SMALL = Bound(k=1, l=1, m=1, n=1, t=1, j=0, wordlen=3)


@pytest.fixture(scope="module")
def lm():
    return rm.build_l_matrices()


def test_printed_entries():
    p = rm.printed_r()
    assert p.entry((0, 0), (0, 0)) == R
    assert p.entry((0, 1), (0, 1)) == S.inverse()
    assert rm.build_r().entry((1, 2), (2, 1)) == LAMBDA
    # the literal transcription puts λ on the other side of the diagonal
    assert p.entry((2, 1), (1, 2)) == LAMBDA
    assert p.entry((1, 2), (2, 1)) == Scalar()


def test_display_order_permutation():
    assert rm.DISPLAY_ORDER == [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0), (1, 1), (1, 2), (2, 1), (2, 2)]
    assert sorted(rm.DISPLAY_ORDER) == rm.IDX
    # the (10) row of the display holds λ at the (01) column and s on the diagonal
    p = rm.printed_r()
    assert p.entry((1, 0), (0, 1)) == LAMBDA
    assert p.entry((1, 0), (1, 0)) == S


def test_printed_r_is_lower_triangular_and_invertible():
    p = rm.printed_r()
    order = {x: i for i, x in enumerate(rm.DISPLAY_ORDER)}
    assert all(order[row] >= order[col] for (row, col), _ in p.items())
    inv = p.inverse()
    for x, y in itertools.product(rm.IDX, repeat=2):
        total = sum((p.entry(x, z) * inv.entry(z, y) for z in rm.IDX), Scalar())
        assert total == (ONE if x == y else Scalar())


def test_qybe_examples():
    assert rm.verify_qybe(rm.build_r())
    assert rm.verify_qybe(rm.RMatrix({(x, x): ONE for x in rm.IDX}))
    bent = dict(rm.build_r().items())
    bent[((0, 1), (0, 1))] = S
    assert not rm.verify_qybe(rm.RMatrix(bent))


def test_qybe_runtime():
    start = time.perf_counter()
    assert rm.verify_qybe(rm.build_r())
    assert time.perf_counter() - start < 5


def test_rtt_extraction_matches_relation_table():
    relations, rep = rm.rtt_extract()
    assert rep.summary["fail"] == rep.summary["discrepancy"] == 0
    ids = {c.id for c in rep.checks}
    assert "rtt:table:bf=s^-1fb" in ids
    assert "rtt:table:[a,d]=(r^-1-r)bc" in ids
    assert sum(1 for c in rep.checks if c.id.startswith("rtt:extracted:")) == len(relations)


def test_rtt_from_printed_orientation_disagrees():
    rep = rm.verify_r_construction()
    status = {c.id: c.status for c in rep.checks}
    assert status["r:transposed-rtt"] == "pass"
    assert status["r:printed-orientation-rtt"] == "paper-discrepancy"
    assert status["r:sum-form-equals-R"] == "pass"


def test_l_defining_pairings(lm):
    for sign, (a, b), (c, d) in itertools.product("+-", itertools.product(range(3), repeat=2), rm.T_ENTRIES):
        g = generator(rm.T_ENTRIES[(c, d)])
        assert pair(lm.entry(sign, a, b), g) == lm.targets[(sign, a, b, c, d)]


def test_l_counit_normalisation(lm):
    one = AlgebraElement.scalar(1)
    for sign, a, b in itertools.product("+-", range(3), range(3)):
        assert pair(lm.entry(sign, a, b), one) == (ONE if a == b else Scalar())


def test_l_block_names(lm):
    names = lm.names
    assert str(names["J"]) == "G[s;1;r]"
    assert str(names["N"]) == "G[1;r;1]"
    assert str(names["P"]) == "(r - r^-1) * G[1;r;1]*B"
    assert str(names["Q"]) == "(-r + r^-1) * G[r^-1;1;s^-1]*C"


def test_l_plus_is_lower_triangular(lm):
    assert not lm.entry("+", 2, 1).is_zero() and lm.entry("+", 1, 2).is_zero()
    assert not lm.entry("-", 1, 2).is_zero() and lm.entry("-", 2, 1).is_zero()


def test_rejects_non_monomial_normalisation():
    with pytest.raises(rm.RMatrixError):
        rm.build_l_matrices(R + 1, ONE)


def test_l_definitions_and_rll_pass():
    lmx = rm.build_l_matrices()
    for rep in (rm.verify_l_definitions(lmx, SMALL), rm.verify_rll(SMALL, lmx)):
        assert rep.summary["fail"] == rep.summary["discrepancy"] == 0, rep.to_text()


def test_rll_cross_relation_on_b(lm):
    sides = rm.rll_sides(lm.r_amended, lm.minus, lm.plus)
    for x in (generator("b"), generator("a") * generator("b"), generator("b") * generator("c")):
        for key, phi in sides.items():
            assert pair(phi, x) == 0, key


def test_block_and_dj_verdicts():
    rep = rm.verify_block_and_dj(SMALL)
    status = {c.id: c.status for c in rep.checks}
    assert not rep.failures()
    for ok in ("block:MJ=JM", "block:NJ=JN", "block:JQ=s^-1QJ", "block:JP=sPJ", "block:NM=MN",
               "block:MQ=r^-1QM", "block:QN=r^-1NQ", "block:MP=rPM", "block:PN=rNP",
               "block:QP-PQ=+λ(N^-1M-NM^-1)", "dj:[H,X+]=+2X+", "dj:[H,X-]=-2X-",
               "dj:exactly-one-sign-convention", "dj:[K^-1/2 B,K^-1/2 C]=[A-D]"):
        assert status[ok] == "pass", ok
    for bad in ("block:MQ=rQM", "block:QN=rNQ", "block:PM=rMP", "block:NP=rPN",
                "block:QP-PQ=-λ(N^-1M-NM^-1)", "dj:[X+,X-]=[H]", "dj:[H,X-]=+2X-"):
        assert status[bad] == "paper-discrepancy", bad


def test_bc_bracket_on_a_cross_multiplied():
    from grs.dual import FunctionalElement, grouplike, letter
    B, C = letter("B"), letter("C")
    k = grouplike(R, R.inverse(), S)
    kinv = grouplike(R.inverse(), R, S.inverse())
    bracket = FunctionalElement.word(B, C) - FunctionalElement.word(C, B)
    a = generator("a")
    lhs = LAMBDA * pair(bracket, a)
    rhs = pair(FunctionalElement.word(k), a) - pair(FunctionalElement.word(kinv), a)
    assert lhs == rhs == R - R.inverse()


def test_l_display_is_recorded_as_discrepancy():
    rep = rm.verify_l_display()
    assert rep.summary["pass"] == 0 and rep.summary["fail"] == 0


# -- independent oracle -------------------------------------------------------------

def test_oracle_matrix_representation_agrees(model, lm):
    reps = model.l_reps()
    monos = [Monomial(*m) for m in basis_monomials(Bound(k=1, l=1, m=1, n=1, t=1, j=1))][::7]
    for m in monos:
        x = AlgebraElement.monomial(m)
        words = model.from_element(x)
        for sign in "+-":
            mat = model.l_value(reps, sign, words)
            for a, b in itertools.product(range(3), repeat=2):
                assert model.scalar(pair(lm.entry(sign, a, b), x)) == mat[a][b], (sign, a, b, m)
