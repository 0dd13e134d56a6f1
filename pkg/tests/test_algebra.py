import random
import time

import pytest
from conftest import elements, gen_words, monomials
from hypothesis import given
from hypothesis import strategies as st

from grs import hopf
from grs.algebra import (
    DET,
    AlgebraElement,
    AlgebraError,
    Bound,
    GeneratorWord,
    Monomial,
    TensorElement,
    antipode,
    coproduct,
    counit,
    generator,
    glpq_generator,
    glpq_parameters,
    multiply,
    normal_form,
    printed_antipode_value,
    tensor_contract,
    unit,
    word_product,
)
from grs.scalars import ONE, R, S, Scalar

a, b, c, d, f = (generator(x) for x in "abcdf")
F_INV, DET_INV = generator("f^-1"), generator("Det^-1")


def word(*letters, coeff=1):
    return normal_form(GeneratorWord(letters, Scalar.coerce(coeff)))


def mono(**kw):
    return AlgebraElement.monomial(Monomial(**kw))


# -- frozen values; see test_oracle_agreement below -------------------------------

DA = mono(j=1) + mono(m=1, n=1).scale(R)
DELTA_DET = TensorElement.from_elements(DET, DET)


def test_ba_reorders_with_r():
    assert word("b", "a") == mono(k=1, m=1).scale(R)


def test_da_gives_det_plus_bc():
    assert word("d", "a") == DA
    assert {tuple(m): str(v) for m, v in DA.terms.items()} == {(0, 0, 0, 0, 0, 1): "1", (0, 0, 0, 1, 1, 0): "r"}


def test_det_definition():
    x = normal_form([GeneratorWord(("a", "d")), GeneratorWord(("b", "c"), -R.inverse())])
    assert x == DET


def test_multiply_examples():
    assert multiply(a, d) == DET + (b * c).scale(R.inverse())
    assert multiply(a, unit()) == a
    assert multiply(b, c) == multiply(c, b)


@pytest.mark.parametrize("lhs,rhs", [
    (("a", "b"), ("b", "a", R.inverse())),
    (("a", "c"), ("c", "a", R.inverse())),
    (("d", "b"), ("b", "d", R)),
    (("d", "c"), ("c", "d", R)),
    (("a", "f"), ("f", "a", ONE)),
    (("c", "f"), ("f", "c", S)),
    (("b", "f"), ("f", "b", S.inverse())),
    (("d", "f"), ("f", "d", ONE)),
])
def test_relation_table(lhs, rhs):
    assert word(*lhs) == word(rhs[0], rhs[1], coeff=rhs[2])


def test_ad_commutator():
    assert word("a", "d") - word("d", "a") == (b * c).scale(R.inverse() - R)


def test_inverse_letters_cancel():
    assert f * F_INV == unit() == F_INV * f
    assert DET * DET_INV == unit()


def test_coproduct_examples():
    assert coproduct(b) == TensorElement.from_elements(a, b) + TensorElement.from_elements(b, d)
    assert coproduct(unit()) == TensorElement.from_elements(unit(), unit())
    assert coproduct(DET) == DELTA_DET
    assert coproduct(F_INV) == TensorElement.from_elements(F_INV, F_INV)
    assert coproduct(DET_INV) == TensorElement.from_elements(DET_INV, DET_INV)


def test_det_grouplike_by_brute_force():
    brute = coproduct(a) * coproduct(d) - (coproduct(b) * coproduct(c)) * R.inverse()
    assert brute == DELTA_DET


def test_rank_three_coproduct_is_coassociative_on_generators():
    for x in (a, b, c, d, f):
        assert coproduct(x, 3) == hopf._delta_right(coproduct(x))


def test_counit_examples():
    assert counit(a * a * b) == 0
    assert counit(a * a * F_INV ** 3) == 1
    assert counit(DET_INV) == 1


def test_antipode_examples():
    assert antipode(a) == d * DET_INV
    assert antipode(unit()) == unit()
    assert antipode(b) == (b * DET_INV).scale(-R)
    assert antipode(c) == (c * DET_INV).scale(-R.inverse())
    assert antipode(f) == F_INV
    assert antipode(DET) == DET_INV


def test_antipode_axiom_on_b_first_row():
    assert antipode(a) * b + antipode(b) * d == AlgebraElement()


def test_antipode_axiom_on_f_needs_inverse():
    assert antipode(f) * f == unit()
    assert printed_antipode_value("f") * f != unit()


def test_printed_antipode_entries():
    # the printed S matrix puts -rc in the (1,2) slot and D f in the (3,3) slot
    assert printed_antipode_value("b") == (c * DET_INV).scale(-R)
    assert printed_antipode_value("f") == f
    assert printed_antipode_value("a") == antipode(a)


def test_monomial_text_form():
    assert str(mono(k=2, t=-1, m=1, j=-1)) == "a^2*f^-1*b*Det^-1"
    assert str(DA) == "Det + r * b*c"
    assert str(AlgebraElement()) == "0"
    assert str(unit()) == "1"


def test_monomial_rejects_a_with_d():
    with pytest.raises(AlgebraError):
        Monomial.checked(k=1, l=1)


def test_unknown_letter_rejected():
    with pytest.raises(AlgebraError):
        GeneratorWord(("x",))


# -- GL_pq ------------------------------------------------------------------------

def test_glpq_generators():
    assert glpq_generator(1, "a'") == mono(k=1, t=1)
    assert glpq_generator(1, "b'") == mono(t=1, m=1)
    assert glpq_generator(1, "b'") == f * b
    assert glpq_parameters(2)[0] == R.inverse() * S**2


def test_glpq_rejects_zero():
    with pytest.raises(AlgebraError):
        glpq_generator(0, "a'")
    with pytest.raises(ValueError):
        hopf.glpq_relation_check(0)


def test_glpq_ab_ratio():
    p, _q = glpq_parameters(1)
    ap, bp = glpq_generator(1, "a'"), glpq_generator(1, "b'")
    kappa = hopf._proportionality(ap * bp, bp * ap)
    assert kappa == p


@pytest.mark.parametrize("N", [1, 2, 3, -1])
def test_glpq_relation_report(N):
    rep = hopf.glpq_relation_check(N)
    assert rep.summary["fail"] == 0, rep.to_text()
    p, q = glpq_parameters(N)
    assert p * q == R**-2


# -- suites -----------------------------------------------------------------------

def test_hopf_suite_passes_with_expected_discrepancies():
    rep = hopf.verify_hopf_axioms(Bound(k=1, l=1, m=1, n=1, t=1, j=1))
    assert not rep.failures()
    assert {c.id for c in rep.discrepancies()} == {
        "hopf:printed-antipode-a", "hopf:printed-antipode-b", "hopf:printed-antipode-f"}


def test_hopf_suite_reports_each_axiom():
    ids = {c.id for c in hopf.verify_hopf_axioms(Bound(k=1, l=1, m=1, n=1, t=1, j=0)).checks}
    for name in ("coassociativity", "counit-left", "counit-right", "antipode-left", "antipode-right",
                 "det-grouplike", "det-central"):
        assert f"hopf:{name}" in ids


def test_confluence_small_run():
    rep = hopf.confluence_check(count=300, seed=3)
    assert rep.summary == {"pass": 2, "fail": 0, "discrepancy": 0}


# -- properties -------------------------------------------------------------------

@given(gen_words, gen_words)
def test_normal_form_respects_concatenation(u, v):
    assert normal_form(GeneratorWord(tuple(u + v))) == multiply(word(*u), word(*v))


@given(gen_words)
def test_rewrite_strategies_agree(w):
    g = GeneratorWord(tuple(w))
    assert normal_form(g, "leftmost") == normal_form(g, "rightmost") == word_product(g)


@given(elements(), elements(), elements())
def test_multiplication_associative_and_unital(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * unit() == x == unit() * x


@given(elements(max_terms=2))
def test_det_is_central(x):
    assert DET * x == x * DET


@given(elements(max_terms=2, top=1), elements(max_terms=2, top=1))
def test_coproduct_is_multiplicative(x, y):
    assert coproduct(x * y) == coproduct(x) * coproduct(y)


@given(elements(max_terms=2, top=1), elements(max_terms=2, top=1))
def test_antipode_is_antimultiplicative(x, y):
    assert antipode(x * y) == antipode(y) * antipode(x)


@given(monomials())
def test_hopf_axioms_on_random_monomials(m):
    x = AlgebraElement.monomial(m)
    d2 = coproduct(x)
    eps = unit().scale(counit(x))
    assert tensor_contract(d2, left=antipode) == eps == tensor_contract(d2, right=antipode)
    assert coproduct(x, 3) == hopf._delta_right(d2)


@given(elements(max_terms=2), st.sampled_from([(4, 9), (9, 4)]))
def test_substitution_agrees_on_products(x, spot):
    y = a * x * DET
    lhs = {m: v.substitute(*spot) for m, v in (y * b).terms.items()}
    rhs = {m: v.substitute(*spot) for m, v in (a * (x * DET * b)).terms.items()}
    assert lhs == rhs


# -- independent oracle ------------------------------------------------------------

def test_oracle_agreement_on_frozen_values(model):
    assert model.word("da") == model.from_element(DA)
    lhs = model.coproduct(model.lin((1, "ad"), (-1 / model.r, "bc")))
    assert lhs == {("D", "D"): 1}
    s_a, s_b = model.antipode({"a": 1}), model.antipode({"b": 1})
    assert not {k: v for k, v in _sum(model.mul(s_a, model.word("b")), model.mul(s_b, model.word("d"))).items() if v}


def _sum(x, y):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + v
    return out


def test_oracle_agrees_with_engine_on_random_words(model):
    rng = random.Random(11)
    letters = ["a", "b", "c", "d", "f"]
    for _ in range(60):
        w = [rng.choice(letters) for _ in range(rng.randint(0, 5))]
        assert model.word("".join(w)) == model.from_element(word(*w))


def test_oracle_agrees_on_coproduct_and_antipode(model):
    for x in (a * d, b * c * f, DET * c, a * a * b):
        ox = model.from_element(x)
        engine = {}
        for (x1, x2), v in coproduct(x).terms.items():
            for k1, p in model.from_element(AlgebraElement.monomial(x1)).items():
                for k2, q in model.from_element(AlgebraElement.monomial(x2)).items():
                    engine[(k1, k2)] = engine.get((k1, k2), 0) + p * q * model.scalar(v)
        assert {k: v for k, v in engine.items() if v} == model.coproduct(ox)
        assert model.from_element(antipode(x)) == model.antipode(ox)


def test_hopf_suite_runtime_at_default_bound():
    start = time.perf_counter()
    rep = hopf.verify_hopf_axioms()
    assert time.perf_counter() - start < 30
    assert not rep.failures()
