"""Hopf-axiom sweeps, rewrite confluence, and the GL_{p,q}(2) relation check."""

from __future__ import annotations

import random

from . import kernels
from .algebra import (
    DEFAULT_BOUND,
    DET,
    GENERATOR_LETTERS,
    AlgebraElement,
    Bound,
    GeneratorWord,
    TensorElement,
    antipode,
    basis_monomials,
    coproduct,
    counit,
    generator,
    glpq_generator,
    glpq_parameters,
    mono_coproduct,
    normal_form,
    pq_exponents,
    printed_antipode_value,
    tensor_contract,
    unit,
    word_product,
)
from .report import Report, counterexample, sample_pairs
from .scalars import ONE, R, S, Scalar, ratio_equal

DET_INV = generator("Det^-1")

LOC_COASSOC = "coassociativity"
LOC_COUNIT = "counit axiom"
LOC_ANTIPODE = "antipode axiom"
LOC_PRINTED_S = "antipode matrix"
LOC_DET = "quantum determinant"
LOC_GLPQ = "GL_pq(2) realization"
LOC_REWRITE = "relation table"


def _elem(mono) -> AlgebraElement:
    return AlgebraElement._raw({tuple(mono): {(0, 0): 1}})


def _delta_right(t: TensorElement) -> TensorElement:
    """(id ⊗ Δ) on a rank-2 tensor."""
    out: dict = {}
    for (x1, x2), p in t.terms.items():
        for (y1, y2), q in mono_coproduct(x2).items():
            legs = (x1, y1, y2)
            cur = out.setdefault(legs, {})
            kernels.poly_iadd(cur, kernels.poly_mul(p._t, q))
            if not cur:
                del out[legs]
    return TensorElement._raw(3, out)


def _counit_leg(t: TensorElement, leg: int) -> AlgebraElement:
    out = AlgebraElement()
    for legs, p in t.terms.items():
        drop = legs[leg]
        if drop[3] == 0 and drop[4] == 0:
            out = out + _elem(legs[1 - leg]).scale(p)
    return out


def verify_hopf_axioms(bound: Bound = DEFAULT_BOUND) -> Report:
    """Coassociativity, counit and antipode axioms on every basis monomial."""
    rep = Report("hopf", bound)
    basis = list(basis_monomials(bound))
    fails = {name: None for name in ("coassoc", "counit-left", "counit-right", "antipode-left", "antipode-right")}
    samples = {name: [] for name in fails}

    def record(name, mono, lhs, rhs):
        if len(samples[name]) < 8 and (lhs or rhs):
            samples[name].extend(sample_pairs(lhs, rhs, 2))
        if fails[name] is None and lhs != rhs:
            fails[name] = counterexample(mono, lhs, rhs)

    for mono in basis:
        x = _elem(mono)
        d2 = coproduct(x, 2)
        lhs3, rhs3 = coproduct(x, 3), _delta_right(d2)
        record("coassoc", mono, lhs3, rhs3)
        record("counit-left", mono, _counit_leg(d2, 0), x)
        record("counit-right", mono, _counit_leg(d2, 1), x)
        eps = unit().scale(counit(x))
        record("antipode-left", mono, tensor_contract(d2, left=antipode), eps)
        record("antipode-right", mono, tensor_contract(d2, right=antipode), eps)

    detail = f"{len(basis)} basis monomials"
    rep.add("hopf:coassociativity", LOC_COASSOC, fails["coassoc"] is None, fails["coassoc"], detail=detail,
            samples=samples["coassoc"])
    for side in ("left", "right"):
        rep.add(f"hopf:counit-{side}", LOC_COUNIT, fails[f"counit-{side}"] is None, fails[f"counit-{side}"],
                detail=detail, samples=samples[f"counit-{side}"])
        rep.add(f"hopf:antipode-{side}", LOC_ANTIPODE, fails[f"antipode-{side}"] is None,
                fails[f"antipode-{side}"], detail=detail, samples=samples[f"antipode-{side}"])

    _printed_antipode_checks(rep)
    _determinant_checks(rep, basis)
    return rep


def _printed_antipode_checks(rep: Report) -> None:
    """The printed antipode entries against the axiom.

    The (1,2) entry is misprinted, which breaks the a and b instances; the
    (3,3) entry gives S(f) = f.
    """
    for g in ("a", "b", "c", "d", "f"):
        x = generator(g)
        d2 = coproduct(x, 2)
        lhs = AlgebraElement()
        for (x1, x2), p in d2.terms.items():
            lhs = lhs + _printed_s(x1) * _elem(x2).scale(p)
        rhs = unit().scale(counit(x))
        rep.add(f"hopf:printed-antipode-{g}", LOC_PRINTED_S, lhs == rhs, counterexample(g, lhs, rhs),
                discrepancy=g in ("a", "b", "f"), samples=sample_pairs(lhs, rhs))


def _printed_s(mono) -> AlgebraElement:
    """Anti-multiplicative extension of the printed generator values."""
    k, l, t, m, n, j = mono
    out = AlgebraElement._raw({(0, 0, 0, 0, 0, -j): {(0, 0): 1}})
    for g, e in (("c", n), ("b", m)):
        for _ in range(e):
            out = out * printed_antipode_value(g)
    if t:
        if t < 0:
            raise ValueError("printed antipode has no f^-1 entry")
        out = out * printed_antipode_value("f") ** t
    for g, e in (("d", l), ("a", k)):
        for _ in range(e):
            out = out * printed_antipode_value(g)
    return out


def _determinant_checks(rep: Report, basis) -> None:
    lhs, rhs = coproduct(DET), TensorElement.from_elements(DET, DET)
    rep.add("hopf:det-grouplike", LOC_DET, lhs == rhs, counterexample("Det", lhs, rhs), samples=sample_pairs(lhs, rhs))
    ed = counit(DET)
    rep.add("hopf:det-counit", LOC_DET, ed == ONE, counterexample("Det", ed, 1), samples=[(ed, ONE)])
    sd, di = antipode(DET), DET_INV
    rep.add("hopf:det-antipode", LOC_DET, sd == di, counterexample("Det", sd, di), samples=sample_pairs(sd, di))
    bad = None
    samples = []
    for mono in basis:
        x = _elem(mono)
        lhs, rhs = DET * x, x * DET
        if lhs != rhs:
            bad = counterexample(mono, lhs, rhs)
            break
        if len(samples) < 6:
            samples.extend(sample_pairs(lhs, rhs, 1))
    rep.add("hopf:det-central", LOC_DET, bad is None, bad, samples=samples)
    direct = word_product(GeneratorWord(("a", "d"))) - word_product(GeneratorWord(("b", "c"))).scale(R.inverse())
    rep.add("hopf:det-definition", LOC_DET, direct == DET, counterexample("ad - r^-1 bc", direct, DET),
            samples=sample_pairs(direct, DET))


# -- confluence ----------------------------------------------------------------

def random_word(rng: random.Random, max_len: int = 8) -> GeneratorWord:
    n = rng.randint(0, max_len)
    return GeneratorWord(tuple(rng.choice(GENERATOR_LETTERS) for _ in range(n)))


def confluence_check(count: int = 10_000, seed: int = 0, max_len: int = 8) -> Report:
    """Leftmost vs rightmost rewriting, and both against the monomial product tables."""
    rep = Report("confluence", None)
    rng = random.Random(seed)
    bad_strat = bad_table = None
    s_strat, s_table = [], []
    for _ in range(count):
        w = random_word(rng, max_len)
        left = normal_form(w, "leftmost")
        right = normal_form(w, "rightmost")
        table = word_product(w)
        if bad_strat is None and left != right:
            bad_strat = counterexample(w, left, right)
        if bad_table is None and left != table:
            bad_table = counterexample(w, left, table)
        if len(s_strat) < 8:
            s_strat.extend(sample_pairs(left, right, 1))
            s_table.extend(sample_pairs(left, table, 1))
    detail = f"{count} random words of length <= {max_len}"
    rep.add("rewrite:strategy-independence", LOC_REWRITE, bad_strat is None, bad_strat, detail=detail,
            samples=s_strat)
    rep.add("rewrite:matches-product-tables", LOC_REWRITE, bad_table is None, bad_table, detail=detail,
            samples=s_table)
    return rep


# -- GL_{p,q}(2) ----------------------------------------------------------------

GLPQ_PAIRS = (("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("b", "c"), ("a", "d"))


def _proportionality(x: AlgebraElement, y: AlgebraElement) -> Scalar | None:
    """kappa with x == kappa * y when y is a single term, else None."""
    if len(y) != 1 or len(x) != 1:
        return None
    (mx, cx), = x.terms.items()
    (my, cy), = y.terms.items()
    if mx != my or not cy.is_monomial():
        return None
    return cx * cy.inverse()


def glpq_relation_check(N: int) -> Report:
    """Primed-generator relations expressed through (p_N, q_N), plus the parameter maps."""
    if N == 0:
        raise ValueError("N must be nonzero")
    rep = Report(f"glpq:N={N}", None)
    p, q = glpq_parameters(N)
    # N + 1 may be zero, where the realization is undefined but the formula is not
    p1, q1 = R.inverse() * S ** (N + 1), R.inverse() * S ** (-N - 1)
    pr = {x: glpq_generator(N, x + "'") for x in "abcd"}
    for x, y in GLPQ_PAIRS:
        xy, yx = pr[x] * pr[y], pr[y] * pr[x]
        ident = f"glpq:N={N}:{x}'{y}'"
        if (x, y) == ("a", "d"):
            # the commutator lands on b'c' with coefficient p - q^-1
            comm, bc = xy - yx, pr["b"] * pr["c"]
            kappa = _proportionality(comm, bc)
            target = p - q.inverse()
            rep.add(ident, LOC_GLPQ, kappa == target, counterexample("[a',d'] vs b'c'", comm, bc),
                    detail=f"kappa = {kappa}", samples=[(kappa or Scalar(), target)])
            continue
        kappa = _proportionality(xy, yx)
        exps = pq_exponents(kappa, N) if kappa is not None else None
        rep.add(ident, LOC_GLPQ, exps is not None, counterexample(f"{x}'{y}' vs {y}'{x}'", xy, yx),
                detail=f"kappa = {kappa} = p^{exps[0]} q^{exps[1]}" if exps else f"kappa = {kappa}",
                samples=[(kappa, p ** exps[0] * q ** exps[1])] if exps else [])
    rep.add(f"glpq:N={N}:pq", LOC_GLPQ, p * q == R ** -2, counterexample("p q", p * q, R ** -2),
            samples=[(p * q, R ** -2)])
    rep.add(f"glpq:N={N}:p-ratio", LOC_GLPQ, ratio_equal(p1, p, S, ONE), counterexample("p_{N+1}/p_N", p1, p * S),
            samples=[(p1, p * S)])
    rep.add(f"glpq:N={N}:q-ratio", LOC_GLPQ, ratio_equal(q1, q, S.inverse(), ONE),
            counterexample("q_{N+1}/q_N", q1, q * S.inverse()), samples=[(q1, q * S.inverse())])
    return rep

