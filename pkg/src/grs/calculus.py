"""First-order bicovariant calculus built from the L-functionals.

One-forms are indexed by the five surviving matrix positions::

    w0 = (0,0)   w1 = (1,1)   w+ = (1,2)   w- = (2,1)   w2 = (2,2)

With ``f_{ij,kl} = S(l+_ki) l-_jl`` the bimodule relations read
``w_ij x = (f_{ij,kl} * x) w_kl``, where ``phi * x = (1 ⊗ phi) Δ(x)``.
The vector fields are ``χ_ij = Σ_k S(l+_ik) l-_kj - δ_ij ε`` and
``d x = τ x - x τ = Σ (χ_kl * x) w_kl`` with ``τ = w0 + w1 + w2``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cache, cached_property, lru_cache

from . import kernels
from .algebra import (
    AlgebraElement,
    Bound,
    GeneratorWord,
    TensorElement,
    antipode,
    coproduct,
    generator,
    glpq_generator,
    glpq_parameters,
    multiply,
    normal_form,
    pq_exponents,
    unit,
)
from .dual import ONE_U, FunctionalElement, pair_monomial
from .report import Report, counterexample, sample_pairs
from .rmatrix import T_ENTRIES, LMatrices, build_l_matrices
from .scalars import LAMBDA, ONE, R, S, Scalar

__all__ = [
    "FORM_INDICES",
    "POSITION",
    "Calculus",
    "CalculusError",
    "GammaElement",
    "chi_functionals",
    "convolve",
    "default_calculus",
    "exterior_d",
    "glpq_calculus",
    "omega_commute",
    "table_scan",
    "verify_calculus_tables",
    "verify_leibniz_bicovariance",
]

FORM_INDICES = ("0", "1", "+", "-", "2")
POSITION = {"0": (0, 0), "1": (1, 1), "+": (1, 2), "-": (2, 1), "2": (2, 2)}
_INDEX_OF = {v: k for k, v in POSITION.items()}
_ORDER = {k: i for i, k in enumerate(FORM_INDICES)}

LOC_TABLES = "calculus tables"
LOC_LEIBNIZ = "Leibniz rule"
LOC_COV = "bicovariance of d"
LOC_GLPQ = "GL(p,q) calculus realization"


class CalculusError(ArithmeticError):
    pass


class GammaElement:
    """Left-module element Σ c_i w_i with algebra coefficients on the left."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for i, x in (coeffs or {}).items():
            if i not in POSITION:
                raise ValueError(f"unknown one-form index {i!r}")
            x = x if isinstance(x, AlgebraElement) else AlgebraElement.scalar(x)
            if not x.is_zero():
                c[i] = x
        self._c = c

    @classmethod
    def form(cls, i: str, coeff=None) -> GammaElement:
        return cls({i: unit() if coeff is None else coeff})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def coefficient(self, i: str) -> AlgebraElement:
        return self._c.get(i, AlgebraElement())

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other: GammaElement) -> GammaElement:
        out = dict(self._c)
        for i, x in other._c.items():
            out[i] = out[i] + x if i in out else x
        return GammaElement(out)

    def __neg__(self):
        return GammaElement({i: -x for i, x in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, x):
        """Left multiplication by an algebra element or scalar."""
        if isinstance(x, AlgebraElement):
            return GammaElement({i: multiply(x, c) for i, c in self._c.items()})
        return GammaElement({i: c.scale(x) for i, c in self._c.items()})

    def __eq__(self, other):
        return isinstance(other, GammaElement) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self):
        if not self._c:
            return "0"
        parts = [f"({self._c[i]}) w{i}" for i in sorted(self._c, key=_ORDER.get)]
        return " + ".join(parts)

    __repr__ = __str__


def _mono(m) -> AlgebraElement:
    return AlgebraElement._raw({tuple(m): {(0, 0): 1}})


def convolve(phi, x: AlgebraElement) -> AlgebraElement:
    """phi * x = Σ x(1) <phi, x(2)>."""
    out = AlgebraElement()
    for (x1, x2), p in coproduct(x)._t.items():
        v = pair_monomial(phi, x2)
        if v:
            out = out + _mono(x1).scale(Scalar._raw(dict(p)) * v)
    return out


@dataclass(eq=False)
class Calculus:
    """The calculus attached to one choice of L-matrices."""

    lm: LMatrices

    @cached_property
    def f(self) -> dict:
        """f_{ij,kl} = S(l+_ki) l-_jl on the surviving indices."""
        out = {}
        for i, k in itertools.product(FORM_INDICES, repeat=2):
            (a, b), (c, d) = POSITION[i], POSITION[k]
            phi = self.lm.entry("+", c, a).antipode() * self.lm.entry("-", b, d)
            if not phi.is_zero():
                out[(i, k)] = phi
        return out

    @cached_property
    def chi(self) -> dict:
        """χ_ij = Σ_k S(l+_ik) l-_kj - δ_ij ε for the five surviving indices."""
        out = {}
        for i in FORM_INDICES:
            a, b = POSITION[i]
            phi = FunctionalElement()
            for k in range(3):
                phi = phi + self.lm.entry("+", a, k).antipode() * self.lm.entry("-", k, b)
            if a == b:
                phi = phi - ONE_U
            out[i] = phi
        return out

    def vanishing_components(self) -> dict:
        """χ at the four excluded positions; all must be zero."""
        out = {}
        for a, b in [(0, 1), (0, 2), (1, 0), (2, 0)]:
            phi = FunctionalElement()
            for k in range(3):
                phi = phi + self.lm.entry("+", a, k).antipode() * self.lm.entry("-", k, b)
            out[(a, b)] = phi
        return out

    def omega_commute(self, i: str, x: AlgebraElement) -> GammaElement:
        """w_i x written as Σ c_k w_k."""
        if i not in POSITION:
            raise ValueError(f"unknown one-form index {i!r}")
        return _omega_cached(self, i, x)

    def right_multiply(self, g: GammaElement, x: AlgebraElement) -> GammaElement:
        out = GammaElement()
        for i, c in g.coeffs.items():
            out = out + c * self.omega_commute(i, x)
        return out

    @cached_property
    def tau(self) -> GammaElement:
        return GammaElement({"0": unit(), "1": unit(), "2": unit()})

    def d_tau(self, x: AlgebraElement) -> GammaElement:
        return self.right_multiply(self.tau, x) - x * self.tau

    def d_chi(self, x: AlgebraElement) -> GammaElement:
        return GammaElement({i: convolve(phi, x) for i, phi in self.chi.items()})

    def exterior_d(self, x: AlgebraElement) -> GammaElement:
        one, two = self.d_tau(x), self.d_chi(x)
        if one != two:
            raise CalculusError(f"d({x}): τ-commutator {one} differs from χ-sum {two}")
        return two


@lru_cache(maxsize=4096)
def _omega_cached(calc: Calculus, i: str, x: AlgebraElement) -> GammaElement:
    out = {}
    cop = coproduct(x)._t
    for (i2, k), phi in calc.f.items():
        if i2 != i:
            continue
        acc = AlgebraElement()
        for (x1, x2), p in cop.items():
            v = pair_monomial(phi, x2)
            if v:
                acc = acc + _mono(x1).scale(Scalar._raw(dict(p)) * v)
        out[k] = acc
    return GammaElement(out)



@cache
def default_calculus() -> Calculus:
    return Calculus(build_l_matrices())


def chi_functionals() -> dict:
    return dict(default_calculus().chi)


def omega_commute(i: str, x: AlgebraElement) -> GammaElement:
    return default_calculus().omega_commute(i, x)


def exterior_d(x: AlgebraElement) -> GammaElement:
    return default_calculus().exterior_d(x)


# -- the printed tables ------------------------------------------------------

def _g(*terms) -> GammaElement:
    """Build a GammaElement from (scalar, generator, index) triples."""
    out = GammaElement()
    for c, sym, i in terms:
        out = out + GammaElement.form(i, generator(sym).scale(c))
    return out


def _e(*terms) -> AlgebraElement:
    out = AlgebraElement()
    for c, sym in terms:
        out = out + generator(sym).scale(c)
    return out


_RI = R.inverse()
_L2 = LAMBDA * LAMBDA

OMEGA_TABLE = {
    ("0", "a"): _g((R**2 * S**2, "a", "0")),
    ("0", "b"): _g((R**2, "b", "0")),
    ("1", "a"): _g((R**-2, "a", "1")),
    ("1", "b"): _g((ONE, "b", "1")),
    ("+", "a"): _g((_RI, "a", "+")),
    ("+", "b"): _g((_RI, "b", "+"), (-LAMBDA * _RI, "a", "1")),
    ("-", "a"): _g((_RI, "a", "-"), (-LAMBDA * _RI, "b", "1")),
    ("-", "b"): _g((_RI, "b", "-")),
    ("2", "a"): _g((ONE, "a", "2"), (-LAMBDA, "b", "+")),
    ("2", "b"): _g((R**-2, "b", "2"), (-LAMBDA * _RI, "a", "-"), (_L2, "b", "1")),
    ("0", "c"): _g((R**2 * S**2, "c", "0")),
    ("0", "d"): _g((R**2, "d", "0")),
    ("1", "c"): _g((R**-2, "c", "1")),
    ("1", "d"): _g((ONE, "d", "1")),
    ("+", "c"): _g((_RI, "c", "+")),
    ("+", "d"): _g((_RI, "d", "+"), (-LAMBDA * _RI, "c", "1")),
    ("-", "c"): _g((_RI, "c", "-"), (-LAMBDA * _RI, "d", "1")),
    ("-", "d"): _g((_RI, "d", "-")),
    ("2", "c"): _g((ONE, "c", "2"), (-LAMBDA, "d", "+")),
    ("2", "d"): _g((R**-2, "d", "2"), (-LAMBDA * _RI, "c", "-"), (_L2, "d", "1")),
    ("0", "f"): _g((ONE, "f", "0")),
    ("1", "f"): _g((S**-2, "f", "1")),
    ("+", "f"): _g((S.inverse(), "f", "+")),
    ("-", "f"): _g((S.inverse(), "f", "-")),
    ("2", "f"): _g((ONE, "f", "2")),
}

_ZERO = Scalar()
CHI_TABLE = {
    ("0", "a"): R**2 * S**2 - 1, ("0", "b"): _ZERO, ("0", "c"): _ZERO, ("0", "d"): R**2 - 1, ("0", "f"): _ZERO,
    ("1", "a"): R**-2 - 1, ("1", "b"): _ZERO, ("1", "c"): _ZERO, ("1", "d"): _L2, ("1", "f"): S**-2 - 1,
    ("+", "a"): _ZERO, ("+", "b"): _ZERO, ("+", "c"): -LAMBDA, ("+", "d"): _ZERO, ("+", "f"): _ZERO,
    ("-", "a"): _ZERO, ("-", "b"): -LAMBDA, ("-", "c"): _ZERO, ("-", "d"): _ZERO, ("-", "f"): _ZERO,
    ("2", "a"): _ZERO, ("2", "b"): _ZERO, ("2", "c"): _ZERO, ("2", "d"): R**-2 - 1, ("2", "f"): _ZERO,
}

CONV_TABLE = {
    ("0", "a"): _e((R**2 * S**2 - 1, "a")), ("0", "b"): _e((R**2 - 1, "b")),
    ("1", "a"): _e((R**-2 - 1, "a")), ("1", "b"): _e((_L2, "b")),
    ("+", "a"): _e((-LAMBDA, "b")), ("+", "b"): AlgebraElement(),
    ("-", "a"): AlgebraElement(), ("-", "b"): _e((-LAMBDA, "a")),
    ("2", "a"): AlgebraElement(), ("2", "b"): _e((R**-2 - 1, "b")),
    ("0", "c"): _e((R**2 * S**2 - 1, "c")), ("0", "d"): _e((R**2 - 1, "d")),
    ("1", "c"): _e((R**-2 - 1, "c")), ("1", "d"): _e((_L2, "d")),
    ("+", "c"): _e((-LAMBDA, "d")), ("+", "d"): AlgebraElement(),
    ("-", "c"): AlgebraElement(), ("-", "d"): _e((-LAMBDA, "c")),
    ("2", "c"): AlgebraElement(), ("2", "d"): _e((R**-2 - 1, "d")),
    ("0", "f"): AlgebraElement(), ("1", "f"): _e((S**-2 - 1, "f")),
    ("+", "f"): AlgebraElement(), ("-", "f"): AlgebraElement(), ("2", "f"): AlgebraElement(),
}

# the "w_-" in the printed d b and d d is read as w-
D_TABLE = {
    "a": _g((R**2 * S**2 - 1, "a", "0"), (R**-2 - 1, "a", "1"), (-LAMBDA, "b", "+")),
    "b": _g((R**2 - 1, "b", "0"), (_L2, "b", "1"), (-LAMBDA, "a", "-"), (R**-2 - 1, "b", "2")),
    "c": _g((R**2 * S**2 - 1, "c", "0"), (R**-2 - 1, "c", "1"), (-LAMBDA, "d", "+")),
    "d": _g((R**2 - 1, "d", "0"), (_L2, "d", "1"), (-LAMBDA, "c", "-"), (R**-2 - 1, "d", "2")),
    "f": _g((S**-2 - 1, "f", "1")),
}

GENS = ("a", "b", "c", "d", "f")


def table_cells(calc: Calculus | None = None):
    """Yield (id, locus, computed, printed) for all 80 cells."""
    calc = calc or default_calculus()
    for i, x in itertools.product(FORM_INDICES, GENS):
        yield f"omega:w{i}*{x}", LOC_TABLES + " (one-form relations)", calc.omega_commute(i, generator(x)), OMEGA_TABLE[(i, x)]
    for i, x in itertools.product(FORM_INDICES, GENS):
        yield f"chi:χ{i}({x})", LOC_TABLES + " (vector fields)", calc.chi[i](generator(x)), CHI_TABLE[(i, x)]
    for i, x in itertools.product(FORM_INDICES, GENS):
        yield f"conv:χ{i}*{x}", LOC_TABLES + " (convolutions)", convolve(calc.chi[i], generator(x)), CONV_TABLE[(i, x)]
    for x in GENS:
        yield f"d:{x}", LOC_TABLES + " (exterior derivatives)", calc.exterior_d(generator(x)), D_TABLE[x]


def verify_calculus_tables(calc: Calculus | None = None) -> Report:
    """Recompute every table cell; a mismatch is a printed-text discrepancy."""
    calc = calc or default_calculus()
    rep = Report("calculus-tables", None)
    for ident, locus, got, want in table_cells(calc):
        rep.add(ident, locus, got == want, counterexample(ident, got, want), discrepancy=True,
                samples=_scalar_samples(got, want))
    # internal: the excluded components vanish and both d formulas agree
    for pos, phi in calc.vanishing_components().items():
        values = [phi(generator(x)) for x in GENS]
        bad = next((x for x, v in zip(GENS, values) if v), None)
        rep.add(f"chi:excluded-{pos[0]}{pos[1]}", LOC_TABLES, bad is None,
                counterexample(bad, phi(generator(bad)) if bad else 0, 0),
                samples=[(v, Scalar()) for v in values])
    return rep


def _scalar_samples(got, want) -> list:
    # a cell that is zero on both sides still contributes one trivial pair
    return _cell_samples(got, want) or [(Scalar(), Scalar())]


def _cell_samples(got, want) -> list:
    if isinstance(got, Scalar):
        return [(got, want)]
    if isinstance(got, AlgebraElement):
        monos = set(got.monomials()) | set(want.monomials())
        return [(got.coefficient(m), want.coefficient(m)) for m in monos]
    out = []
    for i in FORM_INDICES:
        out.extend(_cell_samples(got.coefficient(i), want.coefficient(i)))
    return out


def table_scan(normalizations=None) -> list[tuple[Scalar, Scalar, int]]:
    """Number of mismatched cells for each candidate (c+, c-)."""
    if normalizations is None:
        units = [ONE, R, R.inverse(), S, S.inverse()]
        normalizations = [(ONE, c) for c in units] + [(c, ONE) for c in units[1:]]
    out = []
    for cp, cm in normalizations:
        calc = Calculus(build_l_matrices(cp, cm))
        misses = sum(1 for _, _, got, want in table_cells(calc) if got != want)
        out.append((cp, cm, misses))
    return out


# -- Leibniz rule and covariance ------------------------------------------------------

def _word(letters) -> AlgebraElement:
    return normal_form(GeneratorWord(tuple(letters)))


def random_products(count: int = 100, max_degree: int = 3, seed: int = 0):
    """Pairs (x, y) of words with deg x + deg y <= max_degree."""
    rng = random.Random(seed)
    letters = ("a", "b", "c", "d", "f", "f^-1")
    out = []
    while len(out) < count:
        n = rng.randint(2, max_degree)
        cut = rng.randint(1, n - 1)
        w = [rng.choice(letters) for _ in range(n)]
        out.append((_word(w[:cut]), _word(w[cut:])))
    return out


def leibniz_sides(calc: Calculus, x: AlgebraElement, y: AlgebraElement) -> tuple[GammaElement, GammaElement]:
    """d(xy) and (dx)y + x(dy)."""
    lhs = calc.exterior_d(multiply(x, y))
    rhs = calc.right_multiply(calc.exterior_d(x), y) + x * calc.exterior_d(y)
    return lhs, rhs


def leibniz_defect(calc: Calculus, x: AlgebraElement, y: AlgebraElement) -> GammaElement:
    lhs, rhs = leibniz_sides(calc, x, y)
    return lhs - rhs


def _left_coaction(g: GammaElement) -> dict:
    """Δ_L(Σ c_i w_i) = Σ Δ(c_i) (1 ⊗ w_i) as {index: rank-2 tensor}."""
    return {i: coproduct(c) for i, c in g.coeffs.items()}


def _one_d(calc: Calculus, x: AlgebraElement) -> dict:
    """(1 ⊗ d) Δ(x) in the same shape."""
    out: dict = {}
    for (x1, x2), p in coproduct(x)._t.items():
        dx2 = calc.exterior_d(_mono(x2))
        for i, c in dx2.coeffs.items():
            t = TensorElement.from_elements(_mono(x1), c)
            t = TensorElement._raw(2, {k: kernels.poly_mul(v, p) for k, v in t._t.items()})
            out[i] = out[i] + t if i in out else t
    return {i: t for i, t in out.items() if not t.is_zero()}


def _m_matrix() -> dict:
    """M_{kl,ij} = t_ki S(t_jl) on surviving indices."""
    out = {}
    for k, i in itertools.product(FORM_INDICES, repeat=2):
        (kk, ll), (ii, jj) = POSITION[k], POSITION[i]
        tki, tjl = T_ENTRIES.get((kk, ii)), T_ENTRIES.get((jj, ll))
        if tki and tjl:
            val = multiply(generator(tki), antipode(generator(tjl)))
            if not val.is_zero():
                out[(k, i)] = val
    return out


def _right_coaction(g: GammaElement) -> dict:
    """Δ_R(Σ c_i w_i) = Σ c_i(1) w_k ⊗ c_i(2) M_{k,i} as {index k: tensor}."""
    m = _m_matrix()
    out: dict = {}
    for i, c in g.coeffs.items():
        cop = coproduct(c)
        for (k, i2), mk in m.items():
            if i2 != i:
                continue
            t = cop * TensorElement.from_elements(unit(), mk)
            out[k] = out[k] + t if k in out else t
    return {k: t for k, t in out.items() if not t.is_zero()}


def _d_one(calc: Calculus, x: AlgebraElement) -> dict:
    """(d ⊗ 1) Δ(x)."""
    out: dict = {}
    for (x1, x2), p in coproduct(x)._t.items():
        dx1 = calc.exterior_d(_mono(x1))
        for i, c in dx1.coeffs.items():
            t = TensorElement.from_elements(c, _mono(x2))
            t = TensorElement._raw(2, {k: kernels.poly_mul(v, p) for k, v in t._t.items()})
            out[i] = out[i] + t if i in out else t
    return {i: t for i, t in out.items() if not t.is_zero()}


def _dict_diff(x: dict, y: dict):
    for i in set(x) | set(y):
        a, b = x.get(i), y.get(i)
        if (a is None) != (b is None) or (a is not None and a != b):
            return counterexample(f"w{i} component", a or 0, b or 0)
    return None


def verify_leibniz_bicovariance(bound: Bound | None = None, count: int = 100, seed: int = 0,
                                calc: Calculus | None = None) -> Report:
    calc = calc or default_calculus()
    rep = Report("leibniz", bound)
    gens = {x: generator(x) for x in GENS}
    for x, y in itertools.product(GENS, repeat=2):
        lhs, rhs = leibniz_sides(calc, gens[x], gens[y])
        rep.add(f"leibniz:{x}*{y}", LOC_LEIBNIZ, lhs == rhs, counterexample(f"{x}*{y}", lhs, rhs),
                samples=sample_pairs(lhs, rhs))
    bad = None
    samples = []
    for x, y in random_products(count, 3, seed):
        lhs, rhs = leibniz_sides(calc, x, y)
        if lhs != rhs:
            bad = counterexample(f"({x})*({y})", lhs, rhs)
            break
        if len(samples) < 8:
            samples.extend(sample_pairs(lhs, rhs, 2))
    rep.add(f"leibniz:random-{count}", LOC_LEIBNIZ, bad is None, bad, samples=samples)
    # the bimodule action is associative: w(xy) = (wx)y
    bad = None
    samples = []
    for i, x, y in itertools.product(FORM_INDICES, GENS, GENS):
        lhs = calc.omega_commute(i, multiply(gens[x], gens[y]))
        rhs = calc.right_multiply(calc.omega_commute(i, gens[x]), gens[y])
        if lhs != rhs:
            bad = counterexample(f"w{i}*{x}*{y}", lhs, rhs)
            break
        if len(samples) < 8:
            samples.extend(sample_pairs(lhs, rhs, 1))
    rep.add("bimodule:associative", LOC_LEIBNIZ, bad is None, bad, samples=samples)
    for x in GENS + ("f^-1", "Det"):
        g = generator(x)
        dx = calc.exterior_d(g)
        for side, lhs, rhs in (("left", _left_coaction(dx), _one_d(calc, g)),
                               ("right", _right_coaction(dx), _d_one(calc, g))):
            rep.add(f"covariance:{side}:{x}", LOC_COV, lhs == rhs, _dict_diff(lhs, rhs),
                    samples=sample_pairs(lhs, rhs))
    return rep


# -- GL(p,q) realization -------------------------------------------------------------

def glpq_calculus(N: int, calc: Calculus | None = None) -> Report:
    """d(f^N x) for x in a, b, c, d with the w0 part set aside.

    Each remaining coefficient is written as κ·(primed generator); the
    detail records κ and, when κ is a Laurent monomial in p_N, q_N, its
    exponents.
    """
    calc = calc or default_calculus()
    p, q = glpq_parameters(N)
    rep = Report(f"glpq-calculus-N{N}", None)
    fN = AlgebraElement._raw({(0, 0, N, 0, 0, 0): {(0, 0): 1}})
    for sym in "abcd":
        primed = glpq_generator(N, sym)
        direct = calc.exterior_d(primed)
        route = calc.right_multiply(calc.exterior_d(fN), generator(sym)) + fN * calc.exterior_d(generator(sym))
        rep.add(f"glpq:N={N}:d({sym}')-two-routes", LOC_GLPQ, direct == route, counterexample(f"{sym}'", direct, route),
                samples=sample_pairs(direct, route))
        notes = []
        ok = True
        for i in FORM_INDICES:
            if i == "0":
                continue
            c = direct.coefficient(i)
            for mono, kappa in c.terms.items():
                target = next((y for y in "abcd" if glpq_generator(N, y).terms == {mono: ONE}), None)
                if target is None:
                    ok = False
                    notes.append(f"w{i}: {mono} is not a primed generator")
                    continue
                exps = pq_exponents(kappa, N)
                notes.append(f"w{i}: ({kappa}) {target}'" + (f" = p^{exps[0]} q^{exps[1]}" if exps else ""))
        rep.add(f"glpq:N={N}:d({sym}')-primed-coefficients", LOC_GLPQ, ok, detail="; ".join(notes),
                samples=sample_pairs(direct, route))
    rep.add(f"glpq:N={N}:p*q=r^-2", LOC_GLPQ, p * q == R**-2, counterexample("p q", p * q, R**-2),
            samples=[(p * q, R**-2)])
    return rep
