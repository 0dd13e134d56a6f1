"""The dual of G_{r,s}, seen only through the pairing.

A functional is a Scalar-weighted sum of words in the dual letters
``A, B, C, Dt, F`` and grouplikes ``G[u;v;w]``.  A word pairs with an
algebra element through the iterated coproduct::

    <Y1 Y2 ... Yq, x> = sum <Y1, x(1)> <Y2 ... Yq, x(2)>

Single letters pair with a localized monomial ``a^k d^l f^t b^m c^n Det^j``
as follows (``δ = δ_m0 δ_n0``)::

    A -> (k+j) δ     Dt -> (l+j) δ     F -> t δ
    B -> δ_m1 δ_n0   C  -> δ_m0 δ_n1   G[u;v;w] -> u^(k+j) v^(l+j) w^t δ
"""

from __future__ import annotations

from collections.abc import Iterable
from functools import cache
from typing import NamedTuple

from . import kernels
from .algebra import (
    DEFAULT_BOUND,
    AlgebraElement,
    Bound,
    Monomial,
    TensorElement,
    _format_sum,
    antipode,
    basis_monomials,
    mono_coproduct,
    unlocalized_basis,
)
from .report import Report, counterexample
from .scalars import LAMBDA, ONE, R, S, Scalar, ScalarError

__all__ = [
    "DUAL_COPRODUCT",
    "G_B",
    "G_C",
    "ONE_U",
    "DualLetter",
    "FunctionalElement",
    "dual_unit_checks",
    "grouplike",
    "letter",
    "pair",
    "pair_tensor",
    "pair_word",
    "verify_dual_algebra",
    "verify_dual_coalgebra",
    "verify_pairing_tables",
]

KINDS = ("A", "B", "C", "Dt", "F", "G")
_KIND_ORDER = {k: i for i, k in enumerate(KINDS)}


class DualLetter(NamedTuple):
    kind: str
    u: Scalar | None = None
    v: Scalar | None = None
    w: Scalar | None = None

    def sort_key(self):
        if self.kind != "G":
            return (_KIND_ORDER[self.kind], ())
        return (_KIND_ORDER["G"], tuple(sorted(x._t.items()) for x in (self.u, self.v, self.w)))

    def inverse(self) -> DualLetter:
        if self.kind != "G":
            raise ValueError(f"{self.kind} is not grouplike")
        return grouplike(self.u.inverse(), self.v.inverse(), self.w.inverse())

    def __str__(self):
        if self.kind == "G":
            return f"G[{self.u};{self.v};{self.w}]"
        return self.kind


def letter(kind: str) -> DualLetter:
    if kind not in KINDS or kind == "G":
        raise ValueError(f"unknown dual letter {kind!r}")
    return DualLetter(kind)


def grouplike(u, v, w) -> DualLetter:
    u, v, w = (Scalar.coerce(x) for x in (u, v, w))
    for x in (u, v, w):
        if not x.is_monomial():
            raise ValueError("grouplike parameters must be Laurent monomials")
    return DualLetter("G", u, v, w)


def _word_key(word):
    return tuple(x.sort_key() for x in word)


class FunctionalElement:
    """Finite Scalar-weighted sum of words in the dual letters."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        for word, c in (terms or {}).items():
            word = tuple(word)
            for x in word:
                if not isinstance(x, DualLetter):
                    raise TypeError("words must consist of DualLetter values")
            c = Scalar.coerce(c)
            if c:
                cur = t.get(word)
                c = c if cur is None else cur + c
                if c:
                    t[word] = c
                else:
                    t.pop(word, None)
        self._t = t

    @classmethod
    def word(cls, *letters, coeff=1) -> FunctionalElement:
        return cls({tuple(letters): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __add__(self, other):
        other = _coerce_functional(other)
        if other is None:
            return NotImplemented
        out = dict(self._t)
        for w, c in other._t.items():
            v = out.get(w, Scalar()) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return _raw_functional(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw_functional({w: -c for w, c in self._t.items()})

    def __sub__(self, other):
        other = _coerce_functional(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, DualLetter):
            other = FunctionalElement.word(other)
        if isinstance(other, FunctionalElement):
            out: dict = {}
            for w1, c1 in self._t.items():
                for w2, c2 in other._t.items():
                    w = w1 + w2
                    v = out.get(w, Scalar()) + c1 * c2
                    if v:
                        out[w] = v
                    else:
                        out.pop(w, None)
            return _raw_functional(out)
        try:
            c = Scalar.coerce(other)
        except ScalarError:
            return NotImplemented
        return _raw_functional({w: x * c for w, x in self._t.items() if x * c})

    def __rmul__(self, other):
        if isinstance(other, DualLetter):
            return FunctionalElement.word(other) * self
        try:
            c = Scalar.coerce(other)
        except ScalarError:
            return NotImplemented
        return _raw_functional({w: c * x for w, x in self._t.items() if c * x})

    def __eq__(self, other):
        other = _coerce_functional(other)
        if other is None:
            return NotImplemented
        return self._t == other._t

    __hash__ = None

    def antipode(self) -> FunctionalElement:
        """Letterwise anti-homomorphism using the dual antipode formulas."""
        out = FunctionalElement()
        for word, c in self._t.items():
            acc = FunctionalElement({(): c})
            for x in reversed(word):
                acc = acc * letter_antipode(x)
            out = out + acc
        return out

    def __call__(self, x: AlgebraElement) -> Scalar:
        return pair(self, x)

    def __str__(self):
        items = []
        for w in sorted(self._t, key=_word_key):
            body = "*".join(str(x) for x in w) if w else None
            items.append((self._t[w], body))
        return _format_sum(items)

    def __repr__(self):
        return f"FunctionalElement({str(self)!r})"


def _raw_functional(t: dict) -> FunctionalElement:
    obj = FunctionalElement.__new__(FunctionalElement)
    obj._t = t
    return obj


def _coerce_functional(x):
    if isinstance(x, FunctionalElement):
        return x
    if isinstance(x, DualLetter):
        return FunctionalElement.word(x)
    try:
        c = Scalar.coerce(x)
    except ScalarError:
        return None
    return FunctionalElement({(): c})


ONE_U = FunctionalElement({(): 1})

A_, B_, C_, D_, F_ = (letter(k) for k in ("A", "B", "C", "Dt", "F"))

# skew-primitive grouplikes: Δ(B) = B⊗G_B + 1⊗B, Δ(C) = C⊗G_C + 1⊗C
G_B = grouplike(R, R.inverse(), S.inverse())
G_C = grouplike(R, R.inverse(), S)


def letter_antipode(x: DualLetter) -> FunctionalElement:
    if x.kind == "G":
        return FunctionalElement.word(x.inverse())
    if x.kind in ("A", "Dt", "F"):
        return FunctionalElement.word(x, coeff=-1)
    if x.kind == "B":
        return FunctionalElement.word(B_, G_B.inverse(), coeff=-1)
    return FunctionalElement.word(C_, G_C.inverse(), coeff=-1)


# stated coproducts as lists of (coeff, left functional, right functional)
DUAL_COPRODUCT = {
    "A": [(ONE, FunctionalElement.word(A_), ONE_U), (ONE, ONE_U, FunctionalElement.word(A_))],
    "Dt": [(ONE, FunctionalElement.word(D_), ONE_U), (ONE, ONE_U, FunctionalElement.word(D_))],
    "F": [(ONE, FunctionalElement.word(F_), ONE_U), (ONE, ONE_U, FunctionalElement.word(F_))],
    "B": [(ONE, FunctionalElement.word(B_), FunctionalElement.word(G_B)), (ONE, ONE_U, FunctionalElement.word(B_))],
    "C": [(ONE, FunctionalElement.word(C_), FunctionalElement.word(G_C)), (ONE, ONE_U, FunctionalElement.word(C_))],
}


# -- pairing ------------------------------------------------------------------

_ONE_POLY = {(0, 0): 1}


@cache
def _letter_value(x: DualLetter, mono) -> tuple:
    """Raw poly (as sorted item tuple) of a single letter on a monomial."""
    k, l, t, m, n, j = mono
    kind = x.kind
    if kind == "B":
        return ((((0, 0), 1),) if (m, n) == (1, 0) else ())
    if kind == "C":
        return ((((0, 0), 1),) if (m, n) == (0, 1) else ())
    if m or n:
        return ()
    if kind == "A":
        v = k + j
    elif kind == "Dt":
        v = l + j
    elif kind == "F":
        v = t
    else:
        val = x.u ** (k + j) * x.v ** (l + j) * x.w ** t
        return tuple(sorted(val._t.items()))
    return ((((0, 0), v),) if v else ())


_WORD_CACHE: dict = {}


def _pair_word_raw(word: tuple, mono: tuple, split: str = "left") -> dict:
    if not word:
        _k, _l, _t, m, n, _j = mono
        return dict(_ONE_POLY) if m == 0 and n == 0 else {}
    if len(word) == 1:
        return dict(_letter_value(word[0], mono))
    key = (word, mono, split)
    hit = _WORD_CACHE.get(key)
    if hit is not None:
        return hit
    acc: dict = {}
    if split == "left":
        head, rest = word[0], word[1:]
        for (x1, x2), p in mono_coproduct(mono).items():
            v = _letter_value(head, x1)
            if not v:
                continue
            q = _pair_word_raw(rest, x2, split)
            if q:
                kernels.poly_iadd(acc, kernels.poly_mul(kernels.poly_mul(p, dict(v)), q))
    else:
        rest, last = word[:-1], word[-1]
        for (x1, x2), p in mono_coproduct(mono).items():
            v = _letter_value(last, x2)
            if not v:
                continue
            q = _pair_word_raw(rest, x1, split)
            if q:
                kernels.poly_iadd(acc, kernels.poly_mul(kernels.poly_mul(p, dict(v)), q))
    _WORD_CACHE[key] = acc
    return acc


def pair_word(word: Iterable[DualLetter], x: AlgebraElement, split: str = "left") -> Scalar:
    """Pair one word with ``x``; ``split`` picks which end is peeled off first."""
    if split not in ("left", "right"):
        raise ValueError("split must be 'left' or 'right'")
    word = tuple(word)
    acc: dict = {}
    for mono, p in x._t.items():
        q = _pair_word_raw(word, mono, split)
        if q:
            kernels.poly_iadd(acc, kernels.poly_mul(p, q))
    return Scalar._raw(acc)


def pair(phi, x: AlgebraElement, split: str = "left") -> Scalar:
    phi = _coerce_functional(phi)
    if phi is None:
        raise TypeError("pair expects a functional")
    out = Scalar()
    for word, c in phi._t.items():
        v = pair_word(word, x, split)
        if v:
            out = out + c * v
    return out


def pair_monomial(phi, mono) -> Scalar:
    return pair(phi, AlgebraElement._raw({tuple(mono): dict(_ONE_POLY)}))


def pair_tensor(phi, psi, tau: TensorElement) -> Scalar:
    if not isinstance(tau, TensorElement) or tau.rank != 2:
        raise ValueError("pair_tensor needs a rank-2 tensor")
    phi, psi = _coerce_functional(phi), _coerce_functional(psi)
    out = Scalar()
    for (x1, x2), p in tau._t.items():
        v1 = pair_monomial(phi, x1)
        if not v1:
            continue
        v2 = pair_monomial(psi, x2)
        if v2:
            out = out + Scalar._raw(dict(p)) * v1 * v2
    return out


def functional_samples(phi: FunctionalElement, basis, count: int = 4) -> list:
    """(lhs, rhs) pairs for a functional that should vanish.

    Words are split by the sign of their leading coefficient so each side
    is evaluated on its own.
    """
    plus, minus = FunctionalElement(), FunctionalElement()
    for w, c in phi.terms.items():
        lead = c.sorted_terms()[0][1]
        if lead > 0:
            plus = plus + FunctionalElement({w: c})
        else:
            minus = minus - FunctionalElement({w: c})
    out = []
    for g in basis:
        a, b = pair(plus, g), pair(minus, g)
        if a or b:
            out.append((a, b))
            if len(out) >= count:
                break
    return out


def clear_cache():
    _WORD_CACHE.clear()
    _letter_value.cache_clear()


# -- verification -------------------------------------------------------------

def _delta(m, n, mm, nn) -> int:
    return 1 if (m, n) == (mm, nn) else 0


def _geom(base: Scalar, lo: int, hi: int, scale=lambda j: j) -> Scalar:
    out = Scalar()
    for j in range(lo, hi):
        out = out + base ** scale(j)
    return out


def _bc_closed(k, l, t, m, n):
    return sum((R ** (2 * (j - l)) for j in range(k)), Scalar()) * _delta(m, n, 0, 0) + R.inverse() * _delta(m, n, 1, 1)


def _cb_closed(upper):
    def f(k, l, t, m, n):
        top = k if upper == "k" else l
        return sum((R ** (-2 * j) for j in range(top)), Scalar()) * _delta(m, n, 0, 0) + R * _delta(m, n, 1, 1)
    return f


def _w(*kinds):
    return FunctionalElement.word(*(letter(k) for k in kinds))


LOC = "two-letter pairing table"
LOC_GEN = "generator pairings"

# (id, words that share the closed form, closed form of (k, l, t, m, n), locus)
PAIRING_TABLE = [
    ("A", ["A"], lambda k, l, t, m, n: Scalar.const(k * _delta(m, n, 0, 0)), LOC_GEN),
    ("B", ["B"], lambda k, l, t, m, n: Scalar.const(_delta(m, n, 1, 0)), LOC_GEN),
    ("C", ["C"], lambda k, l, t, m, n: Scalar.const(_delta(m, n, 0, 1)), LOC_GEN),
    ("Dt", ["Dt"], lambda k, l, t, m, n: Scalar.const(l * _delta(m, n, 0, 0)), LOC_GEN),
    ("F", ["F"], lambda k, l, t, m, n: Scalar.const(t * _delta(m, n, 0, 0)), LOC_GEN),
    ("BC", ["B C"], _bc_closed, LOC),
    ("CB", ["C B"], _cb_closed("l"), LOC),
    ("AB", ["A B"], lambda k, l, t, m, n: Scalar.const((k + 1) * _delta(m, n, 1, 0)), LOC),
    ("BA", ["B A"], lambda k, l, t, m, n: Scalar.const(k * _delta(m, n, 1, 0)), LOC),
    ("AC", ["A C"], lambda k, l, t, m, n: Scalar.const(k * _delta(m, n, 0, 1)), LOC),
    ("CA", ["C A"], lambda k, l, t, m, n: Scalar.const((k + 1) * _delta(m, n, 0, 1)), LOC),
    ("DB", ["Dt B"], lambda k, l, t, m, n: Scalar.const(l * _delta(m, n, 1, 0)), LOC),
    ("BD", ["B Dt"], lambda k, l, t, m, n: Scalar.const((l + 1) * _delta(m, n, 1, 0)), LOC),
    ("DC", ["Dt C"], lambda k, l, t, m, n: Scalar.const((l + 1) * _delta(m, n, 0, 1)), LOC),
    ("CD", ["C Dt"], lambda k, l, t, m, n: Scalar.const(l * _delta(m, n, 0, 1)), LOC),
    ("AD=DA", ["A Dt", "Dt A"], lambda k, l, t, m, n: Scalar.const(k * l * _delta(m, n, 0, 0)), LOC),
    ("AF=FA", ["A F", "F A"], lambda k, l, t, m, n: Scalar.const(k * t * _delta(m, n, 0, 0)), LOC),
    ("DF=FD", ["Dt F", "F Dt"], lambda k, l, t, m, n: Scalar.const(l * t * _delta(m, n, 0, 0)), LOC),
    ("BF", ["B F"], lambda k, l, t, m, n: Scalar.const((t + 1) * _delta(m, n, 1, 0)), LOC, True),
    ("FB", ["F B"], lambda k, l, t, m, n: Scalar.const(t * _delta(m, n, 1, 0)), LOC),
    ("CF", ["C F"], lambda k, l, t, m, n: Scalar.const(t * _delta(m, n, 0, 1)), LOC),
    ("FC", ["F C"], lambda k, l, t, m, n: Scalar.const((t + 1) * _delta(m, n, 0, 1)), LOC, True),
]

# F is primitive and pairs only through t, so B and C commute with it
CORRECTED_TABLE = [
    ("BF-corrected", ["B F"], lambda k, l, t, m, n: Scalar.const(t * _delta(m, n, 1, 0)), LOC),
    ("FC-corrected", ["F C"], lambda k, l, t, m, n: Scalar.const(t * _delta(m, n, 0, 1)), LOC),
]

# the table as printed sums CB up to k-1; the derivation beneath it uses l-1
CB_PRINTED = ("CB-printed-upper-limit", ["C B"], _cb_closed("k"), LOC, True)


def _table_checks(rep: Report, entries, bound: Bound):
    """Entries are (id, words, closed form, locus[, known misprint])."""
    basis = list(unlocalized_basis(bound))
    for ident, words, closed, locus, *flag in entries:
        discrepancy = bool(flag and flag[0])
        for w in words:
            phi = _w(*w.split())
            bad = None
            samples = []
            for idx, g in basis:
                got = pair(phi, g)
                want = closed(*idx)
                if len(samples) < 6 and (got or want):
                    samples.append((got, want))
                if got != want:
                    bad = counterexample(_word_name(idx), got, want)
                    break
            label = ident if len(words) == 1 else f"{ident}:{w.replace(' ', '')}"
            rep.add(f"pairing:{label}", locus, bad is None, bad, discrepancy=discrepancy, samples=samples)


def _word_name(idx) -> str:
    _k, _l, _t, _m, _n = idx
    parts = [f"{s}^{e}" for s, e in zip(("a", "d", "f", "b", "c"), idx) if e]
    return "*".join(parts) if parts else "1"


def verify_pairing_tables(bound: Bound = DEFAULT_BOUND) -> Report:
    """Generator and two-letter closed forms against engine evaluation."""
    rep = Report("pairing-tables", bound)
    _table_checks(rep, PAIRING_TABLE, bound)
    _table_checks(rep, [CB_PRINTED], bound)
    _table_checks(rep, CORRECTED_TABLE, bound)

    # spot value at (k, l) = (2, 1)
    from .algebra import unlocalized_element

    got = pair(_w("B", "C"), unlocalized_element(2, 1))
    want = R ** -2 + 1
    rep.add("pairing:BC-spot-k2-l1", LOC, got == want, counterexample("a^2*d", got, want), samples=[(got, want)])

    # q-commutator closed form, cross-multiplied against r - r^-1
    qc = _w("B", "C") * R - _w("C", "B") * R.inverse()
    bad = None
    samples = []
    for idx, g in unlocalized_basis(bound):
        k, l, _t, m, n = idx
        lhs = LAMBDA * pair(qc, g)
        rhs = (R ** (2 * (k - l)) - 1) * _delta(m, n, 0, 0)
        if lhs and len(samples) < 6:
            samples.append((lhs, rhs))
        if lhs != rhs:
            bad = counterexample(_word_name(idx), lhs, rhs)
            break
    rep.add("pairing:q-commutator-closed-form", "q-commutator closed form", bad is None, bad, samples=samples)
    return rep


LOC_DUAL_REL = "dual commutation relations"


def _bracket(x, y):
    return x * y - y * x


def dual_relations() -> list[tuple[str, FunctionalElement, bool]]:
    """The bracket table as functionals that should vanish, with a misprint flag."""
    A, B, C, D, F = (FunctionalElement.word(x) for x in (A_, B_, C_, D_, F_))
    return [
        ("[A,B]=B", _bracket(A, B) - B, False),
        ("[A,C]=-C", _bracket(A, C) + C, False),
        ("[D,B]=-B", _bracket(D, B) + B, False),
        ("[D,C]=C", _bracket(D, C) - C, False),
        ("[A,D]=0", _bracket(A, D), False),
        ("[A,F]=0", _bracket(A, F), False),
        ("[D,F]=0", _bracket(D, F), False),
        ("[B,F]=B", _bracket(B, F) - B, True),
        ("[C,F]=-C", _bracket(C, F) + C, True),
        ("[B,F]=0", _bracket(B, F), False),
        ("[C,F]=0", _bracket(C, F), False),
    ]


def verify_dual_algebra(bound: Bound = DEFAULT_BOUND) -> Report:
    rep = Report("dual-algebra", bound)
    basis = [AlgebraElement._raw({tuple(m): dict(_ONE_POLY)}) for m in basis_monomials(bound)]
    for ident, rel, misprint in dual_relations():
        bad = None
        for g in basis:
            v = pair(rel, g)
            if v:
                bad = counterexample(g, v, 0)
                break
        rep.add(f"dual:{ident}", LOC_DUAL_REL, bad is None, bad, discrepancy=misprint,
                samples=functional_samples(rel, basis))
    # q-commutator: (r - r^-1)(rBC - r^-1 CB) = G(r^2, r^-2, 1) - 1_U
    qc = (_w("B", "C") * R - _w("C", "B") * R.inverse()) * LAMBDA
    rhs_f = FunctionalElement.word(grouplike(R ** 2, R ** -2, 1)) - ONE_U
    bad = None
    samples = []
    for g in basis:
        lhs, rhs = pair(qc, g), pair(rhs_f, g)
        if lhs and len(samples) < 6:
            samples.append((lhs, rhs))
        if lhs != rhs:
            bad = counterexample(g, lhs, rhs)
            break
    rep.add("dual:q-commutator", LOC_DUAL_REL, bad is None, bad, samples=samples)
    return rep


def _stated_antipode(kind: str) -> FunctionalElement:
    x = letter(kind)
    if kind == "B":
        return FunctionalElement.word(B_, grouplike(R.inverse(), R, S), coeff=-1)
    if kind == "C":
        return FunctionalElement.word(C_, grouplike(R.inverse(), R, S.inverse()), coeff=-1)
    return FunctionalElement.word(x, coeff=-1)


def verify_dual_coalgebra(bound: Bound = DEFAULT_BOUND, pair_bound: Bound | None = None) -> Report:
    """Transport the stated Δ, ε, S of the dual letters through the pairing.

    Coproducts are checked on all pairs (g, h) of basis monomials within
    ``pair_bound`` (default: ``bound``).
    """
    rep = Report("dual-coalgebra", bound)
    pair_bound = pair_bound or bound
    pbasis = [tuple(m) for m in basis_monomials(pair_bound)]
    loc_d = "dual coproduct"
    kinds = list(DUAL_COPRODUCT)
    ys = {kind: letter(kind) for kind in kinds}
    # leg values per monomial, then one product g*h shared by all letters
    legvals = {
        kind: [({g: pair_monomial(f, g) for g in pbasis}, {h: pair_monomial(f2, h) for h in pbasis}, c)
               for c, f, f2 in legs]
        for kind, legs in DUAL_COPRODUCT.items()
    }
    bads = {kind: None for kind in kinds}
    samples = {kind: [] for kind in kinds}
    empty = Scalar()
    for g in pbasis:
        for h in pbasis:
            # every letter vanishes on monomials with m + n >= 2
            low = [(mono, p) for mono, p in kernels.mono_mul(g, h) if mono[3] + mono[4] <= 1]
            for kind in kinds:
                if bads[kind] is not None:
                    continue
                acc: dict = {}
                for mono, p in low:
                    v = _letter_value(ys[kind], mono)
                    if v:
                        kernels.poly_iadd(acc, kernels.poly_mul(p, dict(v)))
                rhs = empty
                for left, right, c in legvals[kind]:
                    a = left[g]
                    if a:
                        b = right[h]
                        if b:
                            rhs = rhs + c * a * b
                if acc != rhs._t:
                    bads[kind] = counterexample(f"{Monomial(*g)} ⊗ {Monomial(*h)}", Scalar._raw(acc), rhs)
                elif acc and len(samples[kind]) < 6:
                    samples[kind].append((Scalar._raw(acc), rhs))
    for kind in kinds:
        bad = bads[kind]
        rep.add(f"dual-coproduct:{kind}", loc_d, bad is None, bad, samples=samples[kind])
    for kind in ("A", "B", "C", "Dt", "F"):
        v = pair(FunctionalElement.word(letter(kind)), AlgebraElement.scalar(1))
        rep.add(f"dual-counit:{kind}", "dual counit", not v, counterexample("1", v, 0), samples=[(v, Scalar())])
    basis = [AlgebraElement._raw({tuple(m): dict(_ONE_POLY)}) for m in basis_monomials(bound)]
    for kind in ("A", "B", "C", "Dt", "F"):
        SY = _stated_antipode(kind)
        Y = FunctionalElement.word(letter(kind))
        bad = None
        samples = []
        for g in basis:
            lhs, rhs = pair(SY, g), pair(Y, antipode(g))
            if lhs and len(samples) < 6:
                samples.append((lhs, rhs))
            if lhs != rhs:
                bad = counterexample(g, lhs, rhs)
                break
        rep.add(f"dual-antipode:{kind}", "dual antipode", bad is None, bad, discrepancy=True, samples=samples)
    return rep


def dual_unit_checks(bound: Bound = DEFAULT_BOUND) -> Report:
    rep = Report("dual-unit", bound)
    one = AlgebraElement.scalar(1)
    for kind in ("A", "B", "C", "Dt", "F"):
        v = pair(FunctionalElement.word(letter(kind)), one)
        rep.add(f"unit:<{kind},1>=0", "dual unit pairings", not v, counterexample("1", v, 0), samples=[(v, Scalar())])
    bad = None
    samples = []
    for idx, g in unlocalized_basis(bound):
        _k, _l, _t, m, n = idx
        v = pair(ONE_U, g)
        want = _delta(m, n, 0, 0)
        if v and len(samples) < 6:
            samples.append((v, Scalar.const(want)))
        if v != want:
            bad = counterexample(_word_name(idx), v, want)
            break
    rep.add("unit:<1_U,g>=δm0δn0", "dual unit pairings", bad is None, bad, samples=samples)
    return rep
