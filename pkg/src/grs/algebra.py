"""The Hopf algebra G_{r,s}, localized at the quantum determinant.

Basis monomials are ``a^k d^l f^t b^m c^n Det^j`` with ``min(k, l) == 0``;
``Det = ad - r^-1 bc`` is central and grouplike, ``f`` is invertible.
Products use the closed-form monomial tables in :mod:`grs.kernels`; the
word rewriter in :mod:`grs.rewriting` is an independent route to the same
normal forms.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cache
from itertools import product as iproduct
from typing import NamedTuple

from . import kernels, rewriting
from .scalars import ONE, R, S, Scalar, ScalarError

__all__ = [
    "DET",
    "AlgebraElement",
    "AlgebraError",
    "Bound",
    "GeneratorWord",
    "Monomial",
    "TensorElement",
    "antipode",
    "basis_monomials",
    "coproduct",
    "counit",
    "generator",
    "glpq_generator",
    "glpq_parameters",
    "multiply",
    "normal_form",
    "printed_antipode_value",
    "unit",
    "unlocalized_element",
]


class AlgebraError(ValueError):
    pass


class Monomial(NamedTuple):
    k: int = 0
    l: int = 0
    t: int = 0
    m: int = 0
    n: int = 0
    j: int = 0

    @classmethod
    def checked(cls, k=0, l=0, t=0, m=0, n=0, j=0) -> Monomial:
        if min(k, l, m, n) < 0:
            raise AlgebraError("exponents of a, d, b, c must be nonnegative")
        if min(k, l) != 0:
            raise AlgebraError("a basis monomial cannot contain both a and d")
        return cls(k, l, t, m, n, j)

    def __str__(self):
        return format_monomial(self)


UNIT = (0, 0, 0, 0, 0, 0)

_FACTOR_NAMES = ("a", "d", "f", "b", "c", "Det")


def format_monomial(mono) -> str:
    parts = []
    for name, e in zip(_FACTOR_NAMES, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _format_coeff_times(c: Scalar, body: str | None) -> tuple[str, str]:
    """(sign, text) for ``c * body``; ``body`` None means the unit."""
    if c.is_monomial():
        coeff, _er, _es = c.monomial_parts()
        sign = "-" if coeff < 0 else "+"
        mag = -c if coeff < 0 else c
        if body is None:
            return sign, str(mag)
        if mag == ONE:
            return sign, body
        return sign, f"{mag} * {body}"
    if body is None:
        return "+", f"({c})"
    return "+", f"({c}) * {body}"


def _format_sum(items: list[tuple[Scalar, str | None]]) -> str:
    if not items:
        return "0"
    if len(items) == 1 and items[0][1] is None:
        return str(items[0][0])
    out = []
    for i, (c, body) in enumerate(items):
        sign, text = _format_coeff_times(c, body)
        if i == 0:
            out.append(text if sign == "+" else "-" + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


class AlgebraElement:
    """A finite Scalar-weighted sum of basis monomials."""

    __slots__ = ("_hash", "_t")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(Monomial.checked(*mono))
                c = Scalar.coerce(c)
                if not c.is_zero():
                    cur = t.get(mono)
                    t[mono] = kernels.poly_add(cur, c._t) if cur else dict(c._t)
                    if not t[mono]:
                        del t[mono]
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> AlgebraElement:
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, mono, coeff=1) -> AlgebraElement:
        return cls({tuple(mono): coeff})

    @classmethod
    def scalar(cls, c) -> AlgebraElement:
        return cls({UNIT: c})

    @property
    def terms(self) -> dict[Monomial, Scalar]:
        return {Monomial(*m): Scalar._raw(dict(p)) for m, p in self._t.items()}

    def coefficient(self, mono) -> Scalar:
        p = self._t.get(tuple(mono))
        return Scalar._raw(dict(p)) if p else Scalar()

    def monomials(self) -> list[Monomial]:
        return [Monomial(*m) for m in sorted(self._t)]

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def __add__(self, other):
        other = _coerce_element(other)
        if other is None:
            return NotImplemented
        out = {m: dict(p) for m, p in self._t.items()}
        for m, p in other._t.items():
            cur = out.get(m)
            if cur is None:
                out[m] = dict(p)
            else:
                kernels.poly_iadd(cur, p)
                if not cur:
                    del out[m]
        return AlgebraElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw({m: {k: -c for k, c in p.items()} for m, p in self._t.items()})

    def __sub__(self, other):
        other = _coerce_element(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> AlgebraElement:
        c = Scalar.coerce(c)
        if c.is_zero():
            return AlgebraElement()
        return AlgebraElement._raw({m: kernels.poly_mul(p, c._t) for m, p in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return AlgebraElement._raw(kernels.elem_mul(self._t, other._t))
        try:
            return self.scale(other)
        except ScalarError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except ScalarError:
            return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative powers of general elements are undefined")
        result = unit()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self._t == other._t
        other = _coerce_element(other)
        if other is None:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((m, frozenset(p.items())) for m, p in self._t.items()))
        return self._hash

    def map_coefficients(self, fn) -> AlgebraElement:
        return AlgebraElement({m: fn(Scalar._raw(dict(p))) for m, p in self._t.items()})

    def substitute(self, r0, s0) -> dict:
        """Coefficients evaluated at a numeric point, keyed by monomial."""
        return {m: Scalar._raw(p).substitute(r0, s0) for m, p in self._t.items()}

    def __str__(self):
        items = []
        for m in sorted(self._t):
            c = Scalar._raw(self._t[m])
            items.append((c, None if m == UNIT else format_monomial(m)))
        return _format_sum(items)

    def __repr__(self):
        return f"AlgebraElement({str(self)!r})"


def _coerce_element(x) -> AlgebraElement | None:
    if isinstance(x, AlgebraElement):
        return x
    try:
        return AlgebraElement.scalar(Scalar.coerce(x))
    except ScalarError:
        return None


class TensorElement:
    """Rank-2 or rank-3 tensor of basis monomials with Scalar weights."""

    __slots__ = ("_t", "rank")

    def __init__(self, rank: int, terms=None):
        if rank not in (2, 3):
            raise AlgebraError("tensor rank must be 2 or 3")
        self.rank = rank
        t = {}
        for legs, c in (terms or {}).items():
            legs = tuple(tuple(Monomial.checked(*m)) for m in legs)
            if len(legs) != rank:
                raise AlgebraError("leg count does not match rank")
            c = Scalar.coerce(c)
            if not c.is_zero():
                cur = t.setdefault(legs, {})
                kernels.poly_iadd(cur, c._t)
                if not cur:
                    del t[legs]
        self._t = t

    @classmethod
    def _raw(cls, rank: int, t: dict) -> TensorElement:
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._t = t
        return obj

    @classmethod
    def from_elements(cls, *elements: AlgebraElement) -> TensorElement:
        """Pure tensor x1 (x) x2 (x) ... of algebra elements."""
        out = {}
        for combo in iproduct(*(e._t.items() for e in elements)):
            legs = tuple(m for m, _ in combo)
            p = ONE._t
            for _, q in combo:
                p = kernels.poly_mul(p, q)
            cur = out.setdefault(legs, {})
            kernels.poly_iadd(cur, p)
            if not cur:
                del out[legs]
        return cls._raw(len(elements), out)

    @property
    def terms(self) -> dict[tuple[Monomial, ...], Scalar]:
        return {tuple(Monomial(*m) for m in legs): Scalar._raw(dict(p)) for legs, p in self._t.items()}

    def is_zero(self) -> bool:
        return not self._t

    def __add__(self, other):
        if not isinstance(other, TensorElement) or other.rank != self.rank:
            return NotImplemented
        out = {k: dict(p) for k, p in self._t.items()}
        for k, p in other._t.items():
            cur = out.setdefault(k, {})
            kernels.poly_iadd(cur, p)
            if not cur:
                del out[k]
        return TensorElement._raw(self.rank, out)

    def __neg__(self):
        return TensorElement._raw(self.rank, {k: {e: -c for e, c in p.items()} for k, p in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            if other.rank != self.rank:
                raise AlgebraError("rank mismatch")
            return TensorElement._raw(self.rank, kernels.tensor_mul(self._t, other._t))
        c = Scalar.coerce(other)
        return TensorElement._raw(self.rank, {k: kernels.poly_mul(p, c._t) for k, p in self._t.items() if c})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.rank == other.rank and self._t == other._t

    __hash__ = None

    def __str__(self):
        items = []
        for legs in sorted(self._t):
            body = " ⊗ ".join(format_monomial(m) for m in legs)
            items.append((Scalar._raw(self._t[legs]), body))
        return _format_sum(items)

    def __repr__(self):
        return f"TensorElement({self.rank}, {str(self)!r})"


# -- generators ---------------------------------------------------------------

_GEN_MONO = {
    "a": (1, 0, 0, 0, 0, 0),
    "d": (0, 1, 0, 0, 0, 0),
    "f": (0, 0, 1, 0, 0, 0),
    "f^-1": (0, 0, -1, 0, 0, 0),
    "b": (0, 0, 0, 1, 0, 0),
    "c": (0, 0, 0, 0, 1, 0),
    "Det": (0, 0, 0, 0, 0, 1),
    "Det^-1": (0, 0, 0, 0, 0, -1),
}
GENERATOR_LETTERS = tuple(_GEN_MONO)

# internal one-character codes used by the rewriter
_LETTER_CODE = {"a": "a", "d": "d", "f": "f", "f^-1": "F", "b": "b", "c": "c", "Det": "D", "Det^-1": "E"}


def generator(name: str) -> AlgebraElement:
    try:
        return AlgebraElement._raw({_GEN_MONO[name]: {(0, 0): 1}})
    except KeyError:
        raise AlgebraError(f"unknown generator {name!r}") from None


def unit() -> AlgebraElement:
    return AlgebraElement._raw({UNIT: {(0, 0): 1}})


DET = generator("Det")


@dataclass(frozen=True)
class GeneratorWord:
    """``coefficient * letters[0] * letters[1] * ...`` as a free word."""

    letters: tuple[str, ...] = ()
    coefficient: Scalar = field(default_factory=lambda: ONE)

    def __post_init__(self):
        bad = [x for x in self.letters if x not in _GEN_MONO]
        if bad:
            raise AlgebraError(f"unknown letters {bad}")
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "coefficient", Scalar.coerce(self.coefficient))

    def __str__(self):
        body = "*".join(self.letters) if self.letters else None
        return _format_sum([(self.coefficient, body)]) if self.letters or self.coefficient else "0"


def normal_form(words: GeneratorWord | Iterable[GeneratorWord], strategy: str = "leftmost") -> AlgebraElement:
    """Normal-order a word (or formal sum of words) by pairwise rewriting."""
    if isinstance(words, GeneratorWord):
        words = [words]
    start: dict = {}
    for w in words:
        code = tuple(_LETTER_CODE[x] for x in w.letters)
        cur = start.setdefault(code, {})
        kernels.poly_iadd(cur, w.coefficient._t)
        if not cur:
            del start[code]
    done = rewriting.rewrite(start, strategy)
    out: dict = {}
    for word, p in done.items():
        mono = rewriting.word_to_monomial(word)
        cur = out.setdefault(mono, {})
        kernels.poly_iadd(cur, p)
        if not cur:
            del out[mono]
    return AlgebraElement._raw(out)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def word_product(word: GeneratorWord) -> AlgebraElement:
    """Evaluate a word through the monomial product tables."""
    result = unit().scale(word.coefficient)
    for x in word.letters:
        result = result * generator(x)
    return result


# -- Hopf structure -----------------------------------------------------------

_A, _D, _F, _FI, _B, _C, _DET, _DETI = (_GEN_MONO[x] for x in GENERATOR_LETTERS)
_1 = {(0, 0): 1}

_GEN_COPRODUCT = {
    "a": {(_A, _A): _1, (_B, _C): _1},
    "b": {(_A, _B): _1, (_B, _D): _1},
    "c": {(_C, _A): _1, (_D, _C): _1},
    "d": {(_C, _B): _1, (_D, _D): _1},
}


@cache
def _gen_power_coproduct(g: str, e: int):
    t = {(UNIT, UNIT): _1}
    for _ in range(e):
        t = kernels.tensor_mul(t, _GEN_COPRODUCT[g])
    return t


@cache
def _mono_coproduct(mono):
    k, l, t, m, n, j = mono
    out = _gen_power_coproduct("a", k)
    if l:
        out = kernels.tensor_mul(out, _gen_power_coproduct("d", l))
    if m:
        out = kernels.tensor_mul(out, _gen_power_coproduct("b", m))
    if n:
        out = kernels.tensor_mul(out, _gen_power_coproduct("c", n))
    if t or j:
        # f^t Det^j is grouplike; it sits between d and b, so multiply it in
        # through the monomial tables rather than appending exponents
        g = (0, 0, t, 0, 0, j)
        ft = {(g, g): _1}
        if l or k:
            head = _gen_power_coproduct("a", k)
            if l:
                head = kernels.tensor_mul(head, _gen_power_coproduct("d", l))
            tail = {(UNIT, UNIT): _1}
            if m:
                tail = kernels.tensor_mul(tail, _gen_power_coproduct("b", m))
            if n:
                tail = kernels.tensor_mul(tail, _gen_power_coproduct("c", n))
            out = kernels.tensor_mul(kernels.tensor_mul(head, ft), tail)
        else:
            out = kernels.tensor_mul(ft, out)
    return out


def coproduct(x: AlgebraElement, rank: int = 2) -> TensorElement:
    """Δ(x) for rank 2, (Δ⊗id)Δ(x) for rank 3."""
    if rank not in (2, 3):
        raise AlgebraError("rank must be 2 or 3")
    out: dict = {}
    for mono, p in x._t.items():
        for legs, q in _mono_coproduct(mono).items():
            cur = out.setdefault(legs, {})
            kernels.poly_iadd(cur, kernels.poly_mul(p, q))
            if not cur:
                del out[legs]
    if rank == 2:
        return TensorElement._raw(2, out)
    out3: dict = {}
    for (x1, x2), p in out.items():
        for (y1, y2), q in _mono_coproduct(x1).items():
            legs = (y1, y2, x2)
            cur = out3.setdefault(legs, {})
            kernels.poly_iadd(cur, kernels.poly_mul(p, q))
            if not cur:
                del out3[legs]
    return TensorElement._raw(3, out3)


def mono_coproduct(mono) -> dict:
    """Cached raw Δ of one basis monomial: ``{(leg1, leg2): poly}``."""
    return _mono_coproduct(tuple(mono))


def counit(x: AlgebraElement) -> Scalar:
    acc: dict = {}
    for (k, l, t, m, n, j), p in x._t.items():
        if m == 0 and n == 0:
            kernels.poly_iadd(acc, p)
    return Scalar._raw(acc)


def _det_power(j: int) -> dict:
    return {(0, 0, 0, 0, 0, j): _1}


_RAW_R = {(2, 0): 1}
_RAW_RI = {(-2, 0): 1}

# S on generators, each a raw element
_GEN_ANTIPODE = {
    "a": {(0, 1, 0, 0, 0, -1): _1},
    "d": {(1, 0, 0, 0, 0, -1): _1},
    "b": {(0, 0, 0, 1, 0, -1): {(2, 0): -1}},
    "c": {(0, 0, 0, 0, 1, -1): {(-2, 0): -1}},
    "f": {(0, 0, -1, 0, 0, 0): _1},
    "f^-1": {(0, 0, 1, 0, 0, 0): _1},
}

# the antipode matrix exactly as printed; used only to report the mismatch
_PRINTED_ANTIPODE = {
    "a": {(0, 1, 0, 0, 0, -1): _1},
    "d": {(1, 0, 0, 0, 0, -1): _1},
    "b": {(0, 0, 0, 0, 1, -1): {(2, 0): -1}},
    "c": {(0, 0, 0, 0, 1, -1): {(-2, 0): -1}},
    "f": {(0, 0, 1, 0, 0, 0): _1},
}


def printed_antipode_value(name: str) -> AlgebraElement:
    return AlgebraElement._raw({m: dict(p) for m, p in _PRINTED_ANTIPODE[name].items()})


def antipode_value(name: str) -> AlgebraElement:
    return AlgebraElement._raw({m: dict(p) for m, p in _GEN_ANTIPODE[name].items()})


@cache
def _mono_antipode(mono):
    k, l, t, m, n, j = mono
    out = _det_power(-j)
    for g, e in (("c", n), ("b", m)):
        for _ in range(e):
            out = kernels.elem_mul(out, _GEN_ANTIPODE[g])
    if t:
        out = kernels.elem_mul(out, {(0, 0, -t, 0, 0, 0): _1})
    for g, e in (("d", l), ("a", k)):
        for _ in range(e):
            out = kernels.elem_mul(out, _GEN_ANTIPODE[g])
    return out


def antipode(x: AlgebraElement) -> AlgebraElement:
    out: dict = {}
    for mono, p in x._t.items():
        for m2, q in _mono_antipode(mono).items():
            cur = out.setdefault(m2, {})
            kernels.poly_iadd(cur, kernels.poly_mul(p, q))
            if not cur:
                del out[m2]
    return AlgebraElement._raw(out)


def tensor_contract(t: TensorElement, left=None, right=None) -> AlgebraElement:
    """m((left ⊗ right) t) for a rank-2 tensor; ``None`` means identity."""
    out = AlgebraElement()
    for (x1, x2), p in t._t.items():
        e1 = AlgebraElement._raw({x1: _1})
        e2 = AlgebraElement._raw({x2: _1})
        if left is not None:
            e1 = left(e1)
        if right is not None:
            e2 = right(e2)
        out = out + (e1 * e2).scale(Scalar._raw(p))
    return out


# -- bounds and basis enumeration --------------------------------------------

@dataclass(frozen=True)
class Bound:
    k: int = 2
    l: int = 2
    m: int = 2
    n: int = 2
    t: int = 2
    j: int = 1
    wordlen: int = 4

    def as_dict(self) -> dict:
        return {"k": self.k, "l": self.l, "m": self.m, "n": self.n, "t": self.t, "j": self.j, "wordlen": self.wordlen}

    @classmethod
    def parse(cls, text: str) -> Bound:
        values = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            key, _, val = part.partition("=")
            key = key.strip()
            if key not in cls.__dataclass_fields__:
                raise ValueError(f"unknown bound key {key!r}")
            try:
                v = int(val)
            except ValueError:
                raise ValueError(f"bound {key} must be an integer, got {val!r}") from None
            if v < 0:
                raise ValueError(f"bound {key} must be nonnegative")
            values[key] = v
        return cls(**values)


DEFAULT_BOUND = Bound()


def basis_monomials(bound: Bound = DEFAULT_BOUND, with_det: bool = True) -> Iterator[Monomial]:
    """Localized basis monomials within the bound, in lexicographic order."""
    js = range(-bound.j, bound.j + 1) if with_det else (0,)
    for k in range(bound.k + 1):
        for l in range(bound.l + 1):
            if min(k, l):
                continue
            for t in range(-bound.t, bound.t + 1):
                for m in range(bound.m + 1):
                    for n in range(bound.n + 1):
                        for j in js:
                            yield Monomial(k, l, t, m, n, j)


def unlocalized_element(k=0, l=0, t=0, m=0, n=0) -> AlgebraElement:
    """The word a^k d^l f^t b^m c^n multiplied out in the localized basis."""
    x = unit()
    for g, e in (("a", k), ("d", l)):
        for _ in range(e):
            x = x * generator(g)
    if t:
        x = x * AlgebraElement._raw({(0, 0, t, 0, 0, 0): _1})
    for g, e in (("b", m), ("c", n)):
        for _ in range(e):
            x = x * generator(g)
    return x


def unlocalized_basis(bound: Bound = DEFAULT_BOUND) -> Iterator[tuple[tuple[int, ...], AlgebraElement]]:
    for k in range(bound.k + 1):
        for l in range(bound.l + 1):
            for t in range(-bound.t, bound.t + 1):
                for m in range(bound.m + 1):
                    for n in range(bound.n + 1):
                        yield (k, l, t, m, n), unlocalized_element(k, l, t, m, n)


# -- GL_{p,q}(2) realization --------------------------------------------------

def glpq_parameters(N: int) -> tuple[Scalar, Scalar]:
    """(p_N, q_N) = (r^-1 s^N, r^-1 s^-N)."""
    if N == 0:
        raise AlgebraError("N must be nonzero")
    return R.inverse() * S ** N, R.inverse() * S ** (-N)


def glpq_generator(N: int, sym: str) -> AlgebraElement:
    """Primed generator f^N x for x in a', b', c', d'."""
    if N == 0:
        raise AlgebraError("N must be nonzero")
    base = sym.rstrip("'")
    if base not in ("a", "b", "c", "d"):
        raise AlgebraError(f"unknown primed generator {sym!r}")
    return AlgebraElement._raw({(0, 0, N, 0, 0, 0): _1}) * generator(base)


def pq_exponents(kappa: Scalar, N: int) -> tuple[int, int] | None:
    """(α, β) with kappa == p_N^α q_N^β, or None if no such Laurent monomial."""
    if not kappa.is_monomial():
        return None
    c, er, es = kappa.monomial_parts()
    if c != 1 or er % 2 or es % 2:
        return None
    x, y = er // 2, es // 2
    # p^α q^β = r^-(α+β) s^(N(α-β))
    if y % N:
        return None
    total, diff = -x, y // N
    if (total + diff) % 2:
        return None
    return (total + diff) // 2, (total - diff) // 2
