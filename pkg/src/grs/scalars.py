"""Exact Laurent polynomials in r^(1/2), s^(1/2) over the rationals.

Exponents are stored doubled, so ``(3, -2)`` is ``r^(3/2) * s^-1``.  A
:class:`Scalar` is immutable and canonical: zero coefficients are never
stored, so equality is plain dictionary equality.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from fractions import Fraction
from numbers import Rational

from . import kernels

__all__ = [
    "LAMBDA",
    "ONE",
    "ZERO",
    "R",
    "S",
    "Scalar",
    "ScalarError",
    "format_exponent",
    "normalize",
    "ratio_equal",
    "substitute",
]


class ScalarError(ValueError):
    """Raised for malformed scalar input (bad exponents, zero denominators...)."""


def _coerce_coeff(c) -> int | Fraction:
    if isinstance(c, bool):
        raise ScalarError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        f = Fraction(c.numerator, c.denominator)
        return f.numerator if f.denominator == 1 else f
    raise ScalarError(f"coefficient must be rational, got {type(c).__name__}")


def _half_int(e) -> int:
    """Doubled integer for a (half-)integer exponent."""
    f = Fraction(e)
    d = f * 2
    if d.denominator != 1:
        raise ScalarError(f"exponent {e} is not a half-integer")
    return int(d)


class Scalar:
    __slots__ = ("_hash", "_t")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        t = {}
        if terms:
            for key, c in terms.items():
                er, es = key
                if not (isinstance(er, int) and isinstance(es, int)):
                    raise ScalarError("doubled exponents must be integers")
                c = _coerce_coeff(c)
                if c:
                    t[(er, es)] = c
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> Scalar:
        # trusted constructor: t is already canonical and owned by the result
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> Scalar:
        c = _coerce_coeff(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, coeff=1, r_exp=0, s_exp=0) -> Scalar:
        """``coeff * r^r_exp * s^s_exp`` with (half-)integer exponents."""
        c = _coerce_coeff(coeff)
        return cls._raw({(_half_int(r_exp), _half_int(s_exp)): c} if c else {})

    @classmethod
    def coerce(cls, x) -> Scalar:
        if isinstance(x, Scalar):
            return x
        return cls.const(x)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], int | Fraction]:
        return dict(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def constant_value(self):
        """The rational value if this is a constant, else None."""
        if not self._t:
            return 0
        if len(self._t) == 1 and (0, 0) in self._t:
            return self._t[(0, 0)]
        return None

    def monomial_parts(self) -> tuple[int | Fraction, int, int]:
        """(coeff, doubled r exponent, doubled s exponent) of a monomial."""
        if len(self._t) != 1:
            raise ScalarError(f"{self} is not a monomial")
        ((er, es), c), = self._t.items()
        return c, er, es

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.const(other)
            except ScalarError:
                return NotImplemented
        return Scalar._raw(kernels.poly_add(self._t, other._t))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.const(other)
            except ScalarError:
                return NotImplemented
        return Scalar._raw(kernels.poly_add(self._t, other._t, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.const(other)
            except ScalarError:
                return NotImplemented
        return Scalar._raw(kernels.poly_mul(self._t, other._t))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ScalarError("only integer powers of a Scalar are supported")
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> Scalar:
        """Inverse of a monomial; polynomials are not invertible here."""
        if len(self._t) != 1:
            raise ScalarError(f"cannot invert non-monomial {self}")
        c, er, es = self.monomial_parts()
        return Scalar._raw({(-er, -es): _coerce_coeff(Fraction(1) / c)})

    def monomial_power(self, e) -> Scalar:
        """Power of a monomial with a (half-)integer exponent.

        Half powers are only exact for a unit coefficient.
        """
        c, er, es = self.monomial_parts()
        e = Fraction(e)
        if e.denominator == 1:
            return self ** int(e)
        if c != 1 or e.denominator != 2 or (er * e.numerator) % 2 or (es * e.numerator) % 2:
            raise ScalarError(f"cannot raise {self} to {e} exactly")
        return Scalar._raw({(er * e.numerator // 2, es * e.numerator // 2): 1})

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._t == other._t
        try:
            return self._t == Scalar.const(other)._t
        except ScalarError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    # -- evaluation -------------------------------------------------------

    def substitute(self, r0, s0) -> Fraction:
        return substitute(self, r0, s0)

    # -- text -------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self._t.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        return _format(self)

    def __repr__(self):
        return f"Scalar({_format(self)!r})"


def format_exponent(sym: str, doubled: int) -> str:
    if doubled == 0:
        return ""
    if doubled % 2 == 0:
        e = doubled // 2
        return sym if e == 1 else f"{sym}^{e}"
    return f"{sym}^({doubled}/2)"


def _format_term(c, er: int, es: int) -> tuple[str, str]:
    """(sign, body) for one term."""
    sign = "-" if c < 0 else "+"
    c = -c if c < 0 else c
    factors = [f for f in (format_exponent("r", er), format_exponent("s", es)) if f]
    if not factors:
        return sign, str(c)
    if c == 1:
        return sign, " * ".join(factors)
    return sign, " * ".join([str(c)] + factors)


def _format(x: Scalar) -> str:
    if not x._t:
        return "0"
    out = []
    for i, ((er, es), c) in enumerate(x.sorted_terms()):
        sign, body = _format_term(c, er, es)
        if i == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


R = Scalar.monomial(1, 1, 0)
S = Scalar.monomial(1, 0, 1)
ONE = Scalar.const(1)
ZERO = Scalar.const(0)
LAMBDA = R - R.inverse()


def normalize(tree) -> Scalar:
    """Canonical Scalar for an arithmetic tree.

    Leaves are ``"r"``, ``"s"``, rationals or Scalars; inner nodes are tuples
    ``("+", x, y)``, ``("-", x, y)``, ``("*", x, y)``, ``("neg", x)`` and
    ``("^", x, e)`` with a (half-)integer ``e``.  Half powers are only allowed
    on monomials.
    """
    if isinstance(tree, Scalar):
        return tree
    if isinstance(tree, str):
        if tree == "r":
            return R
        if tree == "s":
            return S
        raise ScalarError(f"unknown symbol {tree!r}")
    if isinstance(tree, tuple):
        op, *args = tree
        if op == "+":
            return normalize(args[0]) + normalize(args[1])
        if op == "-":
            return normalize(args[0]) - normalize(args[1])
        if op == "*":
            return normalize(args[0]) * normalize(args[1])
        if op == "neg":
            return -normalize(args[0])
        if op == "^":
            base = normalize(args[0])
            e = Fraction(args[1])
            if (2 * e).denominator != 1:
                raise ScalarError(f"exponent {args[1]} is not a half-integer")
            if e.denominator == 1:
                return base ** int(e)
            return base.monomial_power(e)
        raise ScalarError(f"unknown operator {op!r}")
    return Scalar.const(tree)


def _rational_sqrt(x) -> Fraction:
    x = Fraction(x)
    if x <= 0:
        raise ScalarError(f"{x} must be a positive rational square")
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n != x.numerator or d * d != x.denominator:
        raise ScalarError(f"{x} is not the square of a rational")
    return Fraction(n, d)


def substitute(x: Scalar, r0, s0) -> Fraction:
    """Exact value of ``x`` at r = r0, s = s0 (both rational squares)."""
    rr, ss = _rational_sqrt(r0), _rational_sqrt(s0)
    total = Fraction(0)
    for (er, es), c in x._t.items():
        total += c * rr ** er * ss ** es
    return total


def ratio_equal(n1: Scalar, d1: Scalar, n2: Scalar, d2: Scalar) -> bool:
    """Whether n1/d1 == n2/d2, decided by cross multiplication."""
    n1, d1, n2, d2 = (Scalar.coerce(v) for v in (n1, d1, n2, d2))
    if d1.is_zero() or d2.is_zero():
        raise ScalarError("zero denominator")
    return n1 * d2 == n2 * d1


def sum_scalars(items: Iterable[Scalar]) -> Scalar:
    acc: dict = {}
    for x in items:
        kernels.poly_iadd(acc, x._t, 1)
    return Scalar._raw(acc)
