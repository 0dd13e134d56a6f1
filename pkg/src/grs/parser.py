"""Expression parser for the command line.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' exponent]
    exponent := signed-int | '(' signed-int ['/' int] ')'
    atom   := number | r | s | a | b | c | d | f | Det
            | A | B | C | Dt | F | G '[' expr ';' expr ';' expr ']' | '(' expr ')'

Algebra atoms and dual atoms cannot appear in the same expression.  Algebra
input is kept as a formal sum of free words so that normalization is done
by the caller; dual input becomes a :class:`FunctionalElement`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, GeneratorWord, normal_form
from .dual import FunctionalElement, grouplike, letter
from .scalars import ONE, R, S, Scalar, ScalarError

ALGEBRA_ATOMS = {"a", "b", "c", "d", "f", "Det"}
DUAL_ATOMS = {"A", "B", "C", "Dt", "F", "G"}
SCALAR_ATOMS = {"r": R, "s": S}
INVERTIBLE = {"f": "f^-1", "Det": "Det^-1"}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at offset {pos}")

    def pointer(self) -> str:
        """The input with a caret under the offending offset."""
        return f"{self.text}\n{' ' * self.pos}^"


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(Token("num", num, start))
        elif name is not None:
            out.append(Token("name", name, start))
        elif op.strip():
            if op not in "+-*/^()[];":
                raise ParseError(f"unexpected character {op!r}", start, text)
            out.append(Token("op", op, start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# -- values --------------------------------------------------------------------
# Every subexpression evaluates to one of three kinds.  Algebra values are
# dicts {letters tuple: Scalar}; dual values are FunctionalElements.

@dataclass
class Value:
    kind: str  # "scalar", "algebra", "dual"
    data: object
    pos: int


def _word_sum_add(x: dict, y: dict, sign: int = 1) -> dict:
    out = dict(x)
    for w, c in y.items():
        v = out.get(w, Scalar()) + (c if sign > 0 else -c)
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def _word_sum_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            w = w1 + w2
            v = out.get(w, Scalar()) + c1 * c2
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def error(self, message, pos=None):
        raise ParseError(message, self.peek().pos if pos is None else pos, self.text)

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op: str) -> Token | None:
        tok = self.peek()
        if tok.kind == "op" and tok.value == op:
            self.i += 1
            return tok
        return None

    def expect(self, op: str) -> Token:
        tok = self.accept(op)
        if tok is None:
            found = self.peek().value or "end of input"
            self.error(f"expected {op!r}, found {found!r}")
        return tok

    # grammar

    def parse(self) -> Value:
        if self.peek().kind == "end":
            self.error("empty expression")
        v = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().value!r}")
        return v

    def expr(self) -> Value:
        start = self.peek().pos
        sign = 1
        if self.accept("-"):
            sign = -1
        elif self.accept("+"):
            pass
        v = self.term()
        if sign < 0:
            v = self.negate(v)
        while True:
            tok = self.accept("+") or self.accept("-")
            if tok is None:
                break
            w = self.term()
            v = self.add(v, w if tok.value == "+" else self.negate(w), tok.pos)
        v.pos = start
        return v

    def term(self) -> Value:
        v = self.factor()
        while True:
            tok = self.accept("*") or self.accept("/")
            if tok is None:
                return v
            w = self.factor()
            if tok.value == "*":
                v = self.mul(v, w, tok.pos)
            else:
                v = self.div(v, w, tok.pos)

    def factor(self) -> Value:
        v = self.atom()
        tok = self.accept("^")
        if tok is None:
            return v
        e = self.exponent()
        return self.power(v, e, tok.pos)

    def exponent(self) -> Fraction:
        if self.accept("("):
            e = self.signed_int()
            if self.accept("/"):
                den = self.take()
                if den.kind != "num" or int(den.value) == 0:
                    self.error("expected a nonzero integer denominator", den.pos)
                e = Fraction(e, int(den.value))
            self.expect(")")
            return Fraction(e)
        return Fraction(self.signed_int())

    def signed_int(self) -> int:
        sign = -1 if self.accept("-") else 1
        if sign > 0:
            self.accept("+")
        tok = self.take()
        if tok.kind != "num":
            self.error("expected an integer exponent", tok.pos)
        return sign * int(tok.value)

    def atom(self) -> Value:
        tok = self.take()
        if tok.kind == "num":
            return Value("scalar", Scalar.const(int(tok.value)), tok.pos)
        if tok.kind == "op" and tok.value == "(":
            v = self.expr()
            self.expect(")")
            v.pos = tok.pos
            return v
        if tok.kind == "name":
            name = tok.value
            if name in SCALAR_ATOMS:
                return Value("scalar", SCALAR_ATOMS[name], tok.pos)
            if name in ALGEBRA_ATOMS:
                return Value("algebra", {(name,): ONE}, tok.pos)
            if name == "G":
                return self.grouplike(tok)
            if name in DUAL_ATOMS:
                return Value("dual", FunctionalElement.word(letter(name)), tok.pos)
            self.error(f"unknown symbol {name!r}", tok.pos)
        if tok.kind == "end":
            self.error("unexpected end of input", tok.pos)
        self.error(f"unexpected {tok.value!r}", tok.pos)

    def grouplike(self, tok: Token) -> Value:
        self.expect("[")
        args = []
        for i in range(3):
            v = self.expr()
            if v.kind != "scalar" or not v.data.is_monomial():
                self.error("grouplike arguments must be Laurent monomials in r, s", v.pos)
            args.append(v.data)
            if i < 2:
                self.expect(";")
        self.expect("]")
        return Value("dual", FunctionalElement.word(grouplike(*args)), tok.pos)

    # arithmetic on values

    def check_mix(self, x: Value, y: Value, pos: int):
        kinds = {x.kind, y.kind}
        if kinds == {"algebra", "dual"}:
            self.error("cannot mix algebra and dual atoms in one expression", pos)

    def lift(self, v: Value, kind: str):
        if v.kind == kind:
            return v.data
        c = v.data
        if kind == "algebra":
            return {(): c} if c else {}
        return FunctionalElement({(): c})

    def add(self, x: Value, y: Value, pos: int) -> Value:
        self.check_mix(x, y, pos)
        kind = "scalar" if x.kind == y.kind == "scalar" else (x.kind if x.kind != "scalar" else y.kind)
        if kind == "scalar":
            return Value(kind, x.data + y.data, x.pos)
        if kind == "algebra":
            return Value(kind, _word_sum_add(self.lift(x, kind), self.lift(y, kind)), x.pos)
        return Value(kind, self.lift(x, kind) + self.lift(y, kind), x.pos)

    def negate(self, v: Value) -> Value:
        if v.kind == "scalar":
            return Value("scalar", -v.data, v.pos)
        if v.kind == "algebra":
            return Value("algebra", {w: -c for w, c in v.data.items()}, v.pos)
        return Value("dual", -v.data, v.pos)

    def mul(self, x: Value, y: Value, pos: int) -> Value:
        self.check_mix(x, y, pos)
        if x.kind == y.kind == "scalar":
            return Value("scalar", x.data * y.data, x.pos)
        kind = x.kind if x.kind != "scalar" else y.kind
        if kind == "algebra":
            return Value(kind, _word_sum_mul(self.lift(x, kind), self.lift(y, kind)), x.pos)
        return Value(kind, self.lift(x, kind) * self.lift(y, kind), x.pos)

    def div(self, x: Value, y: Value, pos: int) -> Value:
        if y.kind != "scalar" or not y.data.is_monomial():
            self.error("can only divide by a nonzero scalar monomial", pos)
        inv = Value("scalar", y.data.inverse(), y.pos)
        return self.mul(x, inv, pos)

    def power(self, v: Value, e: Fraction, pos: int) -> Value:
        if v.kind == "scalar":
            try:
                if e.denominator == 1:
                    if e < 0 and not v.data.is_monomial():
                        raise ScalarError("negative power of a non-monomial")
                    return Value("scalar", v.data ** int(e), v.pos)
                if e.denominator == 2 and v.data.is_monomial():
                    return Value("scalar", v.data.monomial_power(e), v.pos)
                raise ScalarError(f"exponent {e} needs a monomial base and a half-integer")
            except ScalarError as exc:
                self.error(str(exc), pos)
        if e.denominator != 1:
            self.error("fractional exponent on a non-scalar", pos)
        n = int(e)
        if v.kind == "algebra":
            if n < 0:
                word = _single_letter(v.data)
                if word not in INVERTIBLE:
                    self.error("only f and Det have negative powers", pos)
                return Value("algebra", {(INVERTIBLE[word],) * -n: ONE}, v.pos)
            out = {(): ONE}
            for _ in range(n):
                out = _word_sum_mul(out, v.data)
            return Value("algebra", out, v.pos)
        if n < 0:
            inv = _single_grouplike_inverse(v.data)
            if inv is None:
                self.error("only grouplikes have negative powers", pos)
            base, n = inv, -n
        else:
            base = v.data
        out = FunctionalElement({(): 1})
        for _ in range(n):
            out = out * base
        return Value("dual", out, v.pos)


def _single_letter(words: dict):
    if len(words) == 1:
        (w, c), = words.items()
        if len(w) == 1 and c == ONE:
            return w[0]
    return None


def _single_grouplike_inverse(phi: FunctionalElement):
    t = phi.terms
    if len(t) == 1:
        (w, c), = t.items()
        if len(w) == 1 and w[0].kind == "G" and c == ONE:
            return FunctionalElement.word(w[0].inverse())
    return None


@dataclass(frozen=True)
class Parsed:
    """A parsed expression: ``kind`` is "scalar", "algebra" or "dual"."""

    kind: str
    value: object

    def words(self) -> list[GeneratorWord]:
        """Free generator words (algebra and scalar inputs only)."""
        if self.kind == "dual":
            raise ParseError("expected an algebra expression, got a dual one", 0)
        if self.kind == "scalar":
            return [GeneratorWord((), self.value)] if self.value else []
        return [GeneratorWord(w, c) for w, c in self.value.items()]

    def element(self) -> AlgebraElement:
        return normal_form(self.words())

    def functional(self) -> FunctionalElement:
        if self.kind == "algebra":
            raise ParseError("expected a dual expression, got an algebra one", 0)
        if self.kind == "scalar":
            return FunctionalElement({(): self.value})
        return self.value

    def scalar(self) -> Scalar:
        if self.kind != "scalar":
            raise ParseError(f"expected a scalar, got an {self.kind} expression", 0)
        return self.value


def parse_expression(text: str) -> Parsed:
    v = _Parser(text).parse()
    return Parsed(v.kind, v.data)


def parse_algebra(text: str) -> AlgebraElement:
    return parse_expression(text).element()


def parse_functional(text: str) -> FunctionalElement:
    return parse_expression(text).functional()


def parse_scalar(text: str) -> Scalar:
    return parse_expression(text).scalar()
