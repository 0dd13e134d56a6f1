import pytest
from conftest import elements, functionals, scalars
from hypothesis import given

from grs.algebra import GeneratorWord, generator
from grs.dual import FunctionalElement, grouplike, letter
from grs.parser import (
    ParseError,
    parse_algebra,
    parse_expression,
    parse_functional,
    parse_scalar,
)
from grs.scalars import LAMBDA, R, S


def test_algebra_word():
    p = parse_expression("d*a")
    assert p.kind == "algebra"
    assert p.words() == [GeneratorWord(("d", "a"))]


def test_dual_word():
    p = parse_expression("B*C")
    assert p.kind == "dual"
    assert p.functional() == FunctionalElement.word(letter("B"), letter("C"))


def test_inverse_det_letter():
    assert parse_expression("a^2*Det^-1").words() == [GeneratorWord(("a", "a", "Det^-1"))]


def test_scalar_coefficients_and_sums():
    x = parse_algebra("(r - r^-1) * b*c + 2 * a")
    assert x == (generator("b") * generator("c")).scale(LAMBDA) + generator("a").scale(2)
    assert parse_algebra("-f^-2") == (generator("f^-1") ** 2).scale(-1)


def test_scalar_literals():
    assert parse_scalar("r^2 - 3/2") == R**2 - parse_scalar("3/2")
    assert parse_scalar("-3/2 * r * s^(1/2)") * parse_scalar("s^(1/2)") == parse_scalar("-3/2 * r * s")
    assert parse_scalar("1 + r^-2") == 1 + R**-2


def test_grouplike_atom():
    g = parse_functional("G[r;r^-1;s]")
    assert g == FunctionalElement.word(grouplike(R, R.inverse(), S))
    assert parse_functional("G[r;r^-1;s]^-1") == FunctionalElement.word(grouplike(R.inverse(), R, S.inverse()))


@pytest.mark.parametrize("text,pos", [("a**b", 2), ("a + ", 4), ("a*x", 2), ("(a*b", 4), ("a^q", 2)])
def test_errors_carry_offsets(text, pos):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.pos == pos
    assert "^" in info.value.pointer()


@pytest.mark.parametrize("text", ["a*B", "B + d", "G[r;1;1]*f"])
def test_mixing_algebra_and_dual_rejected(text):
    with pytest.raises(ParseError):
        parse_expression(text)


def test_kind_mismatch():
    with pytest.raises(ParseError):
        parse_expression("B").element()
    with pytest.raises(ParseError):
        parse_expression("a").functional()


@given(elements())
def test_algebra_round_trip(x):
    assert parse_algebra(str(x)) == x


@given(functionals())
def test_functional_round_trip(phi):
    assert parse_functional(str(phi)) == phi


@given(scalars())
def test_scalar_round_trip(x):
    assert parse_scalar(str(x)) == x
