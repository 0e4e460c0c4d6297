"""Rational wire format and exact complex arithmetic."""

from fractions import Fraction

import pytest

from qk_eigenlab.scalars import ComplexRational, ParseError, format_rational, parse_rational


def test_parse_rational_basic():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational("  10/4 ") == Fraction(5, 2)


@pytest.mark.parametrize("bad", ["1//2", "0.5", "1/2/3", "a", "", "1e3", "1/-2", "1/0"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_round_trip_idempotent():
    for s in ["3/4", "-10/4", "0", "17", "-0"]:
        once = format_rational(parse_rational(s))
        assert format_rational(parse_rational(once)) == once


def test_complex_arithmetic_exact():
    z = ComplexRational.of(Fraction(1, 3), Fraction(-2, 7))
    w = ComplexRational.of(Fraction(5, 2), Fraction(1, 2))
    assert (z + w) - w == z
    assert z * w == w * z
    # (a/b + c/d) * (b*d) == a*d + c*b, the definition of exactness
    assert (z + w) * 42 == z * 42 + w * 42


def test_conjugation_involution_and_abs2():
    z = ComplexRational.of(Fraction(3, 5), Fraction(4, 5))
    assert z.conjugate().conjugate() == z
    assert z.abs2() == Fraction(1)
    assert (z * z.conjugate()).re == z.abs2()
    assert ComplexRational.of(-2, 3).abs2() == Fraction(13)


def test_powers():
    z = ComplexRational.of(0, 1)
    assert z**2 == ComplexRational.of(-1, 0)
    assert z**0 == ComplexRational.of(1, 0)
    assert (z**5) == z


def test_str_forms():
    assert str(ComplexRational.of(-1, 0)) == "-1"
    assert str(ComplexRational.of(Fraction(3, 4), Fraction(-1, 2))) == "3/4 - 1/2*i"
    assert str(ComplexRational.of(0, 1)) == "i"
    assert str(ComplexRational.of(0, 0)) == "0"


def test_parse_complex_pair():
    z = ComplexRational.parse("1/2,-1/3")
    assert z.re == Fraction(1, 2) and z.im == Fraction(-1, 3)
    with pytest.raises(ParseError):
        ComplexRational.parse("1/2")
