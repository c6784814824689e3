from fractions import Fraction

import pytest

from blockmod.exactnum import (RationalSyntaxError, format_rational,
                               parse_rational, rat, rat_inv, rat_pow)
from blockmod.prng import SplitMix64


def test_textbook_arithmetic():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert Fraction(-2, 3) * Fraction(3, 2) == -1
    assert -Fraction(4, 6) == Fraction(-2, 3)


def test_inverse():
    assert rat_inv(Fraction(3, 7)) == Fraction(7, 3)
    with pytest.raises(ZeroDivisionError, match="zero has no inverse"):
        rat_inv(Fraction(0))


def test_powers():
    assert rat_pow(Fraction(2, 3), -2) == Fraction(9, 4)
    assert rat_pow(Fraction(5), 0) == 1
    assert rat_pow(Fraction(-1, 2), 3) == Fraction(-1, 8)
    with pytest.raises(ZeroDivisionError):
        rat_pow(Fraction(0), -1)


def test_canonical_form():
    # reduced, positive denominator, zero as 0/1
    value = Fraction(2, -4)
    assert value.numerator == -1 and value.denominator == 2
    zero = Fraction(0, 5)
    assert zero.numerator == 0 and zero.denominator == 1
    assert Fraction(2, 4) == Fraction(1, 2)


def test_parse_format_round_trip():
    for text in ["0", "5", "-3", "5/6", "-22/7", "+4/6"]:
        value = parse_rational(text)
        assert parse_rational(format_rational(value)) == value
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(-7)) == "-7"
    assert rat("5/7") == Fraction(5, 7)
    assert rat(4) == 4


def test_parse_errors():
    for bad in ["", "a", "1/2/3", "1.5", "2/-3"]:
        with pytest.raises(RationalSyntaxError):
            parse_rational(bad)
    with pytest.raises(RationalSyntaxError, match="zero denominator"):
        parse_rational("1/0")


def test_field_axioms_randomized():
    rng = SplitMix64(7)
    for _ in range(200):
        a = rng.fraction()
        b = rng.fraction()
        c = rng.fraction()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        if a != 0:
            assert a * rat_inv(a) == 1
