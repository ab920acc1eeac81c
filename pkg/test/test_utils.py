############################################
# imports
############################################

import pytest

from hurwitz.utils import *
from hurwitz.tables import build_table


############################################
# Tests
############################################


def test_to_fraction():
    assert to_fraction(3) == Fraction(3), "error: integers should convert exactly"
    assert to_fraction("-3/4") == Fraction(-3, 4), "error: rational strings should be parsed"
    assert to_fraction(" 2 ") == Fraction(2), "error: surrounding whitespace should be ignored"
    assert to_fraction(np.int64(5)) == Fraction(5), "error: numpy integers should convert exactly"

    with pytest.raises(ValueError):
        to_fraction(0.5)
    with pytest.raises(ValueError):
        to_fraction(True)
    with pytest.raises(ValueError):
        to_fraction("1/0")
    with pytest.raises(ValueError):
        to_fraction("one half")


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2", "error: integral rationals should print without denominator"
    assert format_rational(Fraction(-3, 6)) == "-1/2", "error: rationals should print reduced as p/q"
    assert format_rational(0) == "0", "error: zero should print as 0"


def test_parse_rational_list():
    values = parse_rational_list("1,-1/2,0")
    assert values == [Fraction(1), Fraction(-1, 2), Fraction(0)], "error: list not parsed"

    with pytest.raises(ValueError):
        parse_rational_list("1,2", length=3)
    with pytest.raises(ValueError):
        parse_rational_list("1,x,2")


def test_seeded_generator():
    first = seeded_generator(7, 4, 1).integers(0, 1000, size=10)
    second = seeded_generator(7, 4, 1).integers(0, 1000, size=10)
    other_task = seeded_generator(7, 4, 2).integers(0, 1000, size=10)
    negative = seeded_generator(-7, 4, 1).integers(0, 1000, size=10)

    assert np.array_equal(first, second), "error: same seed and keys should give the same stream"
    assert not np.array_equal(first, other_task), "error: different keys should give different streams"
    assert not np.array_equal(first, negative), "error: seeds 7 and -7 should give different streams"


def test_random_rationals():
    # test data
    rng = seeded_generator(0, 1)

    values = random_rationals(rng, 500)

    assert values.dtype == object, "error: rationals should be stored in an object array"
    assert all(isinstance(value, Fraction) for value in values), "error: values should be Fractions"
    assert all(-9 <= value <= 9 for value in values), "error: values out of range"
    assert all(value.denominator <= 9 for value in values), "error: denominators out of range"


def test_two_term_factors():
    factors = two_term_factors(4)

    assert factors.shape == (6, 3), "error: dim 4 has 3 index pairs with 2 signs each"
    assert np.all(factors[:, 0] < factors[:, 1]), "error: indices should be ordered a < b"
    assert np.all(factors[:, 0] >= 1), "error: only imaginary indices should be used"
    assert two_term_factors(2).shape == (0, 3), "error: dim 2 has a single imaginary index"


def test_two_term_zero_products():
    table = build_table(4)

    left, right, checked = two_term_zero_products(table.signs, table.indices)

    assert checked == 36, "error: 6 factors give 36 products"
    assert len(left) == len(right) == 0, "error: quaternions have no zero divisors"

    left, right, checked = two_term_zero_products(build_table(1).signs, build_table(1).indices)
    assert checked == 0 and left.shape == (0, 3), "error: dim 1 has no two-term factors"


def test_integer_coefficients():
    numerators, denominator = integer_coefficients([Fraction(1, 2), Fraction(-2, 3), Fraction(5), Fraction(0)])

    assert denominator == 6, "error: wrong common denominator"
    assert numerators == [3, -4, 30, 0], "error: wrong numerators"
    assert integer_coefficients([]) == ([], 1), "error: empty input has denominator 1"
