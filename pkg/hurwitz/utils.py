############################################
# imports
############################################

from fractions import Fraction
from math import gcd

import numpy as np
from numba import njit, prange

############################################
# functions
############################################


def to_fraction(value):
    """
    Convert a value into an exact rational number.
    Integers, fractions and strings such as ``"3/4"`` or ``"-2"`` are accepted. Floating point numbers are
    rejected since they would silently introduce binary rounding into exact computations.

    :param value: Value to convert.
    :type value: int or fractions.Fraction or str
    :raises ValueError: Raised if `value` is a float or a string that does not describe a rational number.
    :return: Exact rational number in reduced form.
    :rtype: fractions.Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float, np.floating)):
        raise ValueError(f"Cannot use {value!r} of type {type(value).__name__} as an exact scalar, pass an int, str or Fraction.")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Cannot parse {value!r} as a rational number.")
    raise ValueError(f"Cannot use {value!r} of type {type(value).__name__} as an exact scalar.")


def format_rational(value):
    """Render a rational number as ``"p"`` or ``"p/q"``.

    :param value: Rational number.
    :type value: fractions.Fraction or int
    :return: Lossless string representation.
    :rtype: str
    """
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text, length=None):
    """Parse a comma separated list of rationals, e.g. ``"1,-1/2,0"``.

    :param text: Comma separated rationals.
    :type text: str
    :param length: Expected number of entries, not checked if None, defaults to None.
    :type length: int, optional
    :raises ValueError: Raised if an entry is not rational or the number of entries is wrong.
    :return: Parsed values.
    :rtype: list
    """
    values = [to_fraction(entry) for entry in text.split(",")]
    if length is not None and len(values) != length:
        raise ValueError(f"Expected {length} comma separated values but got {len(values)} in {text!r}.")
    return values


def integer_coefficients(values):
    """Write rationals over their least common denominator.

    :param values: Exact rationals.
    :type values: iterable
    :return: Integer numerators and the common denominator.
    :rtype: list, int
    """
    values = list(values)
    denominator = 1
    for value in values:
        denominator = denominator * value.denominator // gcd(denominator, value.denominator)
    return [value.numerator * (denominator // value.denominator) for value in values], denominator


def seeded_generator(seed, *keys):
    """
    Random number generator for one independent unit of work, e.g. one proposition in one dimension.
    The same seed and keys always give the same stream, regardless of how work is distributed over jobs.

    :param seed: User seed, may be negative.
    :type seed: int
    :param keys: Non-negative integers identifying the unit of work.
    :type keys: int
    :return: Seeded generator.
    :rtype: numpy.random.Generator
    """
    return np.random.default_rng([abs(int(seed)), int(seed < 0), *[int(key) for key in keys]])


def random_rationals(rng, size):
    """
    Draw small random rationals with numerators in [-9, 9] and denominators in [1, 9].

    :param rng: Seeded random number generator.
    :type rng: numpy.random.Generator
    :param size: Number of values to draw.
    :type size: int
    :return: Object array of exact rationals.
    :rtype: numpy.ndarray
    """
    numerators = rng.integers(-9, 10, size=size)
    denominators = rng.integers(1, 10, size=size)
    values = np.empty(size, dtype=object)
    for i in range(size):
        values[i] = Fraction(int(numerators[i]), int(denominators[i]))
    return values


def two_term_factors(dim):
    """
    Enumerate the factors e_a + sign * e_b over distinct imaginary indices a < b.

    :param dim: Dimension of the algebra.
    :type dim: int
    :return: Integer array with one row (a, b, sign) per factor.
    :rtype: numpy.ndarray
    """
    rows = [(a, b, sign) for a in range(1, dim) for b in range(a + 1, dim) for sign in (1, -1)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), 3)


@njit(parallel=True)
def _two_term_zero_mask(signs, indices, factors):
    """Flag every product of two-term factors that vanishes in a signed-permutation table.
    Rows are spread over threads with numba since the number of factor pairs grows with dim^4.

    :param signs: Signs of the basis products, shape (dim, dim).
    :type signs: numpy.ndarray
    :param indices: Basis indices of the basis products, shape (dim, dim).
    :type indices: numpy.ndarray
    :param factors: Rows (a, b, sign) describing the factors e_a + sign * e_b.
    :type factors: numpy.ndarray
    :return: Boolean matrix, entry (i, j) is True if factor i times factor j is zero.
    :rtype: numpy.ndarray
    """
    n = factors.shape[0]
    dim = signs.shape[0]
    mask = np.zeros((n, n), dtype=np.bool_)
    for i in prange(n):
        a = factors[i, 0]
        b = factors[i, 1]
        sa = factors[i, 2]
        for j in range(n):
            c = factors[j, 0]
            d = factors[j, 1]
            sc = factors[j, 2]
            product = np.zeros(dim, dtype=np.int64)
            product[indices[a, c]] += signs[a, c]
            product[indices[a, d]] += sc * signs[a, d]
            product[indices[b, c]] += sa * signs[b, c]
            product[indices[b, d]] += sa * sc * signs[b, d]
            mask[i, j] = not np.any(product)
    return mask


def two_term_zero_products(signs, indices):
    """Find all vanishing products (e_a ± e_b)(e_c ± e_d) of a signed-permutation table.

    :param signs: Signs of the basis products, shape (dim, dim).
    :type signs: numpy.ndarray
    :param indices: Basis indices of the basis products, shape (dim, dim).
    :type indices: numpy.ndarray
    :return: Factor rows of the left factors, factor rows of the right factors and the number of products checked.
    :rtype: numpy.ndarray, numpy.ndarray, int
    """
    factors = two_term_factors(signs.shape[0])
    if len(factors) == 0:
        empty = np.zeros((0, 3), dtype=np.int64)
        return empty, empty, 0

    mask = _two_term_zero_mask(
        np.ascontiguousarray(signs, dtype=np.int64), np.ascontiguousarray(indices, dtype=np.int64), factors
    )
    left, right = np.nonzero(mask)
    return factors[left], factors[right], len(factors) ** 2
