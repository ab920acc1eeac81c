############################################
# imports
############################################

from fractions import Fraction

import pytest

from hurwitz.algebra import *
from hurwitz.elements import AlgebraElement, norm_sq, random_element
from hurwitz.tables import build_table
from hurwitz.utils import random_rationals, seeded_generator


############################################
# Helpers
############################################


def _rotation_matrix(q):
    # standard map from a (not necessarily normalized) quaternion to a rotation matrix
    a, b, c, d = q.coeffs
    n = a * a + b * b + c * c + d * d
    matrix = [
        [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
        [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
        [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d],
    ]
    return [[entry / n for entry in row] for row in matrix]


def _apply(matrix, v):
    return Vector3(*[sum((entry * value for entry, value in zip(row, v)), Fraction(0)) for row in matrix])


def _random_vector(rng):
    return Vector3(*random_rationals(rng, 3))


############################################
# Tests
############################################


def test_multiply_matches_complex_formula():
    # test data
    rng = seeded_generator(0, 2)
    table = build_table(2)

    for _ in range(100):
        a, b, c, d = random_rationals(rng, 4)
        result = multiply(AlgebraElement([a, b]), AlgebraElement([c, d]), table)
        assert result == AlgebraElement([a * c - b * d, a * d + b * c]), "error: complex product formula violated"


def test_multiply_hamilton_relations():
    table = build_table(4)
    one = AlgebraElement.scalar(4, 1)
    i, j, k = (AlgebraElement.basis(4, index) for index in (1, 2, 3))

    for x in (i, j, k):
        assert multiply(x, x, table) == -one, "error: imaginary basis elements should square to -1"
    assert multiply(multiply(i, j, table), k, table) == -one, "error: ijk should be -1"


def test_multiply_is_bilinear():
    # test data
    rng = seeded_generator(1, 8)
    table = build_table(8)

    for _ in range(50):
        x, x_prime, y = (random_element(rng, 8) for _ in range(3))
        assert multiply(x + x_prime, y, table) == multiply(x, y, table) + multiply(
            x_prime, y, table
        ), "error: product should be additive in the left factor"
        assert multiply(y, x + x_prime, table) == multiply(y, x, table) + multiply(
            y, x_prime, table
        ), "error: product should be additive in the right factor"
        assert multiply(Fraction(3, 7) * x, y, table) == Fraction(3, 7) * multiply(
            x, y, table
        ), "error: product should be homogeneous"


def test_multiply_preserves_norm():
    # test data
    rng = seeded_generator(2, 4)

    for dim in (1, 2, 4, 8):
        table = build_table(dim)
        for _ in range(1000):
            x, y = random_element(rng, dim), random_element(rng, dim)
            assert norm_sq(multiply(x, y, table)) == norm_sq(x) * norm_sq(y), f"error: norm not multiplicative in dim {dim}"


def test_multiply_matches_structure_constants():
    # test data
    rng = seeded_generator(5, 16)

    for dim in (2, 4, 8, 16):
        table = build_table(dim)
        constants = table.structure_constants()
        for _ in range(20):
            x, y = random_element(rng, dim), random_element(rng, dim)
            expected = AlgebraElement(
                [
                    sum(
                        (x[j] * y[k] * int(constants[j, k, m]) for j in range(dim) for k in range(dim)),
                        Fraction(0),
                    )
                    for m in range(dim)
                ]
            )
            assert multiply(x, y, table) == expected, f"error: product disagrees with the structure constants in dim {dim}"


def test_multiply_dimension_mismatch():
    with pytest.raises(ValueError):
        multiply(AlgebraElement([1, 0]), AlgebraElement([1, 0, 0, 0]), build_table(4))
    with pytest.raises(ValueError):
        multiply(AlgebraElement([1, 0]), AlgebraElement([1, 0]), build_table(4))


def test_quarter_turn_in_the_plane():
    table = build_table(2)
    u = AlgebraElement.basis(2, 1)

    assert multiply(u, AlgebraElement([3, 5]), table) == AlgebraElement([-5, 3]), "error: u should rotate (a, b) to (-b, a)"


def test_commutator_and_associator():
    table4, table8 = build_table(4), build_table(8)
    e = [AlgebraElement.basis(8, index) for index in range(8)]

    assert commutator(
        AlgebraElement.basis(4, 1), AlgebraElement.basis(4, 2), table4
    ) == 2 * AlgebraElement.basis(4, 3), "error: uv - vu should be 2uv"
    assert associator(e[1], e[2], e[4], table8) == 2 * e[7], "error: (uv)w - u(vw) should be 2(uv)w"
    assert associator(e[1], e[2], e[3], table8).is_zero(), "error: quaternion units associate"


def test_conjugate():
    table = build_table(4)
    x = AlgebraElement([1, 2, 3, 4])

    assert conjugate(AlgebraElement([1])) == AlgebraElement([1]), "error: real numbers are self conjugate"
    assert conjugate(AlgebraElement.basis(4, 1)) == -AlgebraElement.basis(4, 1), "error: conj(u) should be -u"
    assert multiply(x, conjugate(x), table) == AlgebraElement([30, 0, 0, 0]), "error: x conj(x) should be norm_sq(x)"


def test_inverse():
    # test data
    rng = seeded_generator(3, 8)
    table = build_table(8)
    one = AlgebraElement.scalar(8, 1)

    assert inverse(AlgebraElement([1]), build_table(1)) == AlgebraElement([1]), "error: 1 is its own inverse"
    assert inverse(AlgebraElement([0, 1]), build_table(2)) == AlgebraElement([0, -1]), "error: inverse of i is -i"

    for _ in range(100):
        x = random_element(rng, 8)
        x_inverse = inverse(x, table)
        assert multiply(x, x_inverse, table) == one, "error: x x^-1 should be 1"
        assert multiply(x_inverse, x, table) == one, "error: x^-1 x should be 1"

    with pytest.raises(ValueError):
        inverse(AlgebraElement.zero(8), table)
    with pytest.raises(ValueError):
        inverse(AlgebraElement.basis(16, 1), build_table(16))


def test_vector3():
    v = Vector3(1, "1/2", Fraction(-3))

    assert v.norm_sq() == Fraction(41, 4), "error: wrong squared norm"
    assert Vector3.from_element(v.to_element()) == v, "error: embedding should be invertible"
    assert list(v) == [1, Fraction(1, 2), -3], "error: wrong coordinates"

    with pytest.raises(ValueError):
        Vector3(0.5, 0, 0)
    with pytest.raises(ValueError):
        Vector3.from_element(AlgebraElement([0, 1]))


def test_rotate_examples():
    v = Vector3(1, 2, 3)

    assert rotate(AlgebraElement([1, 0, 0, 0]), v) == v, "error: q = 1 is the identity rotation"
    assert rotate(AlgebraElement([-2, 0, 0, 0]), v) == v, "error: real quaternions are the identity rotation"
    assert rotate(AlgebraElement([0, 1, 0, 0]), Vector3(0, 1, 0)) == Vector3(
        0, -1, 0
    ), "error: q = u rotates by a half turn about the x axis"
    assert rotate(AlgebraElement([1, 1, 0, 0]), Vector3(0, 1, 0)) == Vector3(
        0, 0, 1
    ), "error: q = 1 + u rotates by a quarter turn about the x axis"

    with pytest.raises(ValueError):
        rotate(AlgebraElement.zero(4), v)
    with pytest.raises(ValueError):
        rotate(AlgebraElement([1, 0]), v)


def test_rotate_matches_rotation_matrix():
    # test data
    rng = seeded_generator(4, 4)

    for _ in range(100):
        q = random_element(rng, 4)
        v = _random_vector(rng)
        rotated = rotate(q, v)

        assert rotated == _apply(_rotation_matrix(q), v), "error: rotation disagrees with the matrix oracle"
        assert rotated.norm_sq() == v.norm_sq(), "error: rotation should preserve the norm"


def test_rotate_properties():
    # test data
    rng = seeded_generator(5, 4)

    for _ in range(100):
        q = random_element(rng, 4)
        axis = Vector3.from_element(q)
        v = _random_vector(rng)
        scale = Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 10))) * (-1) ** int(rng.integers(0, 2))

        if axis.norm_sq() != 0:
            assert rotate(q, axis) == axis, "error: rotation should fix its axis"
        assert rotate(scale * q, v) == rotate(q, v), "error: rotation should not depend on the scale of q"
