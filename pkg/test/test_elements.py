############################################
# imports
############################################

import pickle
from fractions import Fraction

import pytest

from hurwitz.elements import *
from hurwitz.utils import random_rationals, seeded_generator


############################################
# Tests
############################################


def test_algebra_element_construction():
    x = AlgebraElement([1, "1/2", Fraction(-3, 4), 0])

    assert x.dim == 4, "error: wrong dimension"
    assert x[1] == Fraction(1, 2), "error: string coefficients should be parsed exactly"
    assert AlgebraElement.basis(4, 2) == AlgebraElement([0, 0, 1, 0]), "error: wrong basis element"
    assert AlgebraElement.scalar(2, 5) == AlgebraElement([5, 0]), "error: wrong scalar embedding"
    assert AlgebraElement.zero(8).is_zero(), "error: zero element should be zero"

    with pytest.raises(ValueError):
        AlgebraElement([1, 2, 3])
    with pytest.raises(ValueError):
        AlgebraElement([0.5, 0])
    with pytest.raises(ValueError):
        AlgebraElement.basis(4, 4)


def test_algebra_element_is_immutable():
    x = AlgebraElement([1, 2])

    with pytest.raises(AttributeError):
        x.dim = 4
    with pytest.raises(ValueError):
        x.coeffs[0] = 3

    assert pickle.loads(pickle.dumps(x)) == x, "error: elements should survive pickling"


def test_parts():
    x = AlgebraElement([1, 2, 3, 4])

    assert x.real_part() == AlgebraElement([1, 0, 0, 0]), "error: wrong real part"
    assert x.imaginary_part() == AlgebraElement([0, 2, 3, 4]), "error: wrong imaginary part"
    assert x.real_part() + x.imaginary_part() == x, "error: parts should add up to the element"


def test_vector_space_operations():
    # test data
    x = AlgebraElement([1, 2])
    y = AlgebraElement([3, "-1/2"])

    assert add(x, y) == AlgebraElement([4, "3/2"]), "error: wrong sum"
    assert x - y == AlgebraElement([-2, "5/2"]), "error: wrong difference"
    assert scale("1/2", x) == AlgebraElement(["1/2", 1]), "error: wrong scalar multiple"
    assert 2 * x == x * 2 == x + x, "error: scalar multiplication should be repeated addition"
    assert -x == AlgebraElement([-1, -2]), "error: wrong negation"

    with pytest.raises(ValueError):
        add(x, AlgebraElement([1, 2, 3, 4]))


def test_inner_and_norm():
    x = AlgebraElement([1, 2, 3, 4])

    assert norm_sq(x) == 30, "error: wrong squared norm"
    assert inner(x, AlgebraElement.basis(4, 3)) == 4, "error: inner product with a basis element is a coefficient"
    assert norm_sq(AlgebraElement(["1/2", "1/2"])) == Fraction(1, 2), "error: squared norm should be exact"


def test_equality_statement_holds():
    x = AlgebraElement([1, 2, 0, 1])

    assert equality_statement_holds(x, x), "error: statement should hold for x = y"
    assert not equality_statement_holds(x, 2 * x), "error: norms differ, statement should fail"
    assert not equality_statement_holds(x, -x), "error: opposite vectors violate the triangle equality"
    assert not equality_statement_holds(
        AlgebraElement([1, 0]), AlgebraElement([0, 1])
    ), "error: orthogonal unit vectors violate the triangle equality"


def test_orthogonal():
    assert orthogonal(AlgebraElement([1, 1]), AlgebraElement([1, -1])), "error: vectors should be orthogonal"
    assert not orthogonal(AlgebraElement([1, 1]), AlgebraElement([1, 0])), "error: vectors are not orthogonal"

    # unit vectors are orthogonal iff ||x + y||^2 = 2
    u, v = AlgebraElement.basis(4, 1), AlgebraElement.basis(4, 2)
    assert norm_sq(u + v) == 2, "error: orthogonality statement violated"


def test_gram_schmidt():
    # test data
    vectors = [
        AlgebraElement([1, 1, 0, 0]),
        AlgebraElement([1, 0, 1, 0]),
        AlgebraElement([2, 1, 1, 0]),
        AlgebraElement([0, 0, 0, 3]),
    ]

    basis = gram_schmidt(vectors)

    assert len(basis) == 3, "error: the third vector is in the span of the first two and should be dropped"
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            assert inner(basis[i], basis[j]) == 0, "error: Gram-Schmidt output should be orthogonal"

    x = orthogonalize(AlgebraElement([3, 4, 5, 6]), basis)
    assert all(inner(x, b) == 0 for b in basis), "error: orthogonalized vector should be orthogonal to the basis"


def test_random_element():
    # test data
    rng = seeded_generator(3, 8)

    for _ in range(50):
        x = random_element(rng, 8, imaginary=True)
        y = random_element(rng, 8, imaginary=True, against=(x,))

        assert not x.is_zero() and not y.is_zero(), "error: random elements should be non-zero"
        assert x[0] == 0 and y[0] == 0, "error: imaginary elements should have zero real part"
        assert inner(x, y) == 0, "error: second element should be orthogonal to the first"

    with pytest.raises(ValueError):
        random_element(rng, 1, imaginary=True)


def test_parallelogram_law():
    # test data
    rng = seeded_generator(5, 1)

    for dim in SUPPORTED_DIMENSIONS:
        for _ in range(1000):
            x, y = random_element(rng, dim), random_element(rng, dim)
            assert norm_sq(x + y) + norm_sq(x - y) == 2 * norm_sq(x) + 2 * norm_sq(y), (
                f"error: parallelogram law violated in dim {dim}"
            )


def test_equality_statement_agrees_with_coordinatewise_equality():
    # test data
    rng = seeded_generator(6, 1)

    for dim in SUPPORTED_DIMENSIONS:
        for trial in range(1000):
            x = random_element(rng, dim)
            if trial % 3 == 0:
                y = AlgebraElement(list(x.coeffs))
            elif trial % 3 == 1:
                y = scale(2, x)
            else:
                y = random_element(rng, dim)
            assert equality_statement_holds(x, y) == (list(x.coeffs) == list(y.coeffs)), (
                f"error: equality statement disagrees with coordinatewise equality in dim {dim}"
            )


def _unit_element(rng, dim, support):
    # inverse stereographic projection of a random rational point onto the unit sphere of the support
    t = random_rationals(rng, len(support) - 1)
    s = sum((value * value for value in t), Fraction(0))
    point = [(s - 1) / (s + 1)] + [2 * value / (s + 1) for value in t]
    coeffs = [Fraction(0)] * dim
    for index, value in zip(support, point):
        coeffs[index] = value
    return AlgebraElement(coeffs)


def _reflect(x, n):
    return x - scale(2 * inner(x, n) / norm_sq(n), n)


def test_orthogonality_statement_for_unit_elements():
    # test data
    rng = seeded_generator(7, 1)

    for dim in (2, 4, 8, 16):
        half = dim // 2
        for trial in range(500):
            if trial % 2 == 0:
                # disjoint supports give an orthogonal pair
                x = _unit_element(rng, dim, list(range(half)))
                y = _unit_element(rng, dim, list(range(half, dim)))
            else:
                x = _unit_element(rng, dim, list(range(dim)))
                y = _unit_element(rng, dim, list(range(dim)))
            n = random_element(rng, dim)
            x, y = _reflect(x, n), _reflect(y, n)

            assert norm_sq(x) == 1 and norm_sq(y) == 1, "error: reflected elements should have norm 1"
            assert orthogonal(x, y) == (norm_sq(x + y) == 2), (
                f"error: inner product and norm of the sum disagree in dim {dim}"
            )
            if trial % 2 == 0:
                assert orthogonal(x, y), "error: reflection should preserve orthogonality"
