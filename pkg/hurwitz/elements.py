############################################
# imports
############################################

from fractions import Fraction

import numpy as np

from hurwitz.utils import integer_coefficients, to_fraction, random_rationals

############################################
# Algebra elements
############################################

SUPPORTED_DIMENSIONS = (1, 2, 4, 8, 16)


class AlgebraElement:
    """
    Element of an algebra over the Euclidean space E^dim, stored as its exact coefficient vector with respect
    to the standard orthonormal basis. Index 0 is the unit coordinate, so ``(a, 0, ..., 0)`` is the real number a.

    Elements are immutable; all arithmetic returns new elements.

    :param coeffs: Coefficients, one per basis element. Entries must be ints, Fractions or rational strings.
    :type coeffs: iterable
    :raises ValueError: Raised if the number of coefficients is not one of 1, 2, 4, 8 or 16.
    """

    __slots__ = ("dim", "coeffs")

    def __init__(self, coeffs):
        values = [to_fraction(value) for value in coeffs]
        if len(values) not in SUPPORTED_DIMENSIONS:
            raise ValueError(
                f"Elements need {', '.join(map(str, SUPPORTED_DIMENSIONS))} coefficients but got {len(values)}."
            )
        array = np.empty(len(values), dtype=object)
        array[:] = values
        array.flags.writeable = False

        object.__setattr__(self, "dim", len(values))
        object.__setattr__(self, "coeffs", array)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    def __reduce__(self):
        return AlgebraElement, (list(self.coeffs),)

    @classmethod
    def zero(cls, dim):
        return cls([0] * dim)

    @classmethod
    def scalar(cls, dim, value):
        """Embed the real number `value` as ``(value, 0, ..., 0)``."""
        return cls([value] + [0] * (dim - 1))

    @classmethod
    def basis(cls, dim, index):
        """Standard basis element e_index of E^dim.

        :param dim: Dimension.
        :type dim: int
        :param index: Basis index in [0, dim).
        :type index: int
        :raises ValueError: Raised if `index` is out of range.
        :return: Basis element.
        :rtype: AlgebraElement
        """
        if not 0 <= index < dim:
            raise ValueError(f"Basis index {index} is out of range for dimension {dim}.")
        coeffs = [0] * dim
        coeffs[index] = 1
        return cls(coeffs)

    def real_part(self):
        return AlgebraElement.scalar(self.dim, self.coeffs[0])

    def imaginary_part(self):
        return AlgebraElement([0] + list(self.coeffs[1:]))

    def is_zero(self):
        return all(value == 0 for value in self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return self.dim

    def __getitem__(self, index):
        return self.coeffs[index]

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return subtract(self, other)

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return NotImplemented
        return scale(other, self)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.dim == other.dim and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return f"AlgebraElement([{', '.join(str(value) for value in self.coeffs)}])"


def _check_same_dimension(a, b):
    if a.dim != b.dim:
        raise ValueError(f"Dimension mismatch: cannot combine elements of dimension {a.dim} and {b.dim}.")


############################################
# Vector space structure
############################################


def add(a, b):
    """Coordinatewise exact sum of two elements.

    :param a: First summand.
    :type a: AlgebraElement
    :param b: Second summand.
    :type b: AlgebraElement
    :raises ValueError: Raised if the dimensions differ.
    :return: a + b
    :rtype: AlgebraElement
    """
    _check_same_dimension(a, b)
    return AlgebraElement(a.coeffs + b.coeffs)


def subtract(a, b):
    _check_same_dimension(a, b)
    return AlgebraElement(a.coeffs - b.coeffs)


def scale(a, x):
    """Multiply every coefficient of `x` by the scalar `a`, exactly.

    :param a: Scalar.
    :type a: int or fractions.Fraction or str
    :param x: Element.
    :type x: AlgebraElement
    :return: a * x
    :rtype: AlgebraElement
    """
    a = to_fraction(a)
    return AlgebraElement([a * value for value in x.coeffs])


def inner(a, b):
    """Euclidean inner product, exact.

    :param a: First element.
    :type a: AlgebraElement
    :param b: Second element.
    :type b: AlgebraElement
    :raises ValueError: Raised if the dimensions differ.
    :return: Sum of the coordinatewise products.
    :rtype: fractions.Fraction
    """
    _check_same_dimension(a, b)
    na, da = integer_coefficients(a.coeffs)
    nb, db = integer_coefficients(b.coeffs)
    return Fraction(sum(x * y for x, y in zip(na, nb)), da * db)


def norm_sq(x):
    """Squared Euclidean norm. The norm itself is generally irrational, its square never is.

    :param x: Element.
    :type x: AlgebraElement
    :return: Sum of squared coefficients, zero only for the zero element.
    :rtype: fractions.Fraction
    """
    return inner(x, x)


def equality_statement_holds(x, y):
    """
    Evaluate the Equality Statement ``||x+y|| = ||x|| + ||y||`` and ``||x|| = ||y||`` in squared form.

    With t = ||x+y||^2 - ||x||^2 - ||y||^2 the norm identity ``||x+y|| = ||x|| + ||y||`` is equivalent to
    ``t >= 0`` and ``t^2 = 4 ||x||^2 ||y||^2``, which only involves rationals. The conditions hold exactly when
    x = y.

    :param x: First element.
    :type x: AlgebraElement
    :param y: Second element.
    :type y: AlgebraElement
    :raises ValueError: Raised if the dimensions differ.
    :return: True if both conditions of the statement hold.
    :rtype: bool
    """
    _check_same_dimension(x, y)
    norm_x, norm_y = norm_sq(x), norm_sq(y)
    t = norm_sq(add(x, y)) - norm_x - norm_y
    triangle_equality = t >= 0 and t * t == 4 * norm_x * norm_y
    return triangle_equality and norm_x == norm_y


def orthogonal(x, y):
    """Orthogonality Statement test: True iff the inner product of `x` and `y` vanishes.

    For elements with norm 1 this is equivalent to ``norm_sq(x + y) == 2``.

    :param x: First element.
    :type x: AlgebraElement
    :param y: Second element.
    :type y: AlgebraElement
    :raises ValueError: Raised if the dimensions differ.
    :return: Whether x and y are orthogonal.
    :rtype: bool
    """
    return inner(x, y) == 0


############################################
# Gram-Schmidt and random draws
############################################


def orthogonalize(x, against):
    """Remove from `x` its components along mutually orthogonal, non-zero vectors (no normalization).

    :param x: Element to orthogonalize.
    :type x: AlgebraElement
    :param against: Mutually orthogonal elements.
    :type against: list
    :return: Element orthogonal to every element of `against`.
    :rtype: AlgebraElement
    """
    for b in against:
        denominator = norm_sq(b)
        if denominator != 0:
            x = subtract(x, scale(inner(x, b) / denominator, b))
    return x


def gram_schmidt(vectors):
    """Exact Gram-Schmidt over the rationals without normalization. Vectors in the span of their
    predecessors are dropped.

    :param vectors: Elements of equal dimension.
    :type vectors: list
    :return: Mutually orthogonal, non-zero elements spanning the same space.
    :rtype: list
    """
    basis = []
    for vector in vectors:
        vector = orthogonalize(vector, basis)
        if not vector.is_zero():
            basis.append(vector)
    return basis


def random_element(rng, dim, imaginary=False, against=(), max_attempts=100):
    """
    Draw a non-zero random element with small rational coordinates.

    :param rng: Seeded random number generator.
    :type rng: numpy.random.Generator
    :param dim: Dimension.
    :type dim: int
    :param imaginary: Draw from the orthogonal complement of the reals, defaults to False.
    :type imaginary: bool, optional
    :param against: Mutually orthogonal elements the draw is made orthogonal to, defaults to ().
    :type against: tuple, optional
    :param max_attempts: Number of draws before giving up, defaults to 100.
    :type max_attempts: int, optional
    :raises ValueError: Raised if no non-zero element satisfies the constraints, i.e. they leave no room.
    :return: Random element.
    :rtype: AlgebraElement
    """
    for _ in range(max_attempts):
        coeffs = random_rationals(rng, dim)
        if imaginary:
            coeffs[0] = Fraction(0)
        x = orthogonalize(AlgebraElement(coeffs), against)
        if not x.is_zero():
            return x
    raise ValueError(
        f"Could not draw a non-zero element of dimension {dim} orthogonal to {len(against)} given elements."
    )
