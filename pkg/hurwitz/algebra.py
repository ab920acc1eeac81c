############################################
# imports
############################################

from dataclasses import dataclass
from fractions import Fraction

from hurwitz.elements import AlgebraElement, norm_sq, scale, subtract
from hurwitz.tables import build_table
from hurwitz.utils import integer_coefficients, to_fraction

############################################
# Multiplication
############################################


def multiply(a, b, t):
    """
    Multiply two elements through a structure table by bilinear expansion over the basis:
    ``ab = sum_{j,k} a_j b_k e_j e_k``.

    :param a: Left factor.
    :type a: AlgebraElement
    :param b: Right factor.
    :type b: AlgebraElement
    :param t: Multiplication table.
    :type t: hurwitz.tables.StructureTable
    :raises ValueError: Raised if the dimensions of `a`, `b` and `t` are not all equal.
    :return: Exact product.
    :rtype: AlgebraElement
    """
    if not a.dim == b.dim == t.dim:
        raise ValueError(
            f"Dimension mismatch: factors of dimension {a.dim} and {b.dim} with a table of dimension {t.dim}."
        )
    # integer numerators over common denominators, one Fraction per output coordinate
    na, da = integer_coefficients(a.coeffs)
    nb, db = integer_coefficients(b.coeffs)
    denominator = da * db
    return AlgebraElement(
        [Fraction(sum(sign * na[j] * nb[k] for j, k, sign in terms), denominator) for terms in t.product_terms]
    )


def commutator(x, y, t):
    """xy - yx"""
    return subtract(multiply(x, y, t), multiply(y, x, t))


def associator(x, y, z, t):
    """(xy)z - x(yz)"""
    return subtract(multiply(multiply(x, y, t), z, t), multiply(x, multiply(y, z, t), t))


############################################
# Conjugation and inversion
############################################


def conjugate(x):
    """Keep the real coordinate and negate all imaginary ones.

    :param x: Element.
    :type x: AlgebraElement
    :return: Conjugate of `x`.
    :rtype: AlgebraElement
    """
    return AlgebraElement([x.coeffs[0]] + [-value for value in x.coeffs[1:]])


def inverse(x, t):
    """
    Two-sided inverse ``conj(x) / norm_sq(x)``.

    Only the tables of dimension 1, 2, 4 and 8 are accepted: the table of dimension 16 has zero divisors, so
    inversion is not available there.

    :param x: Element to invert.
    :type x: AlgebraElement
    :param t: Multiplication table.
    :type t: hurwitz.tables.StructureTable
    :raises ValueError: Raised if `x` is zero, `t` has dimension 16 or the dimensions differ.
    :return: Inverse of `x`.
    :rtype: AlgebraElement
    """
    if t.dim > 8:
        raise ValueError(f"Inverses are not available in the table of dimension {t.dim}, it has zero divisors.")
    if x.dim != t.dim:
        raise ValueError(f"Dimension mismatch: element of dimension {x.dim} with a table of dimension {t.dim}.")
    norm = norm_sq(x)
    if norm == 0:
        raise ValueError("The zero element has no inverse.")
    return scale(1 / norm, conjugate(x))


############################################
# Rotations in 3-dimensional space
############################################


@dataclass(frozen=True)
class Vector3:
    """Exact vector in 3-dimensional space, embedded as the imaginary quaternion (0, x, y, z)."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))

    @classmethod
    def from_element(cls, q):
        if q.dim != 4:
            raise ValueError(f"Only elements of dimension 4 carry a 3-dimensional vector, got dimension {q.dim}.")
        return cls(*q.coeffs[1:])

    def to_element(self):
        return AlgebraElement([0, self.x, self.y, self.z])

    def norm_sq(self):
        return self.x * self.x + self.y * self.y + self.z * self.z

    def __iter__(self):
        return iter((self.x, self.y, self.z))


def rotate(q, v):
    """
    Rotate a vector by the quaternion `q`: the result is the imaginary part of ``q v q^-1``.

    The quaternion does not need to be normalized; scaling q by any non-zero rational gives the same rotation,
    so the computation stays exact.

    :param q: Non-zero quaternion.
    :type q: AlgebraElement
    :param v: Vector to rotate.
    :type v: Vector3
    :raises ValueError: Raised if `q` is zero or not of dimension 4.
    :return: Rotated vector.
    :rtype: Vector3
    """
    if q.dim != 4:
        raise ValueError(f"Rotations need a quaternion of dimension 4 but got dimension {q.dim}.")
    if q.is_zero():
        raise ValueError("The zero quaternion does not define a rotation.")

    table = build_table(4)
    rotated = multiply(multiply(q, v.to_element(), table), inverse(q, table), table)

    assert rotated.coeffs[0] == 0, "error: rotated vector has a non-zero scalar part"
    return Vector3.from_element(rotated)
