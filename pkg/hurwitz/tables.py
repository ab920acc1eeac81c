############################################
# imports
############################################

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
import pandas as pd

from hurwitz.elements import AlgebraElement, SUPPORTED_DIMENSIONS

############################################
# Signed basis references
############################################

# generator adjoined when doubling to the given dimension
GENERATORS = {2: "u", 4: "v", 8: "w", 16: "s"}

RULES = {
    "R0": "unit: 1x = x1 = x",
    "R1": "imaginary squares: e_k e_k = -1",
    "R2": "lower level: product inherited from the half-size table",
    "R3": "generator naming: pg = (pg), gp = -(pg)",
    "R4": "anti-associativity: p(qg) = -(pq)g, (qg)p = (pq)g",
    "R5": "cross products: (pg)(qg) = -pq",
    "R6": "generator cancellation: g(qg) = q, (qg)g = -q, p(pg) = -g, (pg)p = g",
}


@dataclass(frozen=True)
class SignedBasisRef:
    """Product of two basis elements: ``sign * e_index``."""

    sign: int
    index: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"Sign of a basis product must be +1 or -1 but is {self.sign}.")
        if self.index < 0:
            raise ValueError(f"Basis index must be non-negative but is {self.index}.")

    def __neg__(self):
        return SignedBasisRef(-self.sign, self.index)


############################################
# Structure tables
############################################


class StructureTable:
    """
    Multiplication table of a bilinear product on E^dim whose basis products are signed basis elements.

    The table is stored as two integer matrices, ``signs[j, k]`` and ``indices[j, k]``, such that
    ``e_j e_k = signs[j, k] * e_{indices[j, k]}``, together with the basis labels and the name of the rule that
    produced each entry. Tables are immutable.

    :param dim: Dimension of the algebra.
    :type dim: int
    :param signs: Signs of the basis products, shape (dim, dim).
    :type signs: numpy.ndarray
    :param indices: Basis indices of the basis products, shape (dim, dim).
    :type indices: numpy.ndarray
    :param labels: Human readable basis names.
    :type labels: list
    :param provenance: Rule tag of each entry, shape (dim, dim).
    :type provenance: numpy.ndarray
    :raises ValueError: Raised if the shapes do not match `dim`.
    """

    def __init__(self, dim, signs, indices, labels, provenance):
        signs = np.array(signs, dtype=np.int64)
        indices = np.array(indices, dtype=np.int64)
        provenance = np.array(provenance, dtype=object)
        if signs.shape != (dim, dim) or indices.shape != (dim, dim) or provenance.shape != (dim, dim):
            raise ValueError(f"Structure table of dimension {dim} needs {dim}x{dim} entries.")
        if len(labels) != dim:
            raise ValueError(f"Structure table of dimension {dim} needs {dim} labels but got {len(labels)}.")
        for array in (signs, indices, provenance):
            array.flags.writeable = False

        self.dim = dim
        self.signs = signs
        self.indices = indices
        self.labels = tuple(labels)
        self.provenance = provenance

    def entry(self, j, k):
        return SignedBasisRef(int(self.signs[j, k]), int(self.indices[j, k]))

    def rule(self, j, k):
        return self.provenance[j, k]

    def signed_label(self, ref):
        """Label of a signed basis reference, e.g. ``"-uv"``."""
        return ("-" if ref.sign < 0 else "") + self.labels[ref.index]

    @cached_property
    def product_terms(self):
        """For every basis index m, the triples (j, k, sign) with ``e_j e_k = sign * e_m``."""
        terms = [[] for _ in range(self.dim)]
        for j in range(self.dim):
            for k in range(self.dim):
                terms[int(self.indices[j, k])].append((j, k, int(self.signs[j, k])))
        return tuple(tuple(column) for column in terms)

    def structure_constants(self):
        """
        Structure constants c[j, k, m], the coefficient of e_m in e_j e_k.

        :return: Integer tensor of shape (dim, dim, dim).
        :rtype: numpy.ndarray
        """
        constants = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        j, k = np.indices((self.dim, self.dim))
        constants[j, k, self.indices] = self.signs
        return constants

    def restrict(self, dim):
        """Restrict the table to the first `dim` basis elements (the embedded lower-level algebra).

        :param dim: Dimension of the restriction, must be supported and not larger than the table.
        :type dim: int
        :raises ValueError: Raised if `dim` is not supported or the block is not closed under multiplication.
        :return: Restricted table.
        :rtype: StructureTable
        """
        if dim not in SUPPORTED_DIMENSIONS or dim > self.dim:
            raise ValueError(f"Cannot restrict a table of dimension {self.dim} to dimension {dim}.")
        indices = self.indices[:dim, :dim]
        if indices.max() >= dim:
            raise ValueError(f"The first {dim} basis elements are not closed under multiplication.")
        return StructureTable(
            dim, self.signs[:dim, :dim], indices, self.labels[:dim], self.provenance[:dim, :dim]
        )

    def to_frame(self):
        """Table of signed labels with the basis labels as row and column names.

        :return: Data frame whose entry (j, k) is the signed label of e_j e_k.
        :rtype: pandas.DataFrame
        """
        cells = [[self.signed_label(self.entry(j, k)) for k in range(self.dim)] for j in range(self.dim)]
        return pd.DataFrame(cells, index=list(self.labels), columns=list(self.labels))

    def same_entries(self, other):
        return (
            self.dim == other.dim
            and np.array_equal(self.signs, other.signs)
            and np.array_equal(self.indices, other.indices)
        )

    def __eq__(self, other):
        if not isinstance(other, StructureTable):
            return NotImplemented
        return self.same_entries(other) and self.labels == other.labels

    def __hash__(self):
        return hash((self.dim, self.signs.tobytes(), self.indices.tobytes()))

    def __repr__(self):
        return f"StructureTable(dim={self.dim}, labels={list(self.labels)})"


############################################
# Construction rules
############################################

# Each rule maps (lower table, half dimension, j, k) to (sign, index) or None if it does not apply.
# Rules are tried in order, the first that applies defines the entry.


def _unit_rule(lower, half, j, k):
    if j == 0:
        return 1, k
    if k == 0:
        return 1, j


def _square_rule(lower, half, j, k):
    if j == k:
        return -1, 0


def _lower_level_rule(lower, half, j, k):
    if j < half and k < half:
        return int(lower.signs[j, k]), int(lower.indices[j, k])


def _generator_naming_rule(lower, half, j, k):
    if j < half and k == half:
        return 1, j + half
    if j == half and k < half:
        return -1, k + half


def _anti_associativity_rule(lower, half, j, k):
    if j < half < k and j != k - half:
        # p(qg) = -(pq)g
        p, q = j, k - half
        return -int(lower.signs[p, q]), int(lower.indices[p, q]) + half
    if k < half < j and k != j - half:
        # (qg)p = -p(qg) = (pq)g
        p, q = k, j - half
        return int(lower.signs[p, q]), int(lower.indices[p, q]) + half


def _cross_product_rule(lower, half, j, k):
    if j > half and k > half:
        p, q = j - half, k - half
        return -int(lower.signs[p, q]), int(lower.indices[p, q])


def _generator_cancellation_rule(lower, half, j, k):
    if j == half:
        return 1, k - half
    if k == half:
        return -1, j - half
    if j < half < k:
        # p(pg) = -g
        return -1, half
    if k < half < j:
        # (pg)p = g
        return 1, half


_RULE_SEQUENCE = (
    ("R0", _unit_rule),
    ("R1", _square_rule),
    ("R2", _lower_level_rule),
    ("R3", _generator_naming_rule),
    ("R4", _anti_associativity_rule),
    ("R5", _cross_product_rule),
    ("R6", _generator_cancellation_rule),
)


def _apply_rules(lower, half, j, k):
    for name, rule in _RULE_SEQUENCE:
        result = rule(lower, half, j, k)
        if result is not None:
            return result[0], result[1], name
    raise AssertionError(f"no construction rule applies to e_{j} e_{k}")


def _doubled_label(label, generator):
    if label == "1":
        return generator
    if len(label) == 1:
        return label + generator
    return f"({label}){generator}"


@lru_cache(maxsize=None)
def build_table(dim):
    """
    Build the multiplication table of dimension `dim` by repeated doubling.

    Dimension 1 is the real line. Each doubling step adjoins a generator g (u, v, w and finally s) and appends
    the basis elements e_{k + dim/2} := e_k g. The entries are then derived by the rules R0 to R6, tried in this
    order (see ``RULES``); the rule that fixed each entry is recorded in the table's provenance. The table of
    dimension 16 is the same formal construction one level above the octonions and does not satisfy the
    composition law.

    :param dim: Dimension, one of 1, 2, 4, 8, 16.
    :type dim: int
    :raises ValueError: Raised if `dim` is not supported.
    :return: Structure table with labels 1, u, v, uv, w, uw, vw, (uv)w, s, ...
    :rtype: StructureTable
    """
    if dim not in SUPPORTED_DIMENSIONS:
        raise ValueError(f"Unsupported dimension {dim}, choose one of {SUPPORTED_DIMENSIONS}.")
    if dim == 1:
        return StructureTable(1, [[1]], [[0]], ["1"], [["R0"]])

    half = dim // 2
    lower = build_table(half)
    generator = GENERATORS[dim]

    signs = np.zeros((dim, dim), dtype=np.int64)
    indices = np.zeros((dim, dim), dtype=np.int64)
    provenance = np.empty((dim, dim), dtype=object)
    for j in range(dim):
        for k in range(dim):
            signs[j, k], indices[j, k], provenance[j, k] = _apply_rules(lower, half, j, k)

    labels = list(lower.labels) + [_doubled_label(label, generator) for label in lower.labels]

    # every row and column must be a signed permutation of the basis
    assert all(len(set(row)) == dim for row in indices), f"rows of the dim {dim} table are not permutations"
    assert all(len(set(col)) == dim for col in indices.T), f"columns of the dim {dim} table are not permutations"

    return StructureTable(dim, signs, indices, labels, provenance)


############################################
# The heart product
############################################


def _heart_coordinates(a, b, c, d):
    return a * d + b * c, a * c - b * d


@dataclass(frozen=True)
class HeartTable:
    """
    The commutative product ``(a, b) ♥ (c, d) = (ad + bc, ac - bd)`` on E^2.

    It is the complex product with the two result coordinates swapped. It satisfies the composition law
    but has no unit, so it is kept as a coordinate formula outside the tower of doubled tables.
    """

    dim: int = 2
    formula: str = "(a,b)♥(c,d) = (ad+bc, ac-bd)"

    def multiply(self, x, y):
        return heart_multiply(x, y)

    def symbolic(self, a, b, c, d):
        """Coordinates of the product for arbitrary (e.g. symbolic) inputs."""
        return _heart_coordinates(a, b, c, d)


def heart_multiply(x, y):
    """Evaluate the heart product of two elements of dimension 2, exactly.

    :param x: Left factor (a, b).
    :type x: AlgebraElement
    :param y: Right factor (c, d).
    :type y: AlgebraElement
    :raises ValueError: Raised if a factor is not two dimensional.
    :return: (ad + bc, ac - bd)
    :rtype: AlgebraElement
    """
    if x.dim != 2 or y.dim != 2:
        raise ValueError(f"The heart product needs two elements of dimension 2 but got {x.dim} and {y.dim}.")
    a, b = x.coeffs
    c, d = y.coeffs
    return AlgebraElement(_heart_coordinates(a, b, c, d))
