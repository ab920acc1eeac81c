from .hurwitz_algebra import HurwitzAlgebra
from .elements import AlgebraElement
from .tables import build_table, HeartTable
from .algebra import multiply, conjugate, inverse, rotate, Vector3
