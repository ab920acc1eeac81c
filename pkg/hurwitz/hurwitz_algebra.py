############################################
# imports
############################################

import hurwitz.algebra as algebra
import hurwitz.propositions as propositions
import hurwitz.rendering as rendering
import hurwitz.tables as tables
import hurwitz.verifier as verifier
from hurwitz.elements import AlgebraElement

from typing import Sequence, Union
from fractions import Fraction

import warnings

############################################
# Hurwitz algebra
############################################


class HurwitzAlgebra:
    """
    Algebra over E^dim whose multiplication table is built by repeated doubling of the reals.

    Dimensions 1, 2, 4 and 8 give the reals, complex numbers, quaternions and octonions. Dimension 16 is the
    formal doubling of the octonions; its table is well defined but it has zero divisors and does not satisfy the
    composition law, which is announced with a warning.

    :param dim: Dimension of the algebra, one of 1, 2, 4, 8, 16.
    :type dim: int
    :param verbose: Print a summary of the constructed algebra (1) or nothing (0), defaults to 1.
    :type verbose: {0, 1}, optional
    :raises ValueError: Raised if `dim` is not supported.
    """

    def __init__(self, dim: int, verbose: int = 1):
        self.dim = dim
        self.verbose = verbose
        self.table = tables.build_table(dim)
        self.name = verifier.ALGEBRA_NAMES[dim]

        if dim == 16:
            warnings.warn(
                "The table of dimension 16 is a formal doubling of the octonions: it has zero divisors and "
                "does not satisfy the composition law."
            )
        if verbose > 0:
            print(f"Built the {self.name} (dimension {dim}) with basis {', '.join(self.table.labels)}")

    def element(self, coeffs: Sequence[Union[int, Fraction, str]]):
        """Create an element from its coefficients in the basis of the algebra.

        :param coeffs: One coefficient per basis element.
        :type coeffs: sequence
        :raises ValueError: Raised if the number of coefficients does not match the dimension.
        :return: Element of the algebra.
        :rtype: hurwitz.elements.AlgebraElement
        """
        x = AlgebraElement(coeffs)
        if x.dim != self.dim:
            raise ValueError(f"The {self.name} need {self.dim} coefficients but got {x.dim}.")
        return x

    def basis(self, label: Union[int, str]):
        """Basis element by index or by label, e.g. ``"uv"``."""
        if isinstance(label, str):
            if label not in self.table.labels:
                raise ValueError(f"Unknown basis label {label!r}, choose one of {list(self.table.labels)}.")
            label = self.table.labels.index(label)
        return AlgebraElement.basis(self.dim, label)

    def multiply(self, x: AlgebraElement, y: AlgebraElement):
        return algebra.multiply(x, y, self.table)

    def conjugate(self, x: AlgebraElement):
        return algebra.conjugate(x)

    def inverse(self, x: AlgebraElement):
        return algebra.inverse(x, self.table)

    def format(self, x: AlgebraElement):
        """Write an element in the basis labels of the algebra."""
        return rendering.format_element(x, self.table.labels)

    def render(self, format: str = "text"):
        return rendering.render_table(self.table, format=format)

    def verify(self, trials: int = 1000, seed: int = 0):
        """
        Verify the composition law on all coefficient conditions and on random pairs.

        :param trials: Number of random pairs, defaults to 1000.
        :type trials: int, optional
        :param seed: Seed of the random pairs, defaults to 0.
        :type seed: int, optional
        :return: Coefficient sweep report and sampled report.
        :rtype: list
        """
        reports = [verifier.verify_composition(self.table), verifier.sample_composition(self.table, trials, seed)]
        if self.verbose > 0:
            print(rendering.render_reports(reports, subject=f"composition {self.name}"))
        return reports

    def classify(self):
        classification = verifier.classify_laws(self.table)
        if self.verbose > 0:
            print(rendering.render_classification(classification))
        return classification

    def zero_divisors(self):
        """Two-term zero divisors (e_a ± e_b)(e_c ± e_d) = 0 of the algebra.

        :return: Report listing every vanishing product.
        :rtype: hurwitz.verifier.VerificationReport
        """
        report = verifier.find_zero_divisors(self.table)
        if self.verbose > 0:
            print(f"Found {len(report.counterexamples)} zero products among {report.checked_count} products")
        return report

    def run_suite(self, trials: int = 1000, seed: int = 0, n_jobs: int = 1):
        """
        Run the proposition suite in every dimension 2, 4 and 8 up to the dimension of this algebra.

        :param trials: Number of random trials per proposition and dimension, defaults to 1000.
        :type trials: int, optional
        :param seed: Seed of the random inputs, defaults to 0.
        :type seed: int, optional
        :param n_jobs: Number of jobs to run in parallel, defaults to 1.
        :type n_jobs: int, optional
        :raises ValueError: Raised if the algebra has dimension 1.
        :return: Proposition reports.
        :rtype: list
        """
        max_dim = min(self.dim, 8)
        if max_dim < 2:
            raise ValueError("The proposition suite needs an algebra of dimension at least 2.")
        return propositions.run_proposition_suite(
            max_dim, trials=trials, seed=seed, n_jobs=n_jobs, verbose=self.verbose
        )

    def __repr__(self):
        return f"HurwitzAlgebra(dim={self.dim})"
