############################################
# imports
############################################

from tqdm import tqdm
from joblib import Parallel, delayed

from hurwitz.algebra import multiply
from hurwitz.elements import AlgebraElement, inner, norm_sq, orthogonal, random_element
from hurwitz.rendering import element_payload
from hurwitz.tables import build_table
from hurwitz.utils import seeded_generator
from hurwitz.verifier import VerificationReport

############################################
# Single propositions
############################################

# Every check draws its inputs of one trial from `rng` and returns None if the identity holds, otherwise a payload
# describing the failing inputs. Identities are used in homogeneous form so no input needs to be a unit vector.


def _check_imaginary_square(rng, table, trial):
    u = random_element(rng, table.dim, imaginary=True)
    actual = multiply(u, u, table)
    expected = AlgebraElement.scalar(table.dim, -norm_sq(u))
    if actual != expected:
        return {"u": element_payload(u), "expected": element_payload(expected), "actual": element_payload(actual)}


def _orthogonal_imaginary_pair(rng, dim):
    u = random_element(rng, dim, imaginary=True)
    v = random_element(rng, dim, imaginary=True, against=(u,))
    return u, v


def _check_anticommutativity(rng, table, trial):
    u, v = _orthogonal_imaginary_pair(rng, table.dim)
    uv, vu = multiply(u, v, table), multiply(v, u, table)
    if uv != -vu:
        return {"u": element_payload(u), "v": element_payload(v), "uv": element_payload(uv), "vu": element_payload(vu)}


def _check_product_orthogonality(rng, table, trial):
    u, v = _orthogonal_imaginary_pair(rng, table.dim)
    uv = multiply(u, v, table)
    one = AlgebraElement.scalar(table.dim, 1)
    failed = [name for name, other in (("1", one), ("u", u), ("v", v)) if inner(uv, other) != 0]
    if failed:
        return {"u": element_payload(u), "v": element_payload(v), "uv": element_payload(uv), "not_orthogonal_to": failed}


def _check_flexible_cancellation(rng, table, trial):
    x, y = _orthogonal_imaginary_pair(rng, table.dim)
    xy, yx = multiply(x, y, table), multiply(y, x, table)
    left, right = multiply(xy, x, table), multiply(x, yx, table)
    expected = norm_sq(x) * y
    if left != expected or right != expected:
        return {
            "x": element_payload(x),
            "y": element_payload(y),
            "(xy)x": element_payload(left),
            "x(yx)": element_payload(right),
            "expected": element_payload(expected),
        }


def _check_orthogonality_transfer(rng, table, trial):
    x = random_element(rng, table.dim)
    # even trials test the orthogonal direction of the equivalence, odd trials a generic pair
    y = random_element(rng, table.dim, against=(x,) if trial % 2 == 0 else ())
    z = random_element(rng, table.dim)
    verdicts = (
        orthogonal(x, y),
        orthogonal(multiply(x, z, table), multiply(y, z, table)),
        orthogonal(multiply(z, x, table), multiply(z, y, table)),
    )
    if len(set(verdicts)) != 1:
        return {
            "x": element_payload(x),
            "y": element_payload(y),
            "z": element_payload(z),
            "x_perp_y": verdicts[0],
            "xz_perp_yz": verdicts[1],
            "zx_perp_zy": verdicts[2],
        }


def _check_product_chain(rng, table, trial):
    x, y = _orthogonal_imaginary_pair(rng, table.dim)
    xy = multiply(x, y, table)
    z = random_element(rng, table.dim, imaginary=True, against=(x, y, xy))
    actual = multiply(xy, multiply(y, z, table), table)
    expected = norm_sq(y) * multiply(x, z, table)
    if actual != expected:
        return {
            "x": element_payload(x),
            "y": element_payload(y),
            "z": element_payload(z),
            "expected": element_payload(expected),
            "actual": element_payload(actual),
        }


def _anti_associativity_counterexamples(table):
    half = table.dim // 2
    g = AlgebraElement.basis(table.dim, half)
    counterexamples = []
    for p in range(1, half):
        for q in range(1, half):
            if p == q:
                continue
            x, y = AlgebraElement.basis(table.dim, p), AlgebraElement.basis(table.dim, q)
            left = multiply(x, multiply(y, g, table), table)
            right = multiply(multiply(x, y, table), g, table)
            if left != -right:
                counterexamples.append(
                    {
                        "x": table.labels[p],
                        "y": table.labels[q],
                        "g": table.labels[half],
                        "x(yg)": element_payload(left),
                        "(xy)g": element_payload(right),
                    }
                )
    return counterexamples, (half - 1) * (half - 2)


# name -> (statement, smallest dimension in which the hypotheses can be met, check)
PROPOSITIONS = {
    "P1": ("u imaginary: u^2 = -norm_sq(u)", 2, _check_imaginary_square),
    "P2": ("u, v imaginary, u perp v: uv = -vu", 4, _check_anticommutativity),
    "P3": ("u, v imaginary, u perp v: uv perp 1, u, v", 4, _check_product_orthogonality),
    "P4": ("x, y imaginary, x perp y: (xy)x = x(yx) = norm_sq(x) y", 4, _check_flexible_cancellation),
    "P5": ("x perp y <=> xz perp yz <=> zx perp zy", 2, _check_orthogonality_transfer),
    "P6": ("x, y, z imaginary, pairwise perp, xy perp z: (xy)(yz) = norm_sq(y) xz", 8, _check_product_chain),
    "P7": ("x, y distinct basis elements below the generator g: x(yg) = -(xy)g", 8, None),
}

SUITE_DIMENSIONS = (2, 4, 8)


def _run_proposition(name, dim, trials, seed):
    """Check one proposition in one dimension.

    :param name: Proposition name, a key of ``PROPOSITIONS``.
    :type name: str
    :param dim: Dimension of the table.
    :type dim: int
    :param trials: Number of random trials.
    :type trials: int
    :param seed: User seed, combined with dim and proposition number.
    :type seed: int
    :return: Report of the proposition.
    :rtype: VerificationReport
    """
    statement, min_dim, check = PROPOSITIONS[name]
    subject = f"{name} dim={dim}"

    if dim < min_dim:
        return VerificationReport(
            subject=subject,
            checked_count=0,
            skipped=True,
            runtime_note=f"hypotheses need dim >= {min_dim}: {statement}",
        )

    table = build_table(dim)
    if check is None:
        counterexamples, checked = _anti_associativity_counterexamples(table)
        return VerificationReport(
            subject=subject,
            checked_count=checked,
            counterexamples=counterexamples,
            runtime_note=statement,
            checked_unit="basis pairs",
        )

    rng = seeded_generator(seed, dim, int(name[1:]))
    counterexamples = []
    for trial in range(trials):
        failure = check(rng, table, trial)
        if failure is not None:
            counterexamples.append({"trial": trial, **failure})

    return VerificationReport(
        subject=subject,
        checked_count=trials,
        counterexamples=counterexamples,
        runtime_note=statement,
        checked_unit="trials",
    )


############################################
# Proposition suite
############################################


def run_proposition_suite(max_dim, trials=1000, seed=0, n_jobs=1, verbose=0):
    """
    Verify the propositions P1 to P7 on random exact rational inputs in every dimension 2, 4 and 8 up to
    `max_dim`. Propositions whose hypotheses cannot be met in a dimension give a report marked as skipped.

    Every (proposition, dimension) task draws from its own generator seeded with the seed, the dimension
    and the proposition number, so the reports do not depend on `n_jobs`.

    :param max_dim: Largest dimension to check, one of 2, 4, 8.
    :type max_dim: int
    :param trials: Number of random trials per proposition and dimension, defaults to 1000.
    :type trials: int, optional
    :param seed: Seed of the random inputs, defaults to 0.
    :type seed: int, optional
    :param n_jobs: Number of jobs to run in parallel, defaults to 1.
    :type n_jobs: int, optional
    :param verbose: Print one summary line per task (1) or nothing (0), defaults to 0.
    :type verbose: {0,1}, optional
    :raises ValueError: Raised if `max_dim` is not 2, 4 or 8 or `trials` is not positive.
    :return: Reports ordered by dimension, then proposition.
    :rtype: list
    """
    if max_dim not in SUITE_DIMENSIONS:
        raise ValueError(f"The proposition suite runs up to dimension 2, 4 or 8, got {max_dim}.")
    if trials < 1:
        raise ValueError(f"Number of trials must be positive, got {trials}.")

    tasks = [(name, dim) for dim in SUITE_DIMENSIONS if dim <= max_dim for name in PROPOSITIONS]
    disable = True if verbose == 0 else False

    reports = Parallel(n_jobs=n_jobs)(
        delayed(_run_proposition)(name, dim, trials, seed) for name, dim in tqdm(tasks, disable=disable)
    )

    if verbose > 0:
        for report in reports:
            if report.skipped:
                print(f"{report.subject}: skipped ({report.runtime_note})")
            else:
                status = "passed" if report.passed else f"failed with {len(report.counterexamples)} counterexamples"
                print(f"{report.subject}: {status} after {report.checked_count} {report.checked_unit}")

    return list(reports)
