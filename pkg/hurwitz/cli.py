############################################
# imports
############################################

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from hurwitz.algebra import Vector3, rotate
from hurwitz.elements import SUPPORTED_DIMENSIONS, AlgebraElement
from hurwitz.propositions import run_proposition_suite
from hurwitz.rendering import (
    FORMATS,
    format_vector,
    render_classification,
    render_report,
    render_reports,
    render_table,
)
from hurwitz.tables import build_table
from hurwitz.utils import format_rational, parse_rational_list
from hurwitz.verifier import (
    classify_laws,
    find_zero_divisors,
    heart_property_suite,
    sedenion_witness,
    summarize_laws,
    verify_composition,
)

############################################
# Configuration
############################################

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2

SUBCOMMANDS = ("table", "verify", "classify", "suite", "witness", "rotate", "heart")
# subcommands that cannot run without --dim
NEEDS_DIM = ("table", "verify", "suite")

# (uv + ws)(sv + wu) = (e3 + e12)(-e5 - e10), up to the overall sign of the right factor
WITNESS_FACTORS = ((3, 12, 1), (5, 10, 1))


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    """Parsed command line.

    :raises UsageError: Raised if a required option is missing or a value is out of range.
    """

    subcommand: str
    dim: Optional[int] = None
    seed: int = 0
    trials: int = 1000
    format: str = "text"
    n_jobs: int = 1
    verbose: int = 0
    q: List = field(default_factory=list)
    v: List = field(default_factory=list)

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.subcommand in NEEDS_DIM and self.dim is None:
            raise UsageError(f"{self.subcommand} needs --dim")
        if self.dim is not None and self.dim not in SUPPORTED_DIMENSIONS:
            raise UsageError(f"--dim must be one of {', '.join(map(str, SUPPORTED_DIMENSIONS))}, got {self.dim}")
        if self.trials < 1:
            raise UsageError(f"--trials must be positive, got {self.trials}")
        if self.format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}, got {self.format!r}")

    def meta(self):
        return {"dim": self.dim, "seed": self.seed, "trials": self.trials}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(parser, trials_default=1000):
    parser.add_argument("--format", choices=FORMATS, default="text", help="output format (default: text)")
    parser.add_argument("--seed", type=int, default=0, help="seed of the random inputs (default: 0)")
    parser.add_argument(
        "--trials", type=int, default=trials_default, help=f"random trials per check (default: {trials_default})"
    )


def build_parser():
    parser = _ArgumentParser(
        prog="hurwitz",
        description="Multiplication tables of the reals, complex numbers, quaternions and octonions built by "
        "doubling, with exact verification of the composition law.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    table = subparsers.add_parser("table", help="print a multiplication table")
    table.add_argument("--dim", type=int, required=True)
    _add_common(table)

    verify = subparsers.add_parser("verify", help="verify the composition law on all coefficient conditions")
    verify.add_argument("--dim", type=int, required=True)
    _add_common(verify)

    classify = subparsers.add_parser("classify", help="classify algebraic laws, all dimensions without --dim")
    classify.add_argument("--dim", type=int)
    _add_common(classify)

    suite = subparsers.add_parser("suite", help="run the proposition suite up to --dim (2, 4 or 8)")
    suite.add_argument("--dim", type=int, required=True)
    suite.add_argument("--n-jobs", type=int, default=1, dest="n_jobs")
    suite.add_argument("--verbose", type=int, choices=(0, 1), default=0)
    _add_common(suite)

    witness = subparsers.add_parser("witness", help="reproduce the zero divisor (uv + ws)(sv + wu) = 0")
    _add_common(witness)

    heart = subparsers.add_parser("heart", help="check the unit free product (a,b)(c,d) = (ad+bc, ac-bd)")
    _add_common(heart, trials_default=100)

    rotation = subparsers.add_parser("rotate", help="rotate a vector by a quaternion, negative lists as --q=-1,0,0,0")
    rotation.add_argument("--q", required=True, help="quaternion a,b,c,d")
    rotation.add_argument("--v", required=True, help="vector x,y,z")
    _add_common(rotation)

    return parser


def parse_config(argv):
    """Parse command line arguments into a :class:`CliConfig`.

    :param argv: Arguments without the program name.
    :type argv: list
    :raises UsageError: Raised for malformed arguments.
    :raises ValueError: Raised if --q or --v are not lists of rationals of the right length.
    :return: Configuration.
    :rtype: CliConfig
    """
    args = build_parser().parse_args(argv)
    options = {
        key: value
        for key, value in vars(args).items()
        if key in ("subcommand", "dim", "seed", "trials", "format", "n_jobs", "verbose")
    }
    if args.subcommand == "rotate":
        options["q"] = parse_rational_list(args.q, length=4)
        options["v"] = parse_rational_list(args.v, length=3)
    return CliConfig(**options)


############################################
# Subcommands
############################################


def _run_table(config):
    print(render_table(build_table(config.dim), format=config.format))
    return EXIT_OK


def _run_verify(config):
    report = verify_composition(build_table(config.dim))
    print(render_report(report, format=config.format, meta=config.meta()))
    return EXIT_OK if report.passed else EXIT_FAILED


def _run_classify(config):
    if config.dim is not None:
        print(render_classification(classify_laws(build_table(config.dim)), format=config.format))
        return EXIT_OK

    summary = summarize_laws()
    if config.format == "machine":
        print(summary.to_json(orient="index", indent=2))
    else:
        print(summary.to_string())
    return EXIT_OK


def _run_suite(config):
    if config.dim not in (2, 4, 8):
        raise UsageError(f"suite runs up to dimension 2, 4 or 8, got {config.dim}")
    reports = run_proposition_suite(
        config.dim, trials=config.trials, seed=config.seed, n_jobs=config.n_jobs, verbose=config.verbose
    )
    print(render_reports(reports, subject=f"proposition suite dim<={config.dim}", format=config.format, meta=config.meta()))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED


def _run_witness(config):
    witness = sedenion_witness()
    zero_products = find_zero_divisors(build_table(16))
    found = {
        ((c["left"]["a"], c["left"]["b"], c["left"]["sign"]), (c["right"]["a"], c["right"]["b"], c["right"]["sign"]))
        for c in zero_products.counterexamples
    }
    included = WITNESS_FACTORS in found

    meta = {
        **config.meta(),
        "dim": 16,
        "zero_products_checked": zero_products.checked_count,
        "zero_products_found": len(zero_products.counterexamples),
        "witness_among_zero_products": included,
    }
    if config.format == "machine":
        print(render_report(witness, format="machine", meta=meta))
    else:
        print(render_report(witness))
        print(
            f"two-term zero products dim=16: {meta['zero_products_found']} of {meta['zero_products_checked']} "
            f"products vanish, witness included: {'yes' if included else 'no'}"
        )
    return EXIT_OK if witness.passed and included else EXIT_FAILED


def _run_heart(config):
    reports = heart_property_suite(trials=config.trials, seed=config.seed)
    print(render_reports(reports, subject="heart product", format=config.format, meta=config.meta()))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED


def _run_rotate(config):
    q = AlgebraElement(config.q)
    if q.is_zero():
        raise UsageError("--q must be a non-zero quaternion")
    rotated = rotate(q, Vector3(*config.v))
    if config.format == "machine":
        document = {
            "q": [format_rational(value) for value in config.q],
            "v": [format_rational(value) for value in config.v],
            "rotated": [format_rational(value) for value in rotated],
        }
        print(json.dumps(document, indent=2))
    else:
        print(format_vector(rotated))
    return EXIT_OK


_RUNNERS = {
    "table": _run_table,
    "verify": _run_verify,
    "classify": _run_classify,
    "suite": _run_suite,
    "witness": _run_witness,
    "rotate": _run_rotate,
    "heart": _run_heart,
}


def main(argv=None):
    """
    Entry point of the ``hurwitz`` command.

    :param argv: Arguments without the program name, defaults to ``sys.argv[1:]``.
    :type argv: list, optional
    :return: 0 on success, 1 on malformed arguments, 2 if a verification fails.
    :rtype: int
    """
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_config(argv)
    except (UsageError, ValueError) as error:
        return _usage_error(error)
    # errors raised while running are not usage errors and propagate
    try:
        return _RUNNERS[config.subcommand](config)
    except UsageError as error:
        return _usage_error(error)


def _usage_error(error):
    print(build_parser().format_usage(), end="", file=sys.stderr)
    print(f"hurwitz: error: {error}", file=sys.stderr)
    return EXIT_USAGE
