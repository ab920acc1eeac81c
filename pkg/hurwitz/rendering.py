############################################
# imports
############################################

import json

from hurwitz.utils import format_rational

############################################
# functions
############################################

FORMATS = ("text", "machine")


def _check_format(format):
    if format not in FORMATS:
        raise ValueError(f"Unknown output format {format!r}, choose one of {FORMATS}.")


def _dumps(document):
    return json.dumps(document, indent=2)


def element_payload(x):
    """Coefficients of an element as lossless strings, for machine readable payloads."""
    return [format_rational(value) for value in x.coeffs]


def format_element(x, labels=None):
    """
    Write an element as a signed sum of labelled basis elements, e.g. ``"uv + ws"`` or ``"1/2 - 3/2*u"``.

    :param x: Element to format.
    :type x: hurwitz.elements.AlgebraElement
    :param labels: Basis labels, defaults to e0, e1, ...
    :type labels: list, optional
    :return: Human readable expression, ``"0"`` for the zero element.
    :rtype: str
    """
    if labels is None:
        labels = [f"e{k}" for k in range(x.dim)]

    terms = []
    for value, label in zip(x.coeffs, labels):
        if value == 0:
            continue
        magnitude = abs(value)
        if label == "1":
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = label
        else:
            body = f"{format_rational(magnitude)}*{label}"
        terms.append(("-" if value < 0 else "+", body))

    if not terms:
        return "0"
    sign, body = terms[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


def format_vector(v):
    return ", ".join(format_rational(value) for value in v)


def render_table(t, format="text"):
    """
    Render a structure table.

    The text format is an aligned grid of signed labels (columns separated by two spaces, negative entries
    prefixed with ``-``). The machine format is a JSON object with the fields ``dim``, ``labels`` and
    ``entries``, the latter a row-major list of ``{sign, index, rule}`` objects.

    :param t: Table to render.
    :type t: hurwitz.tables.StructureTable
    :param format: Output format, defaults to "text".
    :type format: {'text', 'machine'}, optional
    :raises ValueError: Raised if `format` is unknown.
    :return: Rendered document.
    :rtype: str
    """
    _check_format(format)

    if format == "machine":
        entries = [
            {"sign": int(t.signs[j, k]), "index": int(t.indices[j, k]), "rule": str(t.provenance[j, k])}
            for j in range(t.dim)
            for k in range(t.dim)
        ]
        return _dumps({"dim": t.dim, "labels": list(t.labels), "entries": entries})

    cells = t.to_frame().values
    widths = [max(len(cell) for cell in cells[:, k]) for k in range(t.dim)]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _report_status(report):
    if report.skipped:
        return "skipped"
    return "passed" if report.passed else "failed"


def _report_lines(report, max_listed):
    lines = [f"{report.subject}: {_report_status(report)}, {report.checked_count} {report.checked_unit} checked"]
    if report.runtime_note:
        lines.append(f"  note: {report.runtime_note}")
    for item in report.evidence:
        lines.append(f"  {item['step']}: {item['value']}" if "step" in item else f"  {item}")
    for counterexample in report.counterexamples[:max_listed]:
        lines.append(f"  counterexample: {counterexample}")
    hidden = len(report.counterexamples) - max_listed
    if hidden > 0:
        lines.append(f"  ... {hidden} more counterexamples")
    return lines


def render_report(report, format="text", meta=None, max_listed=10):
    """Render a single verification report.

    :param report: Report to render.
    :type report: hurwitz.verifier.VerificationReport
    :param format: Output format, defaults to "text".
    :type format: {'text', 'machine'}, optional
    :param meta: Run parameters attached to the machine output, e.g. dim, seed and trials, defaults to None.
    :type meta: dict, optional
    :param max_listed: Maximal number of counterexamples listed in the text format, defaults to 10.
    :type max_listed: int, optional
    :return: Rendered document.
    :rtype: str
    """
    _check_format(format)
    if format == "machine":
        return _dumps(report.to_dict(meta))
    return "\n".join(_report_lines(report, max_listed))


def render_reports(reports, subject, format="text", meta=None, max_listed=10):
    """Render several reports as one document. The machine format is a single object whose
    ``counterexamples`` collects the counterexamples of all reports, tagged with their subject.
    """
    _check_format(format)
    if format == "machine":
        counterexamples = [
            {"report": report.subject, **counterexample}
            for report in reports
            for counterexample in report.counterexamples
        ]
        document = {
            "subject": subject,
            "passed": all(report.passed for report in reports),
            "checked_count": sum(report.checked_count for report in reports),
            "counterexamples": counterexamples,
            "meta": dict(meta or {}),
            "reports": [report.to_dict() for report in reports],
        }
        return _dumps(document)

    lines = []
    for report in reports:
        lines.extend(_report_lines(report, max_listed))
    return "\n".join(lines)


def render_classification(classification, format="text"):
    """Render a law classification with a witness for every failed law."""
    _check_format(format)
    if format == "machine":
        return _dumps(classification.to_dict())

    lines = [f"laws dim={classification.dim}"]
    for law, holds in classification.laws().items():
        line = f"  {law}: {'yes' if holds else 'no'}"
        if not holds:
            line += f"  (witness: {classification.witness_per_failed_law[law]['expression']})"
        lines.append(line)
    return "\n".join(lines)
