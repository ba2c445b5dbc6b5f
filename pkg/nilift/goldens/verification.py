import re

from nilift.balacarter.naming import same_label
from nilift.balacarter.orbits import find_orbit
from nilift.exceptions import NiliftException
from nilift.goldens.golden_parser import parse_goldens
from nilift.goldens.worked_examples import check_examples
from nilift.lifting.representations import identify_representation
from nilift.lifting.weights import make_levi_weight
from nilift.logger import log
from nilift.models.base import Basis
from nilift.models.goldens import GoldenResult, GoldenRow, VerificationReport
from nilift.models.lifting import ClassTrace, RepresentationReport
from nilift.models.orbits import OrbitRecord
from nilift.models.roots import Weight
from nilift.rootdata.root_system import build_root_system
from nilift.utils.string_utils import format_weight

TORSION_SUFFIX_REGEX = re.compile(r"\[d=\d+\]$")


def base_class_name(name: str) -> str:
    return TORSION_SUFFIX_REGEX.sub("", name)


def compute_row(row: GoldenRow) -> tuple[OrbitRecord, RepresentationReport]:
    rs = build_root_system(row.group)
    orbit = find_orbit(rs, row.orbit_name)
    lw = make_levi_weight(orbit, Weight(coords=row.weight, basis=Basis.Fundamental))
    return orbit, identify_representation(lw)


def matching_classes(report: RepresentationReport, name: str) -> list[ClassTrace]:
    return [entry for entry in report.classes if same_label(base_class_name(entry.name), name)]


def _check_sign(report: RepresentationReport) -> list[str]:
    messages = []
    if report.dimension != 1:
        messages.append(f"dimension {report.dimension}, expected 1")
    for entry in report.classes:
        value = entry.trace.value
        if value not in (1, -1):
            messages.append(f"trace {entry.trace} on {entry.name} is not a sign")
        elif entry.trivial and value != 1:
            messages.append(f"trace {value} on the trivial class {entry.name}")
        elif value == -1 and entry.d % 2:
            messages.append(f"trace -1 on {entry.name} whose pair has odd torsion {entry.d}")
    if not any(entry.trace.value == -1 for entry in report.classes):
        messages.append("no class parameter has trace -1")
    return messages


def _check_standard(report: RepresentationReport) -> list[str]:
    messages = []
    if report.dimension != 2:
        messages.append(f"dimension {report.dimension}, expected 2")
    for entry in report.classes:
        value = entry.trace.value
        if value not in (2, 0, -1):
            messages.append(f"trace {entry.trace} on {entry.name} is not a standard trace")
        elif entry.trivial and value != 2:
            messages.append(f"trace {value} on the trivial class {entry.name}")
        elif value == 0 and entry.d % 2:
            messages.append(f"trace 0 on {entry.name} whose pair has odd torsion {entry.d}")
        elif value == -1 and entry.d % 3:
            messages.append(f"trace -1 on {entry.name} whose torsion {entry.d} is prime to 3")
    values = {entry.trace.value for entry in report.classes}
    if not {0, -1} <= values:
        messages.append(f"traces {sorted(v for v in values if v is not None)} miss 0 or -1")
    return messages


def _check_galois(report: RepresentationReport) -> list[str]:
    messages = []
    for entry in report.classes:
        if not entry.trace.is_self_conjugate():
            messages.append(f"trace {entry.trace} on {entry.name} is not closed under negation")
        elif not entry.trace.is_galois_stable():
            messages.append(f"trace {entry.trace} on {entry.name} is not Galois stable")
    return messages


def _check_traces(row: GoldenRow, report: RepresentationReport) -> list[str]:
    messages = []
    for name, expected in row.traces:
        classes = matching_classes(report, name)
        if not classes:
            messages.append(f"no class parameter is labelled {name}")
            continue
        for entry in classes:
            if entry.trace.value != expected:
                messages.append(
                    f"trace on {entry.name} {entry.nodes} is {entry.trace}, expected {expected}"
                )
    return messages


def check_row(row: GoldenRow) -> GoldenResult:
    """Runs one golden claim through the descent test and the trace computation."""
    messages = []
    diagram = None
    classes = ()
    try:
        orbit, report = compute_row(row)
        diagram = orbit.diagram
        classes = report.classes
        if row.diagram is not None and row.diagram != orbit.diagram:
            messages.append(f"{row.orbit_name} has diagram {orbit.diagram}, expected {row.diagram}")
        if not report.descends:
            messages.append(f"{format_weight(row.weight)} does not descend")
        else:
            if row.representation == "sign":
                messages += _check_sign(report)
            elif row.representation == "standard":
                messages += _check_standard(report)
            messages += _check_galois(report)
            messages += _check_traces(row, report)
    except NiliftException as e:
        messages.append(f"{e.__class__.__name__}: {e}")
    for message in messages:
        log.debug(f"line {row.line} {row.group} {row.orbit_name}: {message}")
    return GoldenResult(
        row=row, passed=not messages, messages=tuple(messages), diagram=diagram, classes=classes
    )


def computed_row(row: GoldenRow) -> GoldenRow:
    """The golden row as the engine computes it, traces restricted to the listed classes."""
    orbit, report = compute_row(row)
    if row.traces:
        traces = []
        for name, _ in row.traces:
            classes = matching_classes(report, name)
            if classes and classes[0].trace.is_integral:
                traces.append((name, classes[0].trace.value))
    else:
        traces = [
            (entry.name, entry.trace.value)
            for entry in report.classes
            if entry.trace.is_integral
        ]
    return row.model_copy(
        update={
            "diagram": orbit.diagram if row.diagram is not None else None,
            "traces": tuple(traces),
        }
    )


def verify_all(rows: list[GoldenRow] | None = None, examples: bool = True) -> VerificationReport:
    rows = parse_goldens() if rows is None else rows
    log.info(f"Verifying {len(rows)} golden rows...")
    ordered = sorted(rows, key=lambda row: (row.line, row.key))
    results = tuple(check_row(row) for row in ordered)
    report = VerificationReport(
        results=results, examples=tuple(check_examples()) if examples else ()
    )
    failed = len(report.failures)
    if failed:
        log.warning(f"{failed} golden checks failed")
    else:
        log.info(f"All {len(results)} golden rows passed")
    return report
