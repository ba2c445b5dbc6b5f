import csv
from pathlib import Path

from nilift import config
from nilift.exceptions import GoldenFormatException, NiliftException
from nilift.logger import log
from nilift.models.base import ComponentGroup
from nilift.models.goldens import GoldenRow
from nilift.rootdata.cartan import parse_cartan_type
from nilift.utils.string_utils import format_diagram, parse_diagram

GOLDEN_COLUMNS = 7
MISSING = "-"


def _parse_traces(text: str, line: int) -> tuple[tuple[str, int], ...]:
    if text == MISSING:
        return ()
    traces = []
    for entry in text.split(";"):
        name, _, value = entry.rpartition(":")
        if not name:
            raise GoldenFormatException(f"line {line}: trace entry '{entry}' has no class name")
        try:
            traces.append((name.strip(), int(value)))
        except ValueError:
            raise GoldenFormatException(f"line {line}: trace '{value}' of {name} is not an integer")
    return tuple(traces)


def parse_golden_line(fields: list[str], line: int = 0) -> GoldenRow:
    if len(fields) != GOLDEN_COLUMNS:
        raise GoldenFormatException(
            f"line {line}: expected {GOLDEN_COLUMNS} tab-separated fields, got {len(fields)}"
        )
    group, orbit_name, diagram, component_group, representation, weight, traces = (
        field.strip() for field in fields
    )
    try:
        cartan_type = parse_cartan_type(group)
        diagram = None if diagram == MISSING else parse_diagram(cartan_type, diagram)
        component_group = ComponentGroup(component_group)
    except (NiliftException, ValueError) as e:
        raise GoldenFormatException(f"line {line}: {e}")
    try:
        coords = tuple(int(value) for value in weight.split(","))
    except ValueError:
        raise GoldenFormatException(f"line {line}: weight '{weight}' is not an integer vector")
    if len(coords) != cartan_type.rank:
        raise GoldenFormatException(
            f"line {line}: weight '{weight}' does not have {cartan_type.rank} coordinates"
        )
    return GoldenRow(
        group=cartan_type,
        orbit_name=orbit_name,
        diagram=diagram,
        component_group=component_group,
        representation=representation,
        weight=coords,
        traces=_parse_traces(traces, line),
        line=line,
    )


def format_golden_line(row: GoldenRow) -> str:
    diagram = (
        MISSING if row.diagram is None else format_diagram(row.group, row.diagram, compact=True)
    )
    traces = ";".join(f"{name}:{value}" for name, value in row.traces) or MISSING
    return "\t".join(
        [
            str(row.group),
            row.orbit_name,
            diagram,
            row.component_group.value,
            row.representation,
            ",".join(str(value) for value in row.weight),
            traces,
        ]
    )


def parse_goldens(path: Path | None = None) -> list[GoldenRow]:
    """Reads the golden table; '#' lines are comments."""
    path = path or Path(config.DATA_DIRECTORY) / config.GOLDEN_FILE
    rows = []
    with open(path, newline="", encoding="utf-8") as golden_file:
        for line, text in enumerate(golden_file, start=1):
            if not text.strip() or text.startswith("#"):
                continue
            fields = next(csv.reader([text.rstrip("\n")], delimiter="\t"))
            rows.append(parse_golden_line(fields, line))
    log.debug(f"Loaded {len(rows)} golden rows from {path}")
    return rows
