from pydantic import Field

from nilift.models.base import LieElement
from nilift.models.goldens import GoldenRow, VerificationReport


class OutputRecord(LieElement):
    """Result of a command; json output is model_dump_json and parses back to an equal record."""

    template: str = ""

    def csv_rows(self) -> list[list[str]]:
        raise NotImplementedError


class NodeRow(LieElement):
    node: int
    descends: bool
    in_root_lattice: bool
    multiple: int = 1
    multiple_trivial: bool | None = None


class OrbitRow(LieElement):
    name: str
    derived_name: str = ""
    # row layout, E types as '0 0 2 0 0 / 0'
    diagram: str
    dimension: int
    component_group_order: int | None = None
    classes: list[str] = Field(default_factory=list)
    nodes: list[NodeRow] | None = None


class OrbitListing(OutputRecord):
    template: str = "orbits.mako"
    group: str
    lattice: str
    orbits: list[OrbitRow] = Field(default_factory=list)

    def csv_rows(self) -> list[list[str]]:
        rows = [["group", "orbit", "derived", "diagram", "dimension", "order", "classes"]]
        for orbit in self.orbits:
            rows.append(
                [
                    self.group,
                    orbit.name,
                    orbit.derived_name,
                    orbit.diagram,
                    str(orbit.dimension),
                    "" if orbit.component_group_order is None else str(orbit.component_group_order),
                    ";".join(orbit.classes),
                ]
            )
        return rows


class ClassRow(LieElement):
    name: str
    # extended simple roots of the pair, 0 for the lowest root
    nodes: list[int]
    word: str
    d: int
    trace: str
    value: int | None = None


class LiftRecord(OutputRecord):
    template: str = "lift.mako"
    group: str
    orbit: str
    diagram: str
    weight: str
    vector: list[str]
    descends: bool
    dimension: int
    representation: str
    classes: list[ClassRow] = Field(default_factory=list)
    minimal_weight: str | None = None

    def csv_rows(self) -> list[list[str]]:
        rows = [["group", "orbit", "weight", "class", "nodes", "d", "trace"]]
        for entry in self.classes:
            rows.append(
                [
                    self.group,
                    self.orbit,
                    self.weight,
                    entry.name,
                    " ".join(str(node) for node in entry.nodes),
                    str(entry.d),
                    entry.trace,
                ]
            )
        return rows


class ChiRow(LieElement):
    subset: list[int]
    weight: str
    vector: list[str]
    in_xi: bool = True


class SpinRow(LieElement):
    weight: str
    dimension: int
    minimal_weight: str


class ClassicalRecord(OutputRecord):
    template: str = "classical.mako"
    group: str
    partition: str
    epsilon: int
    diagram: str
    basis: list[int]
    reduced_basis: list[int]
    k_max: int | None = None
    component_group_order: int
    simply_connected_order: int
    lifts: list[ChiRow] = Field(default_factory=list)
    spin: list[SpinRow] = Field(default_factory=list)
    spin_reason: str = ""

    def csv_rows(self) -> list[list[str]]:
        rows = [["group", "partition", "subset", "weight", "dimension"]]
        for lift in self.lifts:
            subset = " ".join(str(s) for s in lift.subset)
            rows.append([self.group, self.partition, subset, lift.weight, "1"])
        for spin in self.spin:
            rows.append([self.group, self.partition, "spin", spin.weight, str(spin.dimension)])
        return rows


class CentralRow(LieElement):
    weight: str
    character: str
    # w_{jq} when it had to be replaced by a descending weight
    replaces: str = ""


class TypeARecord(OutputRecord):
    template: str = "type_a.mako"
    group: str
    partition: str
    diagram: str
    d: int
    lifts: list[CentralRow] = Field(default_factory=list)

    def csv_rows(self) -> list[list[str]]:
        rows = [["group", "partition", "weight", "character"]]
        for lift in self.lifts:
            rows.append([self.group, self.partition, lift.weight, lift.character])
        return rows


class TableRecord(OutputRecord):
    template: str = "tables.mako"
    group: str
    rows: list[GoldenRow] = Field(default_factory=list)

    def csv_rows(self) -> list[list[str]]:
        rows = [["group", "orbit", "component group", "representation", "weight", "traces"]]
        for row in self.rows:
            rows.append(
                [
                    str(row.group),
                    row.orbit_name,
                    row.component_group.value,
                    row.representation,
                    ",".join(str(value) for value in row.weight),
                    ";".join(f"{name}:{value}" for name, value in row.traces),
                ]
            )
        return rows


class VerifyRecord(OutputRecord):
    template: str = "verify.mako"
    passed: bool
    report: VerificationReport

    def csv_rows(self) -> list[list[str]]:
        rows = [["line", "group", "orbit", "representation", "weight", "status", "messages"]]
        for result in self.report.results:
            row = result.row
            rows.append(
                [
                    str(row.line),
                    str(row.group),
                    row.orbit_name,
                    row.representation,
                    ",".join(str(value) for value in row.weight),
                    "pass" if result.passed else "FAIL",
                    "; ".join(result.messages),
                ]
            )
        for result in self.report.examples:
            rows.append(
                [
                    "",
                    str(result.example.group),
                    result.example.orbit_name,
                    result.example.name,
                    ",".join(str(value) for value in result.example.weight),
                    "pass" if result.passed else "FAIL",
                    "; ".join(result.messages),
                ]
            )
        return rows
