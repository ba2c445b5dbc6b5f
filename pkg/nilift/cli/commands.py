from itertools import combinations

from nilift.balacarter.orbits import class_parameters, find_orbit, is_exceptional, orbit_catalog
from nilift.classical.characters import chi_weight, component_group_order, lift_character
from nilift.classical.partitions import (
    all_partitions,
    component_basis,
    make_partition_orbit,
    partition_label,
    partition_to_diagram,
    type_a_diagram,
    valid_partitions,
)
from nilift.classical.spin import spin_representations
from nilift.classical.type_a import (
    central_character,
    component_order,
    formula_lift,
    type_a_lifts,
)
from nilift.exceptions import WeightOutsideRootLatticeException
from nilift.goldens.golden_parser import parse_goldens
from nilift.goldens.verification import computed_row, verify_all
from nilift.lifting.representations import (
    class_names,
    identify_representation,
    minimal_lift_search,
    representation_label,
    weight_norm,
)
from nilift.lifting.simply_connected import simply_connected_report
from nilift.lifting.weights import make_levi_weight
from nilift.logger import log
from nilift.models.base import Basis, ComponentGroup, Family, Lattice
from nilift.models.output import (
    CentralRow,
    ChiRow,
    ClassicalRecord,
    ClassRow,
    LiftRecord,
    NodeRow,
    OrbitListing,
    OrbitRow,
    SpinRow,
    TableRecord,
    TypeARecord,
    VerifyRecord,
)
from nilift.models.roots import RootSystem, Weight
from nilift.rootdata.cartan import make_cartan_type, parse_cartan_type
from nilift.rootdata.root_system import build_root_system
from nilift.utils.string_utils import (
    format_diagram,
    format_weight,
    normalize_orbit_name,
    parse_partition,
    parse_weight,
)

GROUP_ORDERS = {
    ComponentGroup.S2: 2,
    ComponentGroup.S3: 6,
    ComponentGroup.S4: 24,
    ComponentGroup.S5: 120,
}


def _vector(coords) -> list[str]:
    return [str(value) for value in coords]


def _component_group_orders(rs: RootSystem, lattice: Lattice) -> dict[tuple[int, ...], int]:
    ct = rs.cartan_type
    simply_connected = lattice == Lattice.SimplyConnected
    if ct.family == Family.A:
        return {
            type_a_diagram(parts): component_order(ct.rank + 1, parts) if simply_connected else 1
            for parts in all_partitions(ct.rank + 1)
        }
    if ct.family in (Family.B, Family.C, Family.D):
        return {
            partition_to_diagram(po): component_group_order(po, simply_connected)
            for po in valid_partitions(ct)
        }
    orders = {}
    for row in parse_goldens():
        if row.group == ct and row.component_group in GROUP_ORDERS:
            orbit = find_orbit(rs, row.orbit_name)
            orders[orbit.diagram] = GROUP_ORDERS[row.component_group]
    return orders


def cmd_orbits(group: str, lattice: str = Lattice.Adjoint.value) -> OrbitListing:
    rs = build_root_system(parse_cartan_type(group))
    lattice = Lattice(lattice)
    orders = _component_group_orders(rs, lattice)
    rows = []
    for orbit in orbit_catalog(rs):
        names = class_names(orbit)
        order = orders.get(orbit.diagram)
        if order is None and len(names) == 1:
            order = 1
        nodes = None
        if lattice == Lattice.SimplyConnected and is_exceptional(rs):
            nodes = [
                NodeRow(**node.model_dump())
                for node in simply_connected_report(rs, orbit).nodes
            ]
        rows.append(
            OrbitRow(
                name=orbit.name,
                derived_name=orbit.derived_name,
                diagram=format_diagram(rs.cartan_type, orbit.diagram),
                dimension=orbit.dimension,
                component_group_order=order,
                classes=names,
                nodes=nodes,
            )
        )
    return OrbitListing(group=str(rs.cartan_type), lattice=lattice.value, orbits=rows)


def cmd_lift(
    group: str, orbit: str, weight: str, bound: int | None = None, minimal: bool = False
) -> LiftRecord:
    rs = build_root_system(parse_cartan_type(group))
    record = find_orbit(rs, orbit)
    coords = parse_weight(weight, rs.rank)
    lw = make_levi_weight(record, Weight(coords=coords, basis=Basis.Fundamental))
    if not rs.in_root_lattice(lw.weight):
        raise WeightOutsideRootLatticeException(
            f"{format_weight(lw.weight.coords)} is not in the root lattice of {rs.cartan_type}"
        )
    report = identify_representation(lw)
    words = {}
    for pair in class_parameters(record):
        words.setdefault(pair.nodes, str(pair.word))
    classes = [
        ClassRow(
            name=entry.name,
            nodes=list(entry.nodes),
            word=words.get(entry.nodes, ""),
            d=entry.d,
            trace=str(entry.trace),
            value=entry.trace.value,
        )
        for entry in report.classes
    ]
    minimal_weight = None
    if minimal and report.descends:
        # the given weight is a lift, so its norm bounds the search
        if bound is None:
            bound = weight_norm(rs, lw.weight)
        found = minimal_lift_search(record, report.character, bound)
        minimal_weight = format_weight(found.weight.coords)
    return LiftRecord(
        group=str(rs.cartan_type),
        orbit=record.name,
        diagram=format_diagram(rs.cartan_type, record.diagram),
        weight=format_weight(lw.weight.coords),
        vector=_vector(lw.weight.coords),
        descends=report.descends,
        dimension=report.dimension,
        representation=representation_label(report),
        classes=classes,
        minimal_weight=minimal_weight,
    )


def cmd_classical(
    partition: str, epsilon: int = 0, very_even_node: int | None = None
) -> ClassicalRecord:
    po = make_partition_orbit(epsilon, parse_partition(partition), very_even_node)
    basis = component_basis(po)
    lifts = []
    for size in range(len(basis.B_tilde) + 1):
        for subset in combinations(basis.B_tilde, size):
            weight = lift_character(po, subset)
            lifts.append(
                ChiRow(
                    subset=list(subset),
                    weight=format_weight(weight.coords),
                    vector=_vector(weight.coords),
                    in_xi=all(chi_weight(po, po.part(j)).in_xi for j in subset),
                )
            )
    spin = spin_representations(po)
    return ClassicalRecord(
        group=str(po.cartan_type),
        partition=po.label,
        epsilon=po.epsilon,
        diagram=format_diagram(po.cartan_type, partition_to_diagram(po)),
        basis=list(basis.B),
        reduced_basis=list(basis.B_tilde),
        k_max=basis.k_max,
        component_group_order=component_group_order(po),
        simply_connected_order=component_group_order(po, simply_connected=True),
        lifts=lifts,
        spin=[
            SpinRow(
                weight=format_weight(representation.weight.coords),
                dimension=representation.dimension,
                minimal_weight=format_weight(representation.minimal_weight.coords),
            )
            for representation in spin.representations
        ],
        spin_reason=spin.reason,
    )


def cmd_type_a(partition: str) -> TypeARecord:
    parts = parse_partition(partition)
    degree = sum(parts)
    cartan_type = make_cartan_type(Family.A, degree - 1)
    lifts = []
    for j, weight in enumerate(type_a_lifts(degree, parts)):
        formula = formula_lift(degree, parts, j)
        lifts.append(
            CentralRow(
                weight=format_weight(weight.coords),
                character=str(central_character(degree, parts, weight)),
                replaces="" if formula.coords == weight.coords else format_weight(formula.coords),
            )
        )
    return TypeARecord(
        group=str(cartan_type),
        partition=partition_label(parts),
        diagram=format_diagram(cartan_type, type_a_diagram(parts)),
        d=component_order(degree, parts),
        lifts=lifts,
    )


def cmd_verify() -> VerifyRecord:
    report = verify_all()
    return VerifyRecord(passed=report.passed, report=report)


def cmd_tables(group: str, orbit: str | None = None) -> TableRecord:
    cartan_type = parse_cartan_type(group)
    rows = [row for row in parse_goldens() if row.group == cartan_type]
    if orbit is not None:
        wanted = normalize_orbit_name(orbit)
        rows = [row for row in rows if normalize_orbit_name(row.orbit_name) == wanted]
    log.info(f"Computing {len(rows)} table rows for {cartan_type}...")
    return TableRecord(group=str(cartan_type), rows=[computed_row(row) for row in rows])
