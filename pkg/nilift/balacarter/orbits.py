from collections import defaultdict

from nilift import config
from nilift.balacarter.distinguished import enumerate_distinguished
from nilift.balacarter.naming import same_label, table_names, with_prime
from nilift.balacarter.subsystems import enumerate_subsystems
from nilift.balacarter.torsion import torsion_data
from nilift.classical.partitions import partition_names
from nilift.databases import orbit_db
from nilift.exceptions import (
    MissingOrbitNameException,
    UnknownOrbitException,
    WeightSyntaxException,
)
from nilift.logger import log
from nilift.models.orbits import OrbitRecord, PseudoLeviPair
from nilift.models.roots import RootSystem
from nilift.models.subsystems import DistinguishedLabeling, split_label
from nilift.rootdata.root_system import build_root_system
from nilift.rootdata.weyl import diagram_of, dominate, orbit_dimension
from nilift.utils.string_utils import format_diagram, normalize_orbit_name, parse_diagram


def _record(rs: RootSystem, diagram, name: str = "", derived_name: str = "") -> OrbitRecord:
    return OrbitRecord(
        cartan_type=rs.cartan_type,
        diagram=diagram,
        name=name or derived_name or format_diagram(rs.cartan_type, diagram),
        derived_name=derived_name,
        dimension=orbit_dimension(rs, diagram),
        levi_nodes=tuple(node for node, label in enumerate(diagram, start=1) if label == 0),
    )


def orbit_of(labeling: DistinguishedLabeling) -> OrbitRecord:
    rs = build_root_system(labeling.subset.cartan_type)
    dominant, _ = dominate(rs, labeling.h1)
    diagram = diagram_of(rs, dominant)
    if rs.rank <= config.MAX_CATALOG_RANK:
        for orbit in orbit_catalog(rs):
            if orbit.diagram == diagram:
                return orbit
    return _record(rs, diagram)


def orbit_catalog(rs: RootSystem) -> list[OrbitRecord]:
    """Every nilpotent orbit, from the Levi subsets of the simple roots and their labelings."""
    if rs.cartan_type in orbit_db.catalogs:
        return orbit_db.catalogs[rs.cartan_type]
    log.info(f"Building orbit catalog for {rs.cartan_type}...")
    derived: dict[tuple[int, ...], str] = {}
    for subsystem in enumerate_subsystems(rs, include_affine=False):
        for labeling in enumerate_distinguished(subsystem):
            dominant, _ = dominate(rs, labeling.h1)
            derived.setdefault(diagram_of(rs, dominant), labeling.bala_carter_name)
    exceptional = is_exceptional(rs)
    if exceptional:
        derived = _add_primes(rs, derived)
        names = table_names(rs.cartan_type)
    else:
        names = partition_names(rs.cartan_type)
    records = []
    for diagram, derived_name in derived.items():
        name = names.get(diagram, "")
        if not name:
            raise MissingOrbitNameException(
                f"no name table entry for {rs.cartan_type} diagram"
                f" {format_diagram(rs.cartan_type, diagram, compact=True)}"
            )
        if exceptional and not same_label(name.rstrip("'"), derived_name.rstrip("'")):
            log.warning(
                f"Name table entry {name} differs from derived label {derived_name}"
                f" for {rs.cartan_type}"
            )
        records.append(_record(rs, diagram, name, derived_name))
    records.sort(key=lambda orbit: (orbit.dimension, orbit.diagram))
    orbit_db.catalogs[rs.cartan_type] = records
    return records


def _add_primes(rs: RootSystem, derived: dict) -> dict:
    groups = defaultdict(list)
    for diagram, name in derived.items():
        groups[name].append(diagram)
    for name, diagrams in groups.items():
        if len(diagrams) < 2:
            continue
        ordered = sorted(diagrams, key=lambda diagram: -orbit_dimension(rs, diagram))
        for primes, diagram in enumerate(ordered, start=1):
            derived[diagram] = with_prime(name, primes)
    return derived


def _pair_index(rs: RootSystem) -> dict[tuple[int, ...], list[PseudoLeviPair]]:
    if rs.cartan_type in orbit_db.pairs:
        return orbit_db.pairs[rs.cartan_type]
    log.info(f"Indexing pseudo-Levi pairs of {rs.cartan_type}...")
    index = defaultdict(list)
    for subsystem in enumerate_subsystems(rs, include_affine=True):
        torsion = None
        for labeling in enumerate_distinguished(subsystem):
            if torsion is None:
                torsion = torsion_data(rs, subsystem.subset)
            dominant, word = dominate(rs, labeling.h1)
            diagram = diagram_of(rs, dominant)
            index[diagram].append(
                PseudoLeviPair(labeling=labeling, word=word, torsion=torsion, diagram=diagram)
            )
        log.debug(f"Indexed pairs of {subsystem.subset}")
    orbit_db.pairs[rs.cartan_type] = dict(index)
    return orbit_db.pairs[rs.cartan_type]


def class_parameters(orbit: OrbitRecord) -> list[PseudoLeviPair]:
    rs = build_root_system(orbit.cartan_type)
    return list(_pair_index(rs).get(orbit.diagram, []))


def bala_carter_pair(orbit: OrbitRecord) -> PseudoLeviPair:
    """The first pair with J inside the simple roots: it parametrizes the trivial class."""
    for pair in class_parameters(orbit):
        if pair.trivial:
            return pair
    raise RuntimeError(
        f"orbit {orbit.name} of {orbit.cartan_type} has no pair"
        f" with a Levi subset of the simple roots"
    )


def find_orbit(rs: RootSystem, text: str) -> OrbitRecord:
    """Looks an orbit up by printed name, derived label or weighted diagram."""
    catalog = orbit_catalog(rs)
    wanted = normalize_orbit_name(text)
    for orbit in catalog:
        if wanted in (normalize_orbit_name(orbit.name), orbit.derived_name):
            return orbit
    if not wanted.endswith("'"):
        matches = [
            orbit
            for orbit in catalog
            if split_label(orbit.derived_name) == split_label(wanted)
            or (orbit.name and split_label(normalize_orbit_name(orbit.name)) == split_label(wanted))
        ]
        if len(matches) == 1:
            return matches[0]
    try:
        diagram = parse_diagram(rs.cartan_type, text)
    except WeightSyntaxException:
        raise UnknownOrbitException(f"no orbit of {rs.cartan_type} is called '{text}'")
    for orbit in catalog:
        if orbit.diagram == diagram:
            return orbit
    raise UnknownOrbitException(f"{text} is not the diagram of an orbit of {rs.cartan_type}")


def is_exceptional(rs: RootSystem) -> bool:
    return rs.cartan_type.family.value in config.EXCEPTIONAL_FAMILIES
