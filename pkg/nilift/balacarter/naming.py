import csv
from collections import defaultdict
from functools import lru_cache
from pathlib import Path

from nilift import config
from nilift.balacarter.heights import distinguished_labels
from nilift.balacarter.subsystems import build_subsystem, make_subset
from nilift.databases import orbit_db
from nilift.exceptions import GoldenFormatException
from nilift.logger import log
from nilift.models.base import Family
from nilift.models.roots import CartanType
from nilift.models.subsystems import Subsystem, merge_labels, split_label
from nilift.rootdata.cartan import parse_cartan_type
from nilift.rootdata.root_system import build_root_system
from nilift.rootdata.weyl import orbit_dimension
from nilift.utils.string_utils import normalize_orbit_name, parse_diagram


@lru_cache(maxsize=None)
def distinguished_names(cartan_type: CartanType) -> dict[tuple[int, ...], str]:
    """Bala-Carter labels of the distinguished orbits of a simple type, keyed by diagram."""
    rs = build_root_system(cartan_type)
    subsystem = build_subsystem(rs, make_subset(rs, range(1, rs.rank + 1)))
    labelings = sorted(
        distinguished_labels(subsystem),
        key=lambda labels: (-orbit_dimension(rs, labels), labels),
    )
    names = {}
    if cartan_type.family in (Family.B, Family.C):
        for position, labels in enumerate(labelings):
            names[labels] = str(cartan_type) + (f"(a{position})" if position else "")
        return names
    by_zeros = defaultdict(list)
    for labels in labelings:
        by_zeros[labels.count(0)].append(labels)
    for zeros, group in by_zeros.items():
        for position, labels in enumerate(group):
            if zeros == 0:
                names[labels] = str(cartan_type)
            else:
                names[labels] = f"{cartan_type}({'ab'[min(position, 1)]}{zeros})"
    return names


def labeling_name(subsystem: Subsystem, labels) -> str:
    nodes = subsystem.subset.nodes
    component_names = []
    for component in subsystem.components:
        component_labels = tuple(labels[nodes.index(node)] for node in component.nodes)
        name = distinguished_names(component.cartan_type).get(component_labels)
        if name is None:
            raise RuntimeError(
                f"labels {component_labels} are not distinguished"
                f" for a component of type {component.cartan_type}"
            )
        component_names.append(("~" if component.short else "") + name)
    return merge_labels(component_names)


def same_label(left: str, right: str) -> bool:
    return split_label(normalize_orbit_name(left)) == split_label(normalize_orbit_name(right))


def with_prime(name: str, primes: int) -> str:
    if "+" in name or name[0].isdigit():
        name = f"({name})"
    return name + "'" * primes


def load_name_table(path: Path | None = None) -> dict[CartanType, dict[tuple[int, ...], str]]:
    """Reads 'group<TAB>diagram<TAB>name' records; diagrams are written in row layout."""
    path = path or Path(config.DATA_DIRECTORY) / config.NAME_TABLE_FILE
    table: dict[CartanType, dict[tuple[int, ...], str]] = defaultdict(dict)
    with open(path, newline="") as name_file:
        rows = csv.reader(
            (line for line in name_file if line.strip() and not line.startswith("#")),
            delimiter="\t",
        )
        for row in rows:
            if len(row) != 3:
                raise GoldenFormatException(f"malformed name table record {row} in {path}")
            cartan_type = parse_cartan_type(row[0])
            table[cartan_type][parse_diagram(cartan_type, row[1])] = row[2].strip()
    log.debug(f"Loaded {sum(len(names) for names in table.values())} orbit names from {path}")
    return table


def table_names(cartan_type: CartanType) -> dict[tuple[int, ...], str]:
    if not orbit_db.names:
        orbit_db.names.update(load_name_table())
    return orbit_db.names.get(cartan_type, {})
