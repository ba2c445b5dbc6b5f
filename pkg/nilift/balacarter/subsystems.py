from fractions import Fraction
from itertools import combinations

from nilift.balacarter.components import connected_components, identify_component
from nilift.databases import orbit_db
from nilift.exceptions import InvalidSubsetException
from nilift.logger import log
from nilift.models.base import Family, IntVector, Vector
from nilift.models.roots import AFFINE_NODE, CartanType, RootSystem
from nilift.models.subsystems import Component, ExtendedSubset, Subsystem


def make_subset(rs: RootSystem, nodes) -> ExtendedSubset:
    nodes = tuple(sorted(set(nodes)))
    if any(not 0 <= node <= rs.rank for node in nodes):
        raise InvalidSubsetException(
            f"nodes {nodes} are not all extended simple roots of {rs.cartan_type}"
        )
    if len(nodes) == rs.rank + 1:
        raise InvalidSubsetException(
            f"the full extended diagram of {rs.cartan_type} is not a proper subset"
        )
    return ExtendedSubset(cartan_type=rs.cartan_type, nodes=nodes)


def subset_vectors(rs: RootSystem, subset: ExtendedSubset) -> list[IntVector]:
    return [rs.simple_root(node) for node in subset.nodes]


def subset_coordinates(rs: RootSystem, subset: ExtendedSubset, vector) -> Vector | None:
    """Coordinates of a vector over the subset's roots, or None outside their rational span."""
    finite = set(subset.finite_nodes)
    outside = [i for i in range(1, rs.rank + 1) if i not in finite]
    theta = rs.highest_root
    if not subset.has_affine_node:
        if any(vector[i - 1] for i in outside):
            return None
        return tuple(Fraction(vector[node - 1]) for node in subset.nodes)
    # v = sum x_i alpha_i + y (-theta), solved on the nodes outside J first
    ratios = {Fraction(-vector[i - 1], theta[i - 1]) for i in outside}
    if len(ratios) != 1:
        return None
    y = ratios.pop()
    return tuple(
        y if node == AFFINE_NODE else Fraction(vector[node - 1]) + y * theta[node - 1]
        for node in subset.nodes
    )


def subset_cartan_matrix(rs: RootSystem, subset: ExtendedSubset) -> tuple[tuple[int, ...], ...]:
    vectors = subset_vectors(rs, subset)
    norms = [rs.norm(vector) for vector in vectors]
    rows = []
    for a in vectors:
        row = []
        for b, norm in zip(vectors, norms):
            value = 2 * rs.inner(a, b) / norm
            if value.denominator != 1:
                raise RuntimeError(
                    f"subset {subset} of {rs.cartan_type} does not have an"
                    f" integral Cartan matrix"
                )
            row.append(int(value))
        rows.append(tuple(row))
    return tuple(rows)


def _components(rs: RootSystem, subset: ExtendedSubset, matrix) -> tuple[Component, ...]:
    components = []
    long_length = max(rs.root_lengths)
    for indices in connected_components(matrix):
        family, rank, ordered = identify_component(matrix, indices)
        nodes = tuple(subset.nodes[index] for index in ordered)
        short = (
            family == Family.A
            and rs.cartan_type.family in (Family.F, Family.G)
            and all(rs.norm(rs.simple_root(node)) < long_length for node in nodes)
        )
        components.append(
            Component(cartan_type=CartanType(family=family, rank=rank), nodes=nodes, short=short)
        )
    return tuple(components)


def build_subsystem(rs: RootSystem, subset: ExtendedSubset) -> Subsystem:
    roots = []
    positive_coordinates = []
    for root in rs.roots:
        coordinates = subset_coordinates(rs, subset, root)
        if coordinates is None or any(c.denominator != 1 for c in coordinates):
            continue
        roots.append(root)
        if all(c >= 0 for c in coordinates):
            positive_coordinates.append(tuple(int(c) for c in coordinates))
        elif not all(c <= 0 for c in coordinates):
            raise RuntimeError(
                f"root {root} has mixed signs over {subset}; the subset is not"
                f" a base of its subsystem"
            )
    matrix = subset_cartan_matrix(rs, subset)
    log.debug(f"Subsystem {subset} of {rs.cartan_type}: {len(roots)} roots")
    return Subsystem(
        subset=subset,
        roots=tuple(roots),
        positive_coordinates=tuple(positive_coordinates),
        components=_components(rs, subset, matrix),
    )


def enumerate_subsystems(rs: RootSystem, include_affine: bool = True) -> list[Subsystem]:
    nodes = list(range(0 if include_affine else 1, rs.rank + 1))
    subsystems = []
    for size in range(len(nodes) + 1):
        for chosen in combinations(nodes, size):
            if size == rs.rank + 1:
                continue
            subsystems.append(cached_subsystem(rs, make_subset(rs, chosen)))
    return sorted(subsystems, key=lambda subsystem: subsystem.subset.nodes)


def cached_subsystem(rs: RootSystem, subset: ExtendedSubset) -> Subsystem:
    cache = orbit_db.subsystems.setdefault(rs.cartan_type, {})
    if subset.nodes not in cache:
        cache[subset.nodes] = build_subsystem(rs, subset)
    return cache[subset.nodes]
