from collections import deque
from fractions import Fraction

from nilift.exceptions import (
    NonMinusculeWeightException,
    NotLeviDominantException,
    RankMismatchException,
)
from nilift.models.base import Basis
from nilift.models.lifting import LeviWeight, WeightOrbit
from nilift.models.orbits import OrbitRecord
from nilift.models.roots import RootSystem, Weight
from nilift.rootdata.root_system import build_root_system
from nilift.rootdata.weyl import reflect_weight_coords
from nilift.utils.string_utils import format_weight


def make_levi_weight(orbit: OrbitRecord, weight: Weight) -> LeviWeight:
    rs = build_root_system(orbit.cartan_type)
    if len(weight.coords) != rs.rank:
        raise RankMismatchException(
            f"weight {weight.coords} does not have {rs.rank} coordinates"
        )
    fundamental = rs.in_basis(weight, Basis.Fundamental)
    negative = [node for node in orbit.levi_nodes if fundamental.coords[node - 1] < 0]
    if negative:
        raise NotLeviDominantException(
            f"{format_weight(fundamental.coords)} is not dominant for the Levi subgroup"
            f" of {orbit.name}: negative on nodes {negative}"
        )
    return LeviWeight(orbit=orbit, weight=fundamental, levi_dominant=True)


def levi_positive_roots(rs: RootSystem, orbit: OrbitRecord) -> list[tuple[int, ...]]:
    levi = set(orbit.levi_nodes)
    return [
        root
        for root in rs.positive_roots
        if all(c == 0 or node in levi for node, c in enumerate(root, start=1))
    ]


def is_minuscule(rs: RootSystem, lw: LeviWeight) -> bool:
    """lambda(beta coroot) lies in {-1, 0, 1} for every root beta of the Levi subgroup."""
    coords = lw.weight.coords
    for root in levi_positive_roots(rs, lw.orbit):
        value = sum((c * coords[i] for i, c in enumerate(rs.coroot(root)) if c), Fraction(0))
        if abs(value) > 1:
            return False
    return True


def weight_orbit(lw: LeviWeight) -> WeightOrbit:
    """Orbit of the highest weight under the Weyl group of the Levi subgroup, breadth first."""
    rs = build_root_system(lw.orbit.cartan_type)
    if any(lw.weight.coords[node - 1] < 0 for node in lw.orbit.levi_nodes):
        raise NotLeviDominantException(
            f"{format_weight(lw.weight.coords)} is not dominant for the Levi subgroup"
        )
    if not is_minuscule(rs, lw):
        raise NonMinusculeWeightException(
            f"{format_weight(lw.weight.coords)} is not minuscule for the Levi subgroup"
            f" of {lw.orbit.name}"
        )
    start = lw.weight.coords
    seen = {start}
    ordered = [start]
    queue = deque([start])
    while queue:
        coords = queue.popleft()
        for node in lw.orbit.levi_nodes:
            if coords[node - 1] == 0:
                continue
            image = reflect_weight_coords(rs, coords, Basis.Fundamental, node)
            if image not in seen:
                seen.add(image)
                ordered.append(image)
                queue.append(image)
    return WeightOrbit(
        source=lw,
        weights=tuple(Weight(coords=coords, basis=Basis.Fundamental) for coords in ordered),
    )
