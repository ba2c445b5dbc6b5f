from nilift.balacarter.subsystems import subset_coordinates
from nilift.exceptions import (
    AmbiguousResidueException,
    DescentInconsistencyException,
    OrbitMismatchException,
    WeightDoesNotDescendException,
)
from nilift.lifting.weights import weight_orbit
from nilift.logger import log
from nilift.models.base import Basis, Vector
from nilift.models.lifting import CyclotomicTrace, LeviWeight
from nilift.models.orbits import PseudoLeviPair
from nilift.models.roots import RootSystem, Weight
from nilift.rootdata.root_system import build_root_system
from nilift.rootdata.weyl import apply_word
from nilift.utils.string_utils import format_weight


def _check_pair(lw: LeviWeight, pair: PseudoLeviPair):
    if (
        pair.labeling.subset.cartan_type != lw.orbit.cartan_type
        or pair.diagram != lw.orbit.diagram
    ):
        raise OrbitMismatchException(
            f"pair {pair.name} {pair.nodes} does not belong to orbit {lw.orbit.name}"
        )


def pulled_back(rs: RootSystem, pair: PseudoLeviPair, weight: Weight) -> Vector:
    """Simple-root coordinates of w^-1(weight) for the pair's conjugating word w."""
    image = apply_word(rs, pair.word.inverse(), rs.in_basis(weight, Basis.Root))
    return image.coords


def descent_coordinates(rs: RootSystem, pair: PseudoLeviPair, weight: Weight) -> Vector | None:
    return subset_coordinates(rs, pair.labeling.subset, pulled_back(rs, pair, weight))


def descends(lw: LeviWeight, pair: PseudoLeviPair) -> bool:
    """Every weight of the orbit of lambda must lie in the rational span of w(J)."""
    _check_pair(lw, pair)
    rs = build_root_system(lw.orbit.cartan_type)
    verdicts = {
        descent_coordinates(rs, pair, weight) is not None
        for weight in weight_orbit(lw).weights
    }
    if len(verdicts) != 1:
        raise DescentInconsistencyException(
            f"weights of the orbit of {format_weight(lw.weight.coords)} disagree"
            f" on descent through {pair.name}"
        )
    return verdicts.pop()


def residue(rs: RootSystem, pair: PseudoLeviPair, weight: Weight) -> int:
    """The exponent a in [0, d) with w^-1(weight) = a * tau modulo the lattice of J."""
    coordinates = descent_coordinates(rs, pair, weight)
    if coordinates is None:
        raise WeightDoesNotDescendException(
            f"{format_weight(rs.in_basis(weight, Basis.Fundamental).coords)} is not in"
            f" the rational span of {pair.labeling.subset}"
        )
    torsion = pair.torsion
    tau = subset_coordinates(rs, pair.labeling.subset, torsion.tau.coords)
    solutions = [
        a
        for a in range(torsion.d)
        if all((x - a * t).denominator == 1 for x, t in zip(coordinates, tau))
    ]
    if not solutions:
        raise WeightDoesNotDescendException(
            f"{format_weight(rs.in_basis(weight, Basis.Fundamental).coords)} is not congruent"
            f" to a multiple of tau modulo the lattice of {pair.labeling.subset}"
        )
    if len(solutions) > 1:
        raise AmbiguousResidueException(
            f"residues {solutions} all solve the congruence for {pair.labeling.subset}"
        )
    return solutions[0]


def character(lw: LeviWeight, pair: PseudoLeviPair) -> CyclotomicTrace:
    _check_pair(lw, pair)
    rs = build_root_system(lw.orbit.cartan_type)
    exponents = [residue(rs, pair, weight) for weight in weight_orbit(lw).weights]
    trace = CyclotomicTrace.from_exponents(pair.torsion.d, exponents)
    log.debug(f"Trace of {format_weight(lw.weight.coords)} on {pair.name} {pair.nodes}: {trace}")
    return trace
