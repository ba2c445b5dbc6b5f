from math import gcd

from nilift import config
from nilift.balacarter.orbits import bala_carter_pair
from nilift.classical.partitions import partition_to_dynkin
from nilift.exceptions import (
    DescentInconsistencyException,
    InvalidPartitionException,
    LiftSearchExhaustedException,
    NonMinusculeWeightException,
    WeightDoesNotDescendException,
)
from nilift.lifting.descent import descends
from nilift.lifting.representations import levi_weights_by_norm
from nilift.lifting.weights import make_levi_weight
from nilift.logger import log
from nilift.models.base import Basis
from nilift.models.lifting import CyclotomicTrace
from nilift.models.orbits import OrbitRecord
from nilift.models.roots import Weight
from nilift.utils.string_utils import format_weight


def _check(degree: int, parts) -> tuple[int, ...]:
    parts = tuple(sorted(parts, reverse=True))
    if degree < 2 or sum(parts) != degree or any(part <= 0 for part in parts):
        raise InvalidPartitionException(f"{list(parts)} is not a partition of {degree}")
    return parts


def component_order(degree: int, parts) -> int:
    """A(e) is cyclic of order gcd of the parts in SL_l."""
    result = 0
    for part in _check(degree, parts):
        result = gcd(result, part)
    return result


def formula_lift(degree: int, parts, j: int) -> Weight:
    """w_{jq} with q = degree / d, and w_0 = 0."""
    q = degree // component_order(degree, parts)
    coords = [0] * (degree - 1)
    if j:
        coords[j * q - 1] = 1
    return Weight(coords=coords, basis=Basis.Fundamental)


def _central_exponent(degree: int, weight: Weight) -> int:
    return sum(k * int(mu) for k, mu in enumerate(weight.coords, start=1)) % degree


def _descends(orbit: OrbitRecord, weight: Weight) -> bool:
    try:
        return descends(make_levi_weight(orbit, weight), bala_carter_pair(orbit))
    except (DescentInconsistencyException, NonMinusculeWeightException) as e:
        log.debug(f"{format_weight(weight.coords)} on {orbit.name}: {e}")
        return False


def _search_lift(degree: int, orbit: OrbitRecord, exponent: int, bound) -> Weight:
    for lw in levi_weights_by_norm(orbit, bound):
        if _central_exponent(degree, lw.weight) == exponent and _descends(orbit, lw.weight):
            return lw.weight
    raise LiftSearchExhaustedException(
        f"no lift of {orbit.name} with central character {exponent} mod {degree}"
        f" has squared length at most {bound}"
    )


def type_a_lifts(degree: int, parts, bound=None) -> list[Weight]:
    """One descending weight per character of Z/d, w_{jq} whenever that weight descends.

    When w_{jq} splits a GL_2 block of the Levi subgroup its weights disagree on
    descent, and the shortest descending weight with the same central character
    is used instead.
    """
    d = component_order(degree, parts)
    q = degree // d
    orbit = partition_to_dynkin(tuple(parts))
    bound = config.LIFT_NORM_BOUND if bound is None else bound
    weights = []
    for j in range(d):
        weight = formula_lift(degree, parts, j)
        if not _descends(orbit, weight):
            replacement = _search_lift(degree, orbit, j * q, bound)
            log.warning(
                f"{format_weight(weight.coords)} does not descend on {orbit.name},"
                f" using {format_weight(replacement.coords)}"
            )
            weight = replacement
        weights.append(weight)
    return weights


def central_character(degree: int, parts, weight: Weight) -> CyclotomicTrace:
    """Value of V_mu on the generator of A(e): xi^(c(mu)/q), c(mu) = sum k mu_k mod degree."""
    d = component_order(degree, parts)
    q = degree // d
    if weight.basis != Basis.Fundamental or len(weight.coords) != degree - 1:
        raise InvalidPartitionException(
            f"weight must be given by {degree - 1} fundamental-weight coordinates"
        )
    c = _central_exponent(degree, weight)
    if c % q:
        raise WeightDoesNotDescendException(
            f"central character {c} mod {degree} is not a multiple of {q}"
        )
    return CyclotomicTrace.from_exponents(d, [c // q])
