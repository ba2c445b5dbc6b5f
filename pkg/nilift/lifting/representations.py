from collections import defaultdict
from collections.abc import Iterator
from fractions import Fraction
from math import isqrt

from nilift import config
from nilift.balacarter.orbits import bala_carter_pair, class_parameters
from nilift.exceptions import (
    InconsistentTraceException,
    LiftSearchExhaustedException,
    NiliftException,
)
from nilift.lifting.descent import character, descends
from nilift.lifting.weights import is_minuscule, make_levi_weight, weight_orbit
from nilift.logger import log
from nilift.models.base import Basis
from nilift.models.lifting import ClassTrace, LeviWeight, RepresentationReport
from nilift.models.orbits import OrbitRecord
from nilift.models.roots import RootSystem, Weight
from nilift.rootdata.root_system import build_root_system
from nilift.utils.string_utils import format_weight


def _class_names(pairs) -> dict[int, str]:
    """Class name per pair; equal subsystem labels with different d_J are told apart."""
    orders = defaultdict(set)
    for pair in pairs:
        orders[pair.name].add(pair.torsion.d)
    return {
        id(pair): pair.name if len(orders[pair.name]) == 1 else f"{pair.name}[d={pair.torsion.d}]"
        for pair in pairs
    }


def class_names(orbit: OrbitRecord) -> list[str]:
    """Distinct class parameter names of an orbit, the trivial class first."""
    pairs = class_parameters(orbit)
    names = _class_names(pairs)
    ordered = sorted(pairs, key=lambda pair: (not pair.trivial, pair.torsion.d, names[id(pair)]))
    return list(dict.fromkeys(names[id(pair)] for pair in ordered))


def identify_representation(lw: LeviWeight) -> RepresentationReport:
    """Traces of the lift on every class parameter of the orbit, one entry per class name."""
    pairs = class_parameters(lw.orbit)
    dimension = len(weight_orbit(lw))
    if not descends(lw, bala_carter_pair(lw.orbit)):
        return RepresentationReport(
            orbit=lw.orbit, weight=lw.weight, dimension=dimension, descends=False
        )
    names = _class_names(pairs)
    classes: dict[str, ClassTrace] = {}
    for pair in pairs:
        name = names[id(pair)]
        trace = character(lw, pair)
        if name in classes:
            if not classes[name].trace.same_value(trace):
                raise InconsistentTraceException(
                    f"class {name} of {lw.orbit.name} has traces {classes[name].trace}"
                    f" on {classes[name].nodes} and {trace} on {pair.nodes}"
                    f" for {format_weight(lw.weight.coords)}"
                )
            continue
        classes[name] = ClassTrace(
            name=name, trace=trace, nodes=pair.nodes, d=pair.torsion.d, trivial=pair.trivial
        )
    ordered = sorted(classes.values(), key=lambda entry: (not entry.trivial, entry.d, entry.name))
    return RepresentationReport(
        orbit=lw.orbit, weight=lw.weight, dimension=dimension, classes=tuple(ordered)
    )


def character_target(lw: LeviWeight) -> dict[str, int | None]:
    return identify_representation(lw).character


def representation_label(report: RepresentationReport) -> str:
    values = [entry.trace.value for entry in report.classes]
    if not report.descends:
        return "does not descend"
    if report.dimension == 1:
        if all(value == 1 for value in values):
            return "trivial"
        if all(value in (1, -1) for value in values):
            return "sign"
    if report.dimension == 2 and set(values) <= {2, 0, -1} and -1 in values:
        return "standard"
    return f"dimension {report.dimension}"


def _gram(rs: RootSystem) -> list[list[Fraction]]:
    weights = rs.fundamental_weights
    return [[rs.inner(a, b) for b in weights] for a in weights]


def _quadratic_decomposition(gram) -> list[list[Fraction]]:
    # q(x) = sum_i Q[i][i] (x_i + sum_{j > i} Q[i][j] x_j)^2
    n = len(gram)
    q = [list(row) for row in gram]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for m in range(k, n):
                q[k][m] -= q[k][i] * q[i][m]
    return q


def short_vectors(gram, bound: Fraction, allowed=None) -> list[tuple[int, ...]]:
    """Integer vectors x with x^T G x <= bound; allowed[i] optionally restricts coordinate i."""
    n = len(gram)
    q = _quadratic_decomposition(gram)
    results = []
    x = [0] * n

    def search(i: int, remaining: Fraction):
        if i < 0:
            results.append(tuple(x))
            return
        center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        radius = isqrt(int(remaining / q[i][i]) + 1) + 1
        low = int(center) - radius - 1
        high = int(center) + radius + 1
        candidates = allowed[i] if allowed and allowed[i] is not None else range(low, high + 1)
        for value in candidates:
            spent = q[i][i] * (value - center) ** 2
            if spent <= remaining:
                x[i] = value
                search(i - 1, remaining - spent)
        x[i] = 0

    search(n - 1, Fraction(bound))
    return results


def _norm(gram, vector) -> Fraction:
    return sum(
        (gram[i][j] * a * b for i, a in enumerate(vector) for j, b in enumerate(vector) if a and b),
        Fraction(0),
    )


def weight_norm(rs: RootSystem, weight: Weight) -> Fraction:
    return _norm(_gram(rs), rs.in_basis(weight, Basis.Fundamental).coords)


def levi_weights_by_norm(orbit: OrbitRecord, bound) -> Iterator[LeviWeight]:
    """Levi-dominant weights minuscule for the Levi subgroup, by norm up to the bound."""
    rs = build_root_system(orbit.cartan_type)
    gram = _gram(rs)
    levi = set(orbit.levi_nodes)
    allowed = [(0, 1) if node in levi else None for node in range(1, rs.rank + 1)]
    tried = set()
    limit = Fraction(1)
    while True:
        limit = min(2 * limit, Fraction(bound))
        candidates = [
            vector
            for vector in short_vectors(gram, limit, allowed)
            if vector not in tried
        ]
        # equal norms: lexicographically largest coordinates first
        candidates.sort(key=lambda vector: (_norm(gram, vector), tuple(-c for c in vector)))
        for vector in candidates:
            tried.add(vector)
            lw = make_levi_weight(orbit, Weight(coords=vector, basis=Basis.Fundamental))
            if is_minuscule(rs, lw):
                yield lw
        if limit >= bound:
            return


def minimal_lift_search(
    orbit: OrbitRecord, target: dict[str, int | None], bound=None
) -> LeviWeight:
    """Shortest Levi-dominant minuscule weight whose traces match the target character."""
    bound = config.LIFT_NORM_BOUND if bound is None else bound
    for lw in levi_weights_by_norm(orbit, bound):
        try:
            report = identify_representation(lw)
        except NiliftException as e:
            log.debug(f"Skipping {format_weight(lw.weight.coords)}: {e}")
            continue
        character = report.character
        if report.descends and all(
            name in character and character[name] == value for name, value in target.items()
        ):
            return lw
    raise LiftSearchExhaustedException(
        f"no lift of {orbit.name} with the requested character"
        f" has squared length at most {bound}"
    )
