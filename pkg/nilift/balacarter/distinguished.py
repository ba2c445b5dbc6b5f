from fractions import Fraction

from nilift.balacarter.heights import distinguished_labels
from nilift.balacarter.naming import labeling_name
from nilift.balacarter.subsystems import subset_cartan_matrix, subset_vectors
from nilift.databases import orbit_db
from nilift.models.roots import Coweight, RootSystem
from nilift.models.subsystems import DistinguishedLabeling, Subsystem
from nilift.rootdata.root_system import build_root_system
from nilift.utils.linalg_utils import inverse


def solve_h1(rs: RootSystem, subsystem: Subsystem, labels, inverted=None) -> Coweight:
    """The element h1 of the span of the J-coroots with beta(h1) = label(beta) for beta in J."""
    coords = [Fraction(0)] * rs.rank
    if not any(labels):
        return Coweight(coords=coords)
    if inverted is None:
        inverted = inverse(subset_cartan_matrix(rs, subsystem.subset))
    vectors = subset_vectors(rs, subsystem.subset)
    for b, vector in enumerate(vectors):
        weight = sum((inverted[b][a] * label for a, label in enumerate(labels)), Fraction(0))
        if not weight:
            continue
        for i, c in enumerate(rs.coroot(vector)):
            coords[i] += weight * c
    return Coweight(coords=coords)


def enumerate_distinguished(subsystem: Subsystem) -> list[DistinguishedLabeling]:
    cartan_type = subsystem.subset.cartan_type
    cache = orbit_db.labelings.setdefault(cartan_type, {})
    if subsystem.subset.nodes in cache:
        return cache[subsystem.subset.nodes]
    rs = build_root_system(cartan_type)
    inverted = None
    labelings = []
    for labels in distinguished_labels(subsystem):
        if inverted is None and any(labels):
            inverted = inverse(subset_cartan_matrix(rs, subsystem.subset))
        labelings.append(
            DistinguishedLabeling(
                subsystem=subsystem,
                labels=labels,
                h1=solve_h1(rs, subsystem, labels, inverted),
                bala_carter_name=labeling_name(subsystem, labels),
            )
        )
    cache[subsystem.subset.nodes] = labelings
    return labelings
