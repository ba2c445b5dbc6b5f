from fractions import Fraction

from nilift.balacarter.subsystems import subset_vectors
from nilift.models.base import Basis
from nilift.models.roots import RootSystem, Weight
from nilift.models.subsystems import ExtendedSubset, TorsionData
from nilift.utils.linalg_utils import torsion_of_quotient, vector_gcd


def torsion_data(rs: RootSystem, subset: ExtendedSubset) -> TorsionData:
    """d_J is the gcd of the marks outside J, and tau_J = (1/d_J) sum of c_a * a over them."""
    outside = subset.complement
    d = vector_gcd(rs.marks[node] for node in outside)
    tau = [Fraction(0)] * rs.rank
    for node in outside:
        vector = rs.simple_root(node)
        for i in range(rs.rank):
            tau[i] += Fraction(rs.marks[node] * vector[i], d)
    return TorsionData(subset=subset, d=d, tau=Weight(coords=tau, basis=Basis.Root))


def torsion_order(rs: RootSystem, subset: ExtendedSubset) -> int:
    """Order of the torsion of the root lattice modulo the lattice spanned by J."""
    return torsion_of_quotient(subset_vectors(rs, subset))
