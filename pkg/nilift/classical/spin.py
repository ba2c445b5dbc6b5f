from fractions import Fraction

from nilift.classical.characters import spin_condition
from nilift.classical.partitions import component_basis, partition_to_diagram
from nilift.models.base import Basis, Family
from nilift.models.partitions import PartitionOrbit, SpinRepresentation, SpinResult
from nilift.models.roots import Weight


def _fundamental(n: int, node: int) -> Weight:
    return Weight(coords=[int(k == node) for k in range(1, n + 1)], basis=Basis.Fundamental)


def _minimal(po: PartitionOrbit, diagram, weight: Weight) -> Weight:
    # subtract varpi_i for the largest nonzero node below the spin nodes
    last = po.n - 1 if po.family == Family.B else po.n - 2
    nonzero = [node for node in range(1, last + 1) if diagram[node - 1]]
    if not nonzero:
        return weight
    coords = list(weight.coords)
    coords[max(nonzero) - 1] -= Fraction(1)
    return Weight(coords=coords, basis=Basis.Fundamental)


def spin_representations(po: PartitionOrbit) -> SpinResult:
    """Representations of A(e) for the spin cover that do not factor through the adjoint group."""
    if po.epsilon != 0:
        return SpinResult(reason="spin representations only arise in types B and D")
    if not spin_condition(po):
        return SpinResult(
            reason=f"{po.label} has an odd part of multiplicity at least two;"
            f" the kernel of the spin cover acts trivially"
        )
    n = po.n
    m = component_basis(po).m
    diagram = partition_to_diagram(po)
    if po.family == Family.B:
        nodes = [n]
        dimension = 2 ** ((m - 1) // 2)
    elif po.is_very_even:
        nodes = [po.very_even_node]
        dimension = 1
    else:
        nodes = [n - 1, n]
        dimension = 2 ** (m // 2 - 1)
    representations = []
    for node in nodes:
        weight = _fundamental(n, node)
        representations.append(
            SpinRepresentation(
                weight=weight,
                dimension=dimension,
                minimal_weight=_minimal(po, diagram, weight),
            )
        )
    return SpinResult(representations=tuple(representations))
