from collections import Counter

from sympy.utilities.iterables import partitions

from nilift.exceptions import InvalidPartitionException
from nilift.models.base import Family
from nilift.models.orbits import OrbitRecord
from nilift.models.partitions import ComponentBasis, PartitionOrbit
from nilift.models.roots import CartanType
from nilift.rootdata.cartan import make_cartan_type
from nilift.rootdata.root_system import build_root_system
from nilift.rootdata.weyl import orbit_dimension


def validate(po: PartitionOrbit) -> bool:
    """Parts of parity epsilon must occur with even multiplicity."""
    if sum(po.parts) != po.N or any(part <= 0 for part in po.parts):
        return False
    if list(po.parts) != sorted(po.parts, reverse=True):
        return False
    if po.epsilon == 1 and po.N % 2:
        return False
    counts = Counter(po.parts)
    return all(count % 2 == 0 for part, count in counts.items() if part % 2 == po.epsilon)


def make_partition_orbit(epsilon: int, parts, very_even_node: int | None = None) -> PartitionOrbit:
    parts = tuple(sorted(parts, reverse=True))
    if epsilon not in (0, 1):
        raise InvalidPartitionException(f"epsilon must be 0 or 1, not {epsilon}")
    po = PartitionOrbit(epsilon=epsilon, N=sum(parts), parts=parts)
    if not validate(po):
        kind = "even" if epsilon == 0 else "odd"
        raise InvalidPartitionException(
            f"{list(parts)} is not a valid partition for epsilon = {epsilon}:"
            f" every {kind} part needs an even multiplicity"
        )
    # raises for ranks outside the classical families
    make_cartan_type(po.family, po.n)
    if po.is_very_even:
        node = very_even_node or po.n
        if node not in (po.n - 1, po.n):
            raise InvalidPartitionException(
                f"very even partition {list(parts)} needs node {po.n - 1} or {po.n}, not {node}"
            )
        po = po.model_copy(update={"very_even_node": node})
    return po


def component_basis(po: PartitionOrbit) -> ComponentBasis:
    if not validate(po):
        raise InvalidPartitionException(f"{list(po.parts)} is not a valid partition")
    B = [
        j
        for j in range(1, len(po.parts) + 1)
        if po.part(j) > po.part(j + 1) and po.part(j) % 2 != po.epsilon
    ]
    if po.family == Family.C:
        # the appended zero part
        B.append(len(po.parts) + 1)
    if not B:
        return ComponentBasis()
    k_max = max(B)
    B_tilde = tuple(j for j in B if j != k_max)
    return ComponentBasis(B=tuple(B), k_max=k_max, B_tilde=B_tilde, m=len(B_tilde) + 1)


def exponents(parts) -> list[int]:
    """Eigenvalues lambda_j + 1 - 2i of the neutral element, largest first."""
    return sorted((part + 1 - 2 * i for part in parts for i in range(1, part + 1)), reverse=True)


def partition_to_diagram(po: PartitionOrbit) -> tuple[int, ...]:
    n = po.n
    h = exponents(po.parts)[:n]
    labels = [h[k] - h[k + 1] for k in range(n - 1)]
    if po.family == Family.B:
        labels.append(h[n - 1])
    elif po.family == Family.C:
        labels.append(2 * h[n - 1])
    else:
        labels.append(h[n - 2] + h[n - 1])
        if po.is_very_even and po.very_even_node == n - 1:
            labels[n - 2], labels[n - 1] = labels[n - 1], labels[n - 2]
    return tuple(labels)


def type_a_diagram(parts) -> tuple[int, ...]:
    h = exponents(parts)
    return tuple(h[k] - h[k + 1] for k in range(len(h) - 1))


def _orbit_record(cartan_type: CartanType, diagram, name: str) -> OrbitRecord:
    rs = build_root_system(cartan_type)
    return OrbitRecord(
        cartan_type=cartan_type,
        diagram=diagram,
        name=name,
        derived_name=name,
        dimension=orbit_dimension(rs, diagram),
        levi_nodes=tuple(node for node, label in enumerate(diagram, start=1) if label == 0),
    )


def partition_label(parts) -> str:
    return "[" + ", ".join(str(part) for part in parts) + "]"


def partition_to_dynkin(po: PartitionOrbit | tuple[int, ...]) -> OrbitRecord:
    """Orbit record of a classical partition orbit, or of a bare partition in type A."""
    if isinstance(po, PartitionOrbit):
        if not validate(po):
            raise InvalidPartitionException(f"{list(po.parts)} is not a valid partition")
        return _orbit_record(po.cartan_type, partition_to_diagram(po), po.label)
    parts = tuple(sorted(po, reverse=True))
    if not parts or any(part <= 0 for part in parts) or sum(parts) < 2:
        raise InvalidPartitionException(f"{list(parts)} is not a partition of an integer >= 2")
    return _orbit_record(
        make_cartan_type(Family.A, sum(parts) - 1), type_a_diagram(parts), partition_label(parts)
    )


def all_partitions(N: int) -> list[tuple[int, ...]]:
    result = []
    for multiplicities in partitions(N):
        parts = []
        for part, count in multiplicities.items():
            parts.extend([part] * count)
        result.append(tuple(sorted(parts, reverse=True)))
    return sorted(result, reverse=True)


def valid_partitions(cartan_type: CartanType) -> list[PartitionOrbit]:
    """Partition orbits of a classical type; very even partitions appear once per flavor."""
    family = cartan_type.family
    n = cartan_type.rank
    epsilon = 1 if family == Family.C else 0
    N = 2 * n + 1 if family == Family.B else 2 * n
    orbits = []
    for parts in all_partitions(N):
        po = PartitionOrbit(epsilon=epsilon, N=N, parts=parts)
        if not validate(po):
            continue
        if po.is_very_even:
            orbits.append(po.model_copy(update={"very_even_node": n}))
            orbits.append(po.model_copy(update={"very_even_node": n - 1}))
        else:
            orbits.append(po)
    return orbits


def classical_catalog(cartan_type: CartanType) -> list[OrbitRecord]:
    if cartan_type.family == Family.A:
        records = [partition_to_dynkin(parts) for parts in all_partitions(cartan_type.rank + 1)]
    elif cartan_type.family in (Family.B, Family.C, Family.D):
        records = [partition_to_dynkin(po) for po in valid_partitions(cartan_type)]
    else:
        raise InvalidPartitionException(f"{cartan_type} is not a classical type")
    return sorted(records, key=lambda orbit: (orbit.dimension, orbit.diagram))


def partition_names(cartan_type: CartanType) -> dict[tuple[int, ...], str]:
    return {orbit.diagram: orbit.name for orbit in classical_catalog(cartan_type)}
