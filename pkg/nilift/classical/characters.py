from fractions import Fraction

from nilift.classical.partitions import component_basis, validate
from nilift.exceptions import InvalidPartitionException, InvalidSubsetException
from nilift.logger import log
from nilift.models.base import Basis, Family
from nilift.models.partitions import ChiWeight, PartitionOrbit
from nilift.models.roots import Weight


def sigma(po: PartitionOrbit, s: int) -> int:
    """Dimension of the isotropic subspace spanned by the v_ij with lambda_j + 2 - 2i >= s."""
    return sum((part - s) // 2 + 1 for part in po.parts if part >= s)


def even_odd_steps(po: PartitionOrbit) -> list[int]:
    """E and O: p, p - 2, ..., 2 and q, q - 2, ..., 3, largest first."""
    evens = [part for part in po.parts if part % 2 == 0]
    odds = [part for part in po.parts if part % 2 == 1]
    steps = []
    if evens:
        steps.extend(range(max(evens), 1, -2))
    if odds:
        steps.extend(range(max(odds), 2, -2))
    return sorted(steps, reverse=True)


def in_xi(po: PartitionOrbit, s: int) -> bool:
    value = sigma(po, s)
    if po.family == Family.B:
        return value != po.n
    if po.family == Family.D:
        return value not in (po.n - 1, po.n)
    return True


def epsilon_to_fundamental(po: PartitionOrbit, e) -> tuple[Fraction, ...]:
    """Fundamental coordinates mu(alpha_k coroot) of a torus character given on e_1..e_n."""
    n = po.n
    labels = [Fraction(e[k] - e[k + 1]) for k in range(n - 1)]
    if po.family == Family.B:
        labels.append(Fraction(2 * e[n - 1]))
    elif po.family == Family.C:
        labels.append(Fraction(e[n - 1]))
    else:
        labels.append(Fraction(e[n - 2] + e[n - 1]))
    return tuple(labels)


def chi_epsilon(po: PartitionOrbit, s: int) -> list[int]:
    # positions sigma(s + 1) + 1 .. sigma(s) carry the vectors of eigenvalue s - 1
    e = [0] * po.n
    for k in range(sigma(po, s + 1), sigma(po, s)):
        e[k] = 1
    return e


def chi_weight(po: PartitionOrbit, s: int) -> ChiWeight:
    if s < 2 or s > max(po.parts):
        raise InvalidPartitionException(f"s = {s} is not an element of E or O for {list(po.parts)}")
    coords = epsilon_to_fundamental(po, chi_epsilon(po, s))
    top = sigma(po, s)
    return ChiWeight(
        s=s,
        sigma_s=top,
        d_s=top - sigma(po, s + 1),
        weight=Weight(coords=coords, basis=Basis.Fundamental),
        in_xi=in_xi(po, s),
    )


def xi_formula(po: PartitionOrbit, s: int) -> tuple[Fraction, ...]:
    """varpi_sigma(s), minus varpi_sigma(s+1) unless s is the largest step."""
    coords = [Fraction(0)] * po.n
    coords[sigma(po, s) - 1] += 1
    if s != max(even_odd_steps(po)) and sigma(po, s + 1) > 0:
        coords[sigma(po, s + 1) - 1] -= 1
    return tuple(coords)


def chi_weights(po: PartitionOrbit) -> list[ChiWeight]:
    if not validate(po):
        raise InvalidPartitionException(f"{list(po.parts)} is not a valid partition")
    return [chi_weight(po, s) for s in even_odd_steps(po) if in_xi(po, s)]


def lift_character(po: PartitionOrbit, S) -> Weight:
    """chi_S, the sum of chi_{lambda_j} over j in S."""
    basis = component_basis(po)
    S = sorted(set(S))
    if any(j not in basis.B_tilde for j in S):
        raise InvalidSubsetException(
            f"{S} is not a subset of the reduced component basis {list(basis.B_tilde)}"
        )
    total = [Fraction(0)] * po.n
    for j in S:
        chi = chi_weight(po, po.part(j))
        if not chi.in_xi:
            log.warning(f"chi_{po.part(j)} of {po.label} lies outside the range of the xi formula")
        total = [a + b for a, b in zip(total, chi.weight.coords)]
    return Weight(coords=total, basis=Basis.Fundamental)


def evaluate_generator(po: PartitionOrbit, s: int, k: int) -> int:
    """chi_s on b_k: -1 exactly when some v_ik has lambda_k + 2 - 2i = s."""
    basis = component_basis(po)
    if k not in basis.B:
        raise InvalidSubsetException(f"{k} is not in the component basis {list(basis.B)}")
    if s not in even_odd_steps(po):
        raise InvalidPartitionException(f"s = {s} is not an element of E or O for {list(po.parts)}")
    solutions = [i for i in range(1, po.part(k) + 1) if po.part(k) + 2 - 2 * i == s]
    return -1 if len(solutions) % 2 else 1


def evaluate_reduced_generator(po: PartitionOrbit, s: int, k: int) -> int:
    """chi_s on the basis element b_k b_k' of A(e); b_kmax is the identity in type C."""
    basis = component_basis(po)
    if k not in basis.B_tilde:
        raise InvalidSubsetException(f"{k} is not in the reduced basis {list(basis.B_tilde)}")
    successor = basis.successor(k)
    value = evaluate_generator(po, s, k)
    if po.family == Family.C and successor == basis.k_max:
        return value
    return value * evaluate_generator(po, s, successor)


def restriction(po: PartitionOrbit, S) -> dict[int, int]:
    """Values of chi_S on the reduced basis of A(e)."""
    basis = component_basis(po)
    values = {}
    for k in basis.B_tilde:
        value = 1
        for j in S:
            value *= evaluate_reduced_generator(po, po.part(j), k)
        values[k] = value
    return values


def component_group_order(po: PartitionOrbit, simply_connected: bool = False) -> int:
    basis = component_basis(po)
    if simply_connected and po.family != Family.C and spin_condition(po):
        return 2 ** basis.m
    return basis.order


def spin_condition(po: PartitionOrbit) -> bool:
    """Orthogonal type with every odd part of multiplicity at most one."""
    if po.epsilon != 0:
        return False
    odd_counts = [po.parts.count(part) for part in set(po.parts) if part % 2]
    return all(count <= 1 for count in odd_counts)
