from fractions import Fraction
from functools import lru_cache

from nilift.exceptions import InvalidCartanTypeException
from nilift.logger import log
from nilift.models.roots import CartanType, RootSystem
from nilift.rootdata.cartan import cartan_matrix, rank_is_valid
from nilift.utils.linalg_utils import inverse


def _positive_roots(matrix) -> list[tuple[int, ...]]:
    n = len(matrix)
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        next_layer = []
        for root in layer:
            for i in range(n):
                # p: how far the i-string through root extends downwards
                p = 0
                lower = list(root)
                while True:
                    lower[i] -= 1
                    if tuple(lower) not in roots:
                        break
                    p += 1
                pairing = sum(root[k] * matrix[k][i] for k in range(n))
                if p - pairing > 0:
                    raised = tuple(c + int(k == i) for k, c in enumerate(root))
                    if raised not in roots:
                        roots.add(raised)
                        next_layer.append(raised)
        next_layer.sort(reverse=True)
        ordered.extend(next_layer)
        layer = next_layer
    return ordered


def _root_lengths(matrix) -> tuple[Fraction, ...]:
    n = len(matrix)
    lengths: dict[int, Fraction] = {0: Fraction(1)}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j not in lengths and matrix[i][j] != 0:
                lengths[j] = lengths[i] * Fraction(matrix[j][i], matrix[i][j])
                stack.append(j)
    scale = Fraction(2) / max(lengths.values())
    return tuple(lengths[i] * scale for i in range(n))


@lru_cache(maxsize=None)
def build_root_system(cartan_type: CartanType) -> RootSystem:
    if not rank_is_valid(cartan_type.family, cartan_type.rank):
        raise InvalidCartanTypeException(
            f"invalid rank {cartan_type.rank} for type {cartan_type.family.value}"
        )
    log.debug(f"Building root system {cartan_type}")
    matrix = cartan_matrix(cartan_type)
    positive_roots = _positive_roots(matrix)
    highest_root = max(positive_roots, key=sum)
    lengths = _root_lengths(matrix)
    n = cartan_type.rank
    invariant_form = tuple(
        tuple(matrix[i][j] * lengths[j] / 2 for j in range(n)) for i in range(n)
    )
    marks = {0: 1}
    marks.update({i + 1: c for i, c in enumerate(highest_root)})
    return RootSystem(
        cartan_type=cartan_type,
        cartan_matrix=matrix,
        positive_roots=tuple(positive_roots),
        highest_root=highest_root,
        marks=marks,
        fundamental_weights=inverse(matrix),
        invariant_form=invariant_form,
        root_lengths=lengths,
    )
