import re

from nilift.exceptions import InvalidCartanTypeException
from nilift.models.base import Family
from nilift.models.roots import CartanType

CARTAN_TYPE_REGEX = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")


def rank_is_valid(family: Family, rank: int) -> bool:
    if family == Family.A:
        return rank >= 1
    if family in (Family.B, Family.C):
        return rank >= 2
    if family == Family.D:
        return rank >= 3
    if family == Family.E:
        return rank in (6, 7, 8)
    if family == Family.F:
        return rank == 4
    return rank == 2


def make_cartan_type(family: Family | str, rank: int) -> CartanType:
    if isinstance(family, str):
        try:
            family = Family(family.upper())
        except ValueError:
            raise InvalidCartanTypeException(f"unknown Lie type family '{family}'")
    if not rank_is_valid(family, rank):
        raise InvalidCartanTypeException(f"invalid rank {rank} for type {family.value}")
    return CartanType(family=family, rank=rank)


def parse_cartan_type(text: str) -> CartanType:
    match = CARTAN_TYPE_REGEX.match(text)
    if match is None:
        raise InvalidCartanTypeException(f"cannot read a Cartan type from '{text}'")
    return make_cartan_type(match.group(1), int(match.group(2)))


def _bonds(cartan_type: CartanType) -> list[tuple[int, int]]:
    # Simple bonds of the Dynkin diagram in Bourbaki numbering, 0-based
    n = cartan_type.rank
    family = cartan_type.family
    if family in (Family.A, Family.B, Family.C):
        return [(i, i + 1) for i in range(n - 1)]
    if family == Family.D:
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if family == Family.E:
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    if family == Family.F:
        return [(0, 1), (1, 2), (2, 3)]
    return [(0, 1)]


def cartan_matrix(cartan_type: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry [i][j] equal to alpha_i evaluated on the coroot of alpha_j."""
    n = cartan_type.rank
    matrix = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _bonds(cartan_type):
        matrix[i][j] = matrix[j][i] = -1
    family = cartan_type.family
    if family == Family.B:
        matrix[n - 2][n - 1] = -2
    elif family == Family.C:
        matrix[n - 1][n - 2] = -2
    elif family == Family.F:
        matrix[1][2] = -2
    elif family == Family.G:
        matrix[1][0] = -3
    return tuple(tuple(row) for row in matrix)
