from fractions import Fraction

from nilift.exceptions import RankMismatchException, WeylLetterOutOfRangeException
from nilift.models.base import Basis, Vector
from nilift.models.roots import Coweight, RootSystem, Weight, WeylWord


def _check_rank(rs: RootSystem, coords):
    if len(coords) != rs.rank:
        raise RankMismatchException(
            f"vector of length {len(coords)} used with {rs.cartan_type} of rank {rs.rank}"
        )


def _check_letters(rs: RootSystem, word: WeylWord):
    for letter in word.letters:
        if not 1 <= letter <= rs.rank:
            raise WeylLetterOutOfRangeException(
                f"simple reflection s{letter} does not exist in {rs.cartan_type}"
            )


def pair(rs: RootSystem, weight: Weight, coweight: Coweight) -> Fraction:
    _check_rank(rs, weight.coords)
    _check_rank(rs, coweight.coords)
    if weight.basis == Basis.Fundamental:
        return sum((a * b for a, b in zip(weight.coords, coweight.coords)), Fraction(0))
    return rs.pairing(weight.coords, coweight.coords)


def reflect_weight_coords(rs: RootSystem, coords: Vector, basis: Basis, node: int) -> Vector:
    i = node - 1
    matrix = rs.cartan_matrix
    if basis == Basis.Fundamental:
        value = coords[i]
        if not value:
            return coords
        return tuple(c - value * matrix[i][j] for j, c in enumerate(coords))
    value = sum((coords[k] * matrix[k][i] for k in range(rs.rank) if coords[k]), Fraction(0))
    if not value:
        return coords
    return tuple(c - value if k == i else c for k, c in enumerate(coords))


def reflect_coweight_coords(rs: RootSystem, coords: Vector, node: int) -> Vector:
    i = node - 1
    value = sum((rs.cartan_matrix[i][j] * coords[j] for j in range(rs.rank)), Fraction(0))
    if not value:
        return coords
    return tuple(c - value if k == i else c for k, c in enumerate(coords))


def apply_word(rs: RootSystem, word: WeylWord, element: Weight | Coweight) -> Weight | Coweight:
    _check_letters(rs, word)
    _check_rank(rs, element.coords)
    coords = element.coords
    if isinstance(element, Coweight):
        for letter in reversed(word.letters):
            coords = reflect_coweight_coords(rs, coords, letter)
        return Coweight(coords=coords)
    for letter in reversed(word.letters):
        coords = reflect_weight_coords(rs, coords, element.basis, letter)
    return Weight(coords=coords, basis=element.basis)


def dominate(rs: RootSystem, coweight: Coweight) -> tuple[Coweight, WeylWord]:
    """Greedy dominant form: returns (h, w) with h = w(coweight) and alpha_i(h) >= 0 for all i."""
    _check_rank(rs, coweight.coords)
    coords = list(coweight.coords)
    values = list(rs.values(coords))
    letters: list[int] = []
    matrix = rs.cartan_matrix
    while True:
        node = next((i for i, value in enumerate(values) if value < 0), None)
        if node is None:
            break
        value = values[node]
        coords[node] -= value
        for j in range(rs.rank):
            values[j] -= value * matrix[j][node]
        letters.insert(0, node + 1)
    return Coweight(coords=coords), WeylWord(letters=tuple(letters))



def diagram_of(rs: RootSystem, coweight: Coweight) -> tuple[int, ...]:
    values = rs.values(coweight.coords)
    if any(value.denominator != 1 for value in values):
        raise RuntimeError(
            f"coweight {coweight.coords} has non-integral labels"
            f" in {rs.cartan_type}"
        )
    return tuple(int(value) for value in values)


def orbit_dimension(rs: RootSystem, diagram) -> int:
    """dim of the orbit with the given weighted diagram: |roots| - #{b(h) = 0} - #{b(h) = 1}."""
    _check_rank(rs, diagram)
    zero = one = 0
    for root in rs.positive_roots:
        value = sum(c * label for c, label in zip(root, diagram))
        if value == 0:
            zero += 2
        elif value == 1:
            one += 1
    return 2 * len(rs.positive_roots) - zero - one
