from fractions import Fraction

from pydantic import Field, field_validator

from nilift.models.base import Basis, Family, IntVector, LieElement, Vector, to_vector

AFFINE_NODE = 0


class CartanType(LieElement):
    family: Family
    rank: int

    def __str__(self):
        return f"{self.family.value}{self.rank}"


class Weight(LieElement):
    coords: Vector
    basis: Basis = Basis.Root

    @field_validator("coords", mode="before")
    @classmethod
    def _as_fractions(cls, value):
        return to_vector(value)

    def scaled(self, factor: int | Fraction) -> "Weight":
        return Weight(coords=tuple(factor * a for a in self.coords), basis=self.basis)

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)


class Coweight(LieElement):
    """Element of the coweight space in simple-coroot coordinates."""

    coords: Vector

    @field_validator("coords", mode="before")
    @classmethod
    def _as_fractions(cls, value):
        return to_vector(value)


class WeylWord(LieElement):
    """Product s_{i_1} ... s_{i_k}; the rightmost letter acts first."""

    letters: tuple[int, ...] = ()

    def inverse(self) -> "WeylWord":
        return WeylWord(letters=tuple(reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{letter}" for letter in self.letters)


class RootSystem(LieElement):
    cartan_type: CartanType
    cartan_matrix: tuple[IntVector, ...]
    positive_roots: tuple[IntVector, ...]
    highest_root: IntVector
    marks: dict[int, int] = Field(default_factory=dict)
    fundamental_weights: tuple[Vector, ...]
    invariant_form: tuple[Vector, ...]
    root_lengths: Vector

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def roots(self) -> tuple[IntVector, ...]:
        negatives = tuple(tuple(-c for c in root) for root in self.positive_roots)
        return self.positive_roots + negatives

    def simple_root(self, node: int) -> IntVector:
        if node == AFFINE_NODE:
            return tuple(-c for c in self.highest_root)
        return tuple(int(i == node - 1) for i in range(self.rank))

    def inner(self, left, right) -> Fraction:
        """Invariant form on vectors given in simple-root coordinates."""
        return sum(
            (
                left[i] * self.invariant_form[i][j] * right[j]
                for i in range(self.rank)
                for j in range(self.rank)
                if left[i] and right[j]
            ),
            Fraction(0),
        )

    def norm(self, vector) -> Fraction:
        return self.inner(vector, vector)

    def coroot(self, root) -> Vector:
        """Coroot of a root given in simple-root coordinates, in simple-coroot coordinates."""
        length = self.norm(root)
        return tuple(
            Fraction(root[i]) * self.root_lengths[i] / length for i in range(self.rank)
        )

    def pairing(self, weight, coweight) -> Fraction:
        """Value of a simple-root-coordinate weight on a simple-coroot-coordinate coweight."""
        return sum(
            (
                weight[i] * self.cartan_matrix[i][j] * coweight[j]
                for i in range(self.rank)
                for j in range(self.rank)
                if weight[i] and coweight[j]
            ),
            Fraction(0),
        )

    def values(self, coweight) -> Vector:
        """The labels alpha_i(h) of a coweight h."""
        return tuple(
            sum(
                (self.cartan_matrix[i][j] * Fraction(coweight[j]) for j in range(self.rank)),
                Fraction(0),
            )
            for i in range(self.rank)
        )

    def coweight_from_values(self, values) -> Coweight:
        # alpha_i(h) = sum_j A[i][j] h_j, hence h = A^-1 values
        inverse = self.inverse_cartan
        return Coweight(
            coords=[
                sum((inverse[i][j] * Fraction(values[j]) for j in range(self.rank)), Fraction(0))
                for i in range(self.rank)
            ]
        )

    @property
    def inverse_cartan(self) -> tuple[Vector, ...]:
        # Row i of the inverse Cartan matrix is the i-th fundamental weight in root coordinates
        return self.fundamental_weights

    def to_fundamental(self, root_coords) -> Vector:
        return tuple(
            sum(
                (Fraction(root_coords[k]) * self.cartan_matrix[k][j] for k in range(self.rank)),
                Fraction(0),
            )
            for j in range(self.rank)
        )

    def to_root(self, fundamental_coords) -> Vector:
        return tuple(
            sum(
                (
                    Fraction(fundamental_coords[i]) * self.fundamental_weights[i][k]
                    for i in range(self.rank)
                ),
                Fraction(0),
            )
            for k in range(self.rank)
        )

    def in_basis(self, weight: Weight, basis: Basis) -> Weight:
        if len(weight.coords) != self.rank:
            raise RuntimeError(
                f"weight of length {len(weight.coords)} does not belong"
                f" to a root system of rank {self.rank}"
            )
        if weight.basis == basis:
            return weight
        if basis == Basis.Root:
            return Weight(coords=self.to_root(weight.coords), basis=Basis.Root)
        return Weight(coords=self.to_fundamental(weight.coords), basis=Basis.Fundamental)

    def fundamental_weight(self, node: int) -> Weight:
        return Weight(coords=self.fundamental_weights[node - 1], basis=Basis.Root)

    def in_root_lattice(self, weight: Weight) -> bool:
        return self.in_basis(weight, Basis.Root).is_integral
