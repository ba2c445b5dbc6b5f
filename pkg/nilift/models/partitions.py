from nilift.models.base import Family, LieElement
from nilift.models.roots import CartanType, Weight


class PartitionOrbit(LieElement):
    """Nilpotent orbit of a classical group, given by a partition of N.

    epsilon = 0 for orthogonal groups (B when N is odd, D when N is even) and
    epsilon = 1 for symplectic groups (C).
    """

    epsilon: int
    N: int
    parts: tuple[int, ...]
    # terminal node (n - 1 or n) with a nonzero label, for very even partitions only
    very_even_node: int | None = None

    @property
    def family(self) -> Family:
        if self.epsilon == 1:
            return Family.C
        return Family.B if self.N % 2 else Family.D

    @property
    def n(self) -> int:
        return self.N // 2

    @property
    def cartan_type(self) -> CartanType:
        return CartanType(family=self.family, rank=self.n)

    @property
    def is_very_even(self) -> bool:
        return self.family == Family.D and all(part % 2 == 0 for part in self.parts)

    def part(self, j: int) -> int:
        """lambda_j with 1-based j; zero past the last part."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    @property
    def label(self) -> str:
        name = "[" + ", ".join(str(part) for part in self.parts) + "]"
        if self.is_very_even:
            name += "I" if self.very_even_node == self.n else "II"
        return name


class ComponentBasis(LieElement):
    B: tuple[int, ...] = ()
    k_max: int | None = None
    B_tilde: tuple[int, ...] = ()
    m: int = 1

    @property
    def order(self) -> int:
        return 2 ** len(self.B_tilde)

    def successor(self, k: int) -> int | None:
        later = [j for j in self.B if j > k]
        return min(later) if later else None


class ChiWeight(LieElement):
    s: int
    sigma_s: int
    d_s: int
    # fundamental-weight coordinates
    weight: Weight
    in_xi: bool = True


class SpinRepresentation(LieElement):
    weight: Weight
    dimension: int
    # the same representation after subtracting a fundamental weight of a nonzero node
    minimal_weight: Weight


class SpinResult(LieElement):
    representations: tuple[SpinRepresentation, ...] = ()
    reason: str = ""
