from collections import Counter

from pydantic import Field, field_validator

from nilift.lifting.cyclotomic import lcm, reduce_exponents, units
from nilift.models.base import LieElement
from nilift.models.orbits import OrbitRecord
from nilift.models.roots import Weight


class CyclotomicTrace(LieElement):
    """Exact sum of xi^a over a multiset of exponents, xi a primitive order-th root of unity."""

    order: int = 1
    exponent_counts: dict[int, int] = Field(default_factory=dict)

    @field_validator("exponent_counts", mode="before")
    @classmethod
    def _reduce_mod_order(cls, value, info):
        order = info.data.get("order", 1)
        counts: Counter = Counter()
        for exponent, count in dict(value).items():
            if count:
                counts[int(exponent) % order] += count
        return dict(sorted((exponent, count) for exponent, count in counts.items() if count))

    @classmethod
    def from_exponents(cls, order: int, exponents) -> "CyclotomicTrace":
        return cls(order=order, exponent_counts=Counter(exponent % order for exponent in exponents))

    @property
    def dimension(self) -> int:
        return sum(self.exponent_counts.values())

    @property
    def reduced(self) -> tuple[int, ...]:
        return reduce_exponents(self.order, tuple(sorted(self.exponent_counts.items())))

    @property
    def is_integral(self) -> bool:
        return len(self.reduced) == 1

    @property
    def value(self) -> int | None:
        return self.reduced[0] if self.is_integral else None

    def is_self_conjugate(self) -> bool:
        return all(
            self.exponent_counts.get((-exponent) % self.order, 0) == count
            for exponent, count in self.exponent_counts.items()
        )

    def is_galois_stable(self) -> bool:
        return all(
            Counter({(u * k) % self.order: n for k, n in self.exponent_counts.items()})
            == Counter(self.exponent_counts)
            for u in units(self.order)
        )

    def __mul__(self, other: "CyclotomicTrace") -> "CyclotomicTrace":
        order = lcm(self.order, other.order)
        left = order // self.order
        right = order // other.order
        counts: Counter = Counter()
        for a, m in self.exponent_counts.items():
            for b, n in other.exponent_counts.items():
                counts[(a * left + b * right) % order] += m * n
        return CyclotomicTrace(order=order, exponent_counts=counts)

    def same_value(self, other: "CyclotomicTrace") -> bool:
        if self.is_integral or other.is_integral:
            return self.value == other.value
        order = lcm(self.order, other.order)
        return self.lifted(order).reduced == other.lifted(order).reduced

    def lifted(self, order: int) -> "CyclotomicTrace":
        factor = order // self.order
        return CyclotomicTrace(
            order=order,
            exponent_counts={a * factor: n for a, n in self.exponent_counts.items()},
        )

    def __str__(self):
        if self.is_integral:
            return str(self.value)
        terms = []
        for exponent, count in self.exponent_counts.items():
            term = "1" if exponent == 0 else f"ξ^{exponent}"
            terms.append(term if count == 1 else f"{count}{term}")
        return " + ".join(terms)


class LeviWeight(LieElement):
    orbit: OrbitRecord
    # highest weight in fundamental-weight coordinates
    weight: Weight
    levi_dominant: bool = True


class WeightOrbit(LieElement):
    source: LeviWeight
    weights: tuple[Weight, ...] = ()

    def __len__(self):
        return len(self.weights)


class ClassTrace(LieElement):
    name: str
    trace: CyclotomicTrace
    nodes: tuple[int, ...] = ()
    d: int = 1
    trivial: bool = False


class RepresentationReport(LieElement):
    orbit: OrbitRecord
    weight: Weight
    dimension: int
    descends: bool = True
    classes: tuple[ClassTrace, ...] = ()

    @property
    def character(self) -> dict[str, int | None]:
        return {entry.name: entry.trace.value for entry in self.classes}


class NodeReport(LieElement):
    node: int
    descends: bool
    in_root_lattice: bool
    # trivial character of the multiple of the weight lying in the root lattice
    multiple: int = 1
    multiple_trivial: bool | None = None


class SimplyConnectedReport(LieElement):
    orbit: OrbitRecord
    nodes: tuple[NodeReport, ...] = ()

    @property
    def all_descend(self) -> bool:
        return all(node.descends for node in self.nodes)

    @property
    def split_extension(self) -> bool:
        # nodes that do not descend carry no multiple to check
        return all(node.multiple_trivial is not False for node in self.nodes)
