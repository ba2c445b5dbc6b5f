from collections import Counter

from pydantic import Field

from nilift.models.base import IntVector, LieElement
from nilift.models.roots import AFFINE_NODE, CartanType, Coweight, Weight


class ExtendedSubset(LieElement):
    """Proper subset of the extended simple roots; node 0 stands for the lowest root."""

    cartan_type: CartanType
    nodes: tuple[int, ...] = ()

    @property
    def has_affine_node(self) -> bool:
        return AFFINE_NODE in self.nodes

    @property
    def finite_nodes(self) -> tuple[int, ...]:
        return tuple(node for node in self.nodes if node != AFFINE_NODE)

    @property
    def complement(self) -> tuple[int, ...]:
        return tuple(
            node for node in range(self.cartan_type.rank + 1) if node not in self.nodes
        )

    def __len__(self):
        return len(self.nodes)

    def __str__(self):
        if not self.nodes:
            return "{}"
        names = ("-theta" if node == AFFINE_NODE else f"a{node}" for node in self.nodes)
        return "{" + ", ".join(names) + "}"


class Component(LieElement):
    cartan_type: CartanType
    # ambient nodes of the component listed in the standard numbering of its own type
    nodes: tuple[int, ...]
    short: bool = False

    @property
    def label(self) -> str:
        return ("~" if self.short else "") + str(self.cartan_type)


class Subsystem(LieElement):
    subset: ExtendedSubset
    roots: tuple[IntVector, ...] = Field(default_factory=tuple)
    # J-coordinates of the positive roots, aligned with subset.nodes
    positive_coordinates: tuple[IntVector, ...] = Field(default_factory=tuple)
    components: tuple[Component, ...] = Field(default_factory=tuple)

    @property
    def rank(self) -> int:
        return len(self.subset.nodes)

    @property
    def name(self) -> str:
        return merge_labels([component.label for component in self.components])


class DistinguishedLabeling(LieElement):
    subsystem: Subsystem
    # labels aligned with subsystem.subset.nodes
    labels: tuple[int, ...] = ()
    h1: Coweight
    bala_carter_name: str = ""

    @property
    def subset(self) -> ExtendedSubset:
        return self.subsystem.subset

    def label_of(self, node: int) -> int:
        return self.labels[self.subset.nodes.index(node)]


class TorsionData(LieElement):
    subset: ExtendedSubset
    d: int = 1
    tau: Weight


def merge_labels(labels: list[str]) -> str:
    """Joins component labels, merging equal ones: ['A2', 'A2', 'A2'] -> '3A2'."""
    if not labels:
        return "0"
    counts = Counter(labels)
    ordered = sorted(counts, key=lambda label: (-_label_rank(label), label))
    return "+".join(
        label if counts[label] == 1 else f"{counts[label]}{label}" for label in ordered
    )


def _label_rank(label: str) -> int:
    digits = ""
    for ch in label.lstrip("~")[1:]:
        if not ch.isdigit():
            break
        digits += ch
    return int(digits) if digits else 0


def split_label(name: str) -> Counter:
    """Multiset of components of a label: '3A2+A1' -> {A2: 3, A1: 1}."""
    name = name.strip().rstrip("'")
    if _wrapped(name):
        name = name[1:-1]
    components: Counter = Counter()
    if name in ("0", ""):
        return components
    depth = 0
    current = ""
    parts = []
    for ch in name:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append(current)
            current = ""
        else:
            current += ch
    parts.append(current)
    for part in parts:
        multiplier = ""
        while part and part[0].isdigit():
            multiplier += part[0]
            part = part[1:]
        components[part] += int(multiplier) if multiplier else 1
    return components


def _wrapped(name: str) -> bool:
    if not (name.startswith("(") and name.endswith(")")):
        return False
    depth = 0
    for position, ch in enumerate(name):
        depth += (ch == "(") - (ch == ")")
        if depth == 0 and position < len(name) - 1:
            return False
    return True
