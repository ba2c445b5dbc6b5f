from pydantic import Field

from nilift.models.base import ComponentGroup, IntVector, LieElement
from nilift.models.lifting import ClassTrace
from nilift.models.roots import CartanType, WeylWord


class GoldenRow(LieElement):
    """One claimed lift: a weight of the Levi subgroup and the representation it induces."""

    group: CartanType
    orbit_name: str
    # node labels in Bourbaki order, None when the table does not print the diagram
    diagram: IntVector | None = None
    component_group: ComponentGroup
    # 'sign', 'standard' or the column name of a character table such as 'w7'
    representation: str
    weight: IntVector
    # expected traces keyed by class name, in table order
    traces: tuple[tuple[str, int], ...] = ()
    line: int = 0

    @property
    def key(self) -> tuple[str, str, str, IntVector]:
        return (str(self.group), self.orbit_name, self.representation, self.weight)


class GoldenResult(LieElement):
    row: GoldenRow
    passed: bool
    messages: tuple[str, ...] = ()
    # provenance: diagram of the resolved orbit and the traces computed on each class
    diagram: IntVector | None = None
    classes: tuple[ClassTrace, ...] = ()


class WorkedExample(LieElement):
    """A pseudo-Levi pair written out by hand, with the images of a weight under w^-1."""

    name: str
    group: CartanType
    orbit_name: str
    # class parameter the example computes on; nodes may include the lowest root 0
    nodes: tuple[int, ...]
    # alpha_i(h1) for the simple roots, Bourbaki order
    h1_values: IntVector
    word: WeylWord
    diagram: IntVector
    weight: IntVector
    # w^-1 images of the weights of the Levi orbit, simple-root coordinates
    images: tuple[IntVector, ...] = ()
    # exponents of xi on each weight of the Levi orbit
    residues: tuple[int, ...] = ()
    trace: int | None = None


class ExampleResult(LieElement):
    example: WorkedExample
    passed: bool
    messages: tuple[str, ...] = ()


class VerificationReport(LieElement):
    results: tuple[GoldenResult, ...] = Field(default_factory=tuple)
    examples: tuple[ExampleResult, ...] = Field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results) and all(
            result.passed for result in self.examples
        )

    @property
    def failures(self) -> list[GoldenResult | ExampleResult]:
        return [result for result in (*self.results, *self.examples) if not result.passed]
