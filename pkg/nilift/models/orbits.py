from nilift.models.base import IntVector, LieElement
from nilift.models.roots import CartanType, Coweight, WeylWord
from nilift.models.subsystems import DistinguishedLabeling, TorsionData
from nilift.rootdata.root_system import build_root_system


class OrbitRecord(LieElement):
    """Nilpotent orbit, identified by its weighted Dynkin diagram."""

    cartan_type: CartanType
    diagram: IntVector
    name: str = ""
    derived_name: str = ""
    dimension: int = 0
    # nodes with label 0: the simple roots of the Levi subgroup
    levi_nodes: tuple[int, ...] = ()

    @property
    def dynkin_diagram(self) -> Coweight:
        return build_root_system(self.cartan_type).coweight_from_values(self.diagram)

    @property
    def nonzero_nodes(self) -> tuple[int, ...]:
        return tuple(node for node, label in enumerate(self.diagram, start=1) if label)

    def __eq__(self, other):
        if not isinstance(other, OrbitRecord):
            return NotImplemented
        return self.cartan_type == other.cartan_type and self.diagram == other.diagram

    def __hash__(self):
        return hash((self.cartan_type, self.diagram))


class PseudoLeviPair(LieElement):
    labeling: DistinguishedLabeling
    # w with w(h1) equal to the dominant Dynkin element of the orbit
    word: WeylWord
    torsion: TorsionData
    diagram: IntVector

    @property
    def trivial(self) -> bool:
        return not self.labeling.subset.has_affine_node

    @property
    def name(self) -> str:
        return self.labeling.bala_carter_name

    @property
    def nodes(self) -> tuple[int, ...]:
        return self.labeling.subset.nodes
