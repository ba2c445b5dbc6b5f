from nilift.models.orbits import OrbitRecord, PseudoLeviPair
from nilift.models.roots import CartanType
from nilift.models.subsystems import DistinguishedLabeling, Subsystem


class OrbitDatabase:
    def __init__(self):
        self.subsystems: dict[CartanType, dict[tuple[int, ...], Subsystem]] = {}
        self.labelings: dict[CartanType, dict[tuple[int, ...], list[DistinguishedLabeling]]] = {}
        self.catalogs: dict[CartanType, list[OrbitRecord]] = {}
        self.pairs: dict[CartanType, dict[tuple[int, ...], list[PseudoLeviPair]]] = {}
        self.names: dict[CartanType, dict[tuple[int, ...], str]] = {}


orbit_db = OrbitDatabase()
