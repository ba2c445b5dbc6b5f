from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict

Vector = tuple[Fraction, ...]
IntVector = tuple[int, ...]


class LieElement(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class Family(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"


class Basis(Enum):
    Root = "root"
    Fundamental = "fundamental"


class Lattice(Enum):
    Adjoint = "adjoint"
    SimplyConnected = "simply-connected"


class ComponentGroup(Enum):
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"
    S5 = "S5"
    Abelian = "abelian"


def to_vector(values) -> Vector:
    return tuple(Fraction(value) for value in values)
