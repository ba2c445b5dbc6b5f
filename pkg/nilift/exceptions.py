class NiliftException(Exception):
    pass


class InvalidCartanTypeException(NiliftException):
    pass


class RankMismatchException(NiliftException):
    pass


class WeylLetterOutOfRangeException(NiliftException):
    pass


class InvalidSubsetException(NiliftException):
    pass


class NotLeviDominantException(NiliftException):
    pass


class NonMinusculeWeightException(NiliftException):
    pass


class OrbitMismatchException(NiliftException):
    pass


class WeightDoesNotDescendException(NiliftException):
    pass


class AmbiguousResidueException(NiliftException):
    pass


class DescentInconsistencyException(NiliftException):
    pass


class InconsistentTraceException(NiliftException):
    pass


class LiftSearchExhaustedException(NiliftException):
    pass


class InvalidPartitionException(NiliftException):
    pass


class UnknownOrbitException(NiliftException):
    pass


class WeightSyntaxException(NiliftException):
    pass


class GoldenFormatException(NiliftException):
    pass


class MissingOrbitNameException(NiliftException):
    pass


class WeightOutsideRootLatticeException(NiliftException):
    pass
