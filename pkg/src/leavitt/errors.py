"""Exception hierarchy shared by every module of the package."""


class LeavittError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(LeavittError):
    pass


class DivisionByZero(LeavittError, ZeroDivisionError):
    pass


class AlgebraMismatch(LeavittError):
    pass


class NotAUnit(LeavittError):
    pass


class InfiniteUnitGroup(LeavittError):
    pass


class MalformedGraph(LeavittError):
    pass


class UnknownId(LeavittError, KeyError):
    pass


class GraphMismatch(LeavittError):
    pass


class InfiniteDimensional(LeavittError):
    pass


class NotLoopGraph(LeavittError):
    pass


class ZeroScalar(LeavittError):
    pass


class NotARepresentation(LeavittError):
    """A structure matrix failed one of the comodule identities.

    ``failures`` lists every identity that broke, as short strings.
    """

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("not a representation: " + "; ".join(self.failures))


class NotEnoughDistinctUnits(LeavittError):
    pass


class NotInCrossProduct(LeavittError):
    pass


class RelationViolation(LeavittError):
    def __init__(self, defects):
        self.defects = list(defects)
        super().__init__("Cuntz-Krieger relations violated: " + "; ".join(self.defects))


class VertexKilled(LeavittError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is sent to 0")


class NotGraded(LeavittError):
    def __init__(self, generator, defect):
        self.generator = generator
        self.defect = defect
        super().__init__(f"image of {generator} is not homogeneous of the right degree: {defect}")


class HypothesisFailure(LeavittError):
    pass


class ParseError(LeavittError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
