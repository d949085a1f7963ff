"""Exception taxonomy shared by all modules."""


class FoldmatchError(Exception):
    """Base class for every error raised by this package."""


class InvalidOperation(FoldmatchError):
    pass


class CrossingDiagonals(FoldmatchError):
    pass


class NotMaximal(FoldmatchError):
    pass


class NotThetaInvariant(FoldmatchError):
    pass


class DiameterNotAtIndexN(FoldmatchError):
    pass


class OrbitInTriangulation(FoldmatchError):
    pass


class DiagonalInTriangulation(FoldmatchError):
    pass


class BoundarySegment(FoldmatchError):
    pass


class OddDiameterCoordinate(FoldmatchError):
    pass


class NoCommonTriangle(FoldmatchError):
    pass


class NotCrossing(FoldmatchError):
    pass


class UnsupportedTriangulationForB(FoldmatchError):
    pass


class NoCommonExteriorEdge(FoldmatchError):
    pass


class CompanionOrbitNotFound(FoldmatchError):
    pass


class InexactDivision(FoldmatchError):
    pass


class NotHomogeneous(FoldmatchError):
    pass


class ClosureBudgetExceeded(FoldmatchError):
    pass


class ParseError(FoldmatchError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class ValidationError(FoldmatchError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
