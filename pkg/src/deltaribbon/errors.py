"""Exception hierarchy shared by all modules."""


class DeltaRibbonError(ValueError):
    """Base class for every error raised by this package."""


# ribbon graphs
class MalformedRotation(DeltaRibbonError):
    pass


class DanglingHalfEdge(DeltaRibbonError):
    pass


class UnknownEdge(DeltaRibbonError, KeyError):
    pass


class UnknownVertex(DeltaRibbonError, KeyError):
    pass


# set systems
class EmptyFeasibleFamily(DeltaRibbonError):
    pass


class NotADeltaMatroid(DeltaRibbonError):
    pass


class UnknownElement(DeltaRibbonError, KeyError):
    pass


class OverlappingMinorSets(DeltaRibbonError):
    pass


class NotAMatroid(DeltaRibbonError):
    pass


class EmptyToggle(DeltaRibbonError):
    pass


class GroundOverlap(DeltaRibbonError):
    pass


class GroundTooLarge(DeltaRibbonError):
    pass


# polynomials
class HalfPowerNotSquare(DeltaRibbonError):
    pass


class ZeroToNegativePower(DeltaRibbonError, ZeroDivisionError):
    pass


# GF(2) matrices
class NonSymmetric(DeltaRibbonError):
    pass


class NotOneVertex(DeltaRibbonError):
    pass


# input files / command line
class ParseError(DeltaRibbonError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class UnknownSubcommand(DeltaRibbonError):
    pass
