"""Exception hierarchy shared by every module of the package."""


class SakError(Exception):
    """Base class for all package errors."""


class GraphError(SakError, ValueError):
    pass


class ConflictingSign(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class EmptySet(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class ParseError(SakError, ValueError):
    pass


class UnknownLabel(ParseError):
    pass


class ClosedFormError(SakError, ValueError):
    pass


class NotBalanced(ClosedFormError):
    pass


class NotAntiBalanced(ClosedFormError):
    pass


class SinglePart(ClosedFormError):
    pass


class DegenerateSelection(ClosedFormError):
    """Every touched part lies wholly inside S, so the largest open part is undefined."""


class InternalInconsistency(SakError, RuntimeError):
    pass


class Infeasible(SakError):
    pass


class VerificationFailed(SakError, RuntimeError):
    pass


class InvalidCertificate(SakError, ValueError):
    pass


class InvalidDecomposition(SakError, ValueError):
    pass


class NotCover(InvalidDecomposition):
    pass


class EdgeUncovered(InvalidDecomposition):
    pass


class NotConnectedTrace(InvalidDecomposition):
    pass


class NotDomino(InvalidDecomposition):
    pass


class NotInBag(InvalidDecomposition):
    pass


class DegreeTooHigh(SakError, ValueError):
    pass


class EmptyHyperedge(SakError, ValueError):
    pass


class BadProbabilities(SakError, ValueError):
    pass


class StrategyUnavailable(SakError):
    pass
