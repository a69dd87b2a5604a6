"""Exception hierarchy shared by every module."""


class AdjCyclesError(Exception):
    """Base class for all library errors."""


class EmbeddingError(AdjCyclesError, ValueError):
    """A rotation system or surgery request is not a valid plane embedding."""


class LoopEdge(EmbeddingError):
    pass


class AsymmetricAdjacency(EmbeddingError):
    pass


class EulerViolation(EmbeddingError):
    pass


class BadOuterMarker(EmbeddingError):
    pass


class Disconnected(EmbeddingError):
    pass


class Disconnects(Disconnected):
    """Deleting the requested vertices would disconnect the graph."""


class DeletesAll(EmbeddingError):
    pass


class AdjacentEndpoints(EmbeddingError):
    pass


class NotOnCommonFace(EmbeddingError):
    pass


class NotOnFace(EmbeddingError):
    pass


class PgrSyntaxError(SyntaxError):
    """Malformed ``pgr v1`` text. ``lineno``/``offset`` are 1-based."""

    def __init__(self, msg: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.lineno = line
        self.offset = column


class MultigraphUnsupported(AdjCyclesError, ValueError):
    pass


class VertexNotInterior(AdjCyclesError, ValueError):
    pass


class VertexNotOnCycle(AdjCyclesError, ValueError):
    pass


class OuterFace(AdjCyclesError, ValueError):
    """An operation defined on inner faces was given the outer face."""


class NotInClass(AdjCyclesError):
    def __init__(self, verdict):
        super().__init__(f"graph is not in the class: {verdict.describe()}")
        self.verdict = verdict


class GuardFailed(AdjCyclesError):
    pass


class PullBackImproper(AdjCyclesError):
    pass


class UncoloredVertex(AdjCyclesError, ValueError):
    pass


class InvalidPrecoloring(AdjCyclesError, ValueError):
    pass


class OuterTooLarge(AdjCyclesError, ValueError):
    pass


class LemmaFalsified(AdjCyclesError):
    """Exact search proved that a valid precoloring does not extend."""


class ColoringFailed(AdjCyclesError):
    pass


class BoundsInfeasible(AdjCyclesError, ValueError):
    pass
