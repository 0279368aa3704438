"""Exception hierarchy for pcube."""


class PcubeError(Exception):
    """Base class for all pcube errors."""


class Graph6FormatError(PcubeError, ValueError):
    """Raised when a graph6 line cannot be decoded."""


class GraphSizeError(PcubeError, ValueError):
    """Raised when a graph exceeds a supported size bound."""


class EmptyVertexSetError(PcubeError, ValueError):
    """Raised when an operation needs at least one vertex."""


class DisconnectedGraphError(PcubeError, ValueError):
    """Raised when an operation needs a connected graph or a reachable pair."""


class NotPartialCubeError(PcubeError, ValueError):
    """Raised when an operation needs a partial cube."""


class ClassIndexError(PcubeError, IndexError):
    """Raised for a Θ-class index outside the partition."""


class NotThetaRelatedError(PcubeError, ValueError):
    """Raised when two edges expected to be Θ-related are not."""


class MalformedCycleError(PcubeError, ValueError):
    """Raised for vertex sequences that are not valid cycles of the expected kind."""


class InvalidGeodesicError(PcubeError, ValueError):
    """Raised when a path argument is not a shortest path."""


class CanonicalSizeError(GraphSizeError):
    """Raised when canonical_key is asked for a graph above its size bound."""


class RecognitionDisagreementError(PcubeError):
    """Raised when the Θ-based and Hamming-based recognition verdicts differ."""
