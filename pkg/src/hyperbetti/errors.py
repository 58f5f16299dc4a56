"""Exception hierarchy shared by all hyperbetti modules."""


class HyperbettiError(Exception):
    """Base class for all data and contract errors raised by this package."""


class EmptyIdentifierError(HyperbettiError):
    """A node or edge identifier is empty after trimming whitespace."""


class NonFiniteWeightError(HyperbettiError):
    """A weight (or numeric attribute) is NaN or infinite."""


class InvalidAttributeError(HyperbettiError):
    """An attribute key is not text or a value is not a scalar."""


class CsvFormatError(HyperbettiError):
    """An incidence CSV is missing its header or has malformed rows."""


class UnknownNodeError(HyperbettiError):
    """A node id is not registered in the hypergraph."""


class UnknownEdgeError(HyperbettiError):
    """An edge id is not registered in the hypergraph."""


class InvalidSError(HyperbettiError):
    """The width parameter s is below 1."""


class UnknownVertexError(HyperbettiError):
    """A vertex is absent from the s-line graph (unknown id or too small for s)."""


class DimensionOutOfRangeError(HyperbettiError):
    """A simplicial dimension k is outside the complex's 0..kmax range."""


class EdgeTooLargeError(HyperbettiError):
    """A hyperedge exceeds the downward-closure size cap."""


class MalformedJsonError(HyperbettiError):
    """Input bytes are not valid UTF-8 JSON."""


class SchemaViolationError(HyperbettiError):
    """A HIF document violates the interchange schema.

    Carries a JSON-pointer ``path`` to the offending element.
    """

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class DuplicateIncidenceError(SchemaViolationError):
    """The same (edge, node) pair appears twice in a HIF document."""


class MissingPositionError(HyperbettiError):
    """A hull was requested for an edge whose member node has no position."""


class InconsistentDocumentError(HyperbettiError):
    """A layout document does not cover the hypergraph it is rendered with."""


class PortInUseError(HyperbettiError):
    """The requested serve port is already bound."""
