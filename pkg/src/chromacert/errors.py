"""Exception types shared across the package."""


class ChromacertError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(ChromacertError):
    """Input document is not well-formed in the declared format."""


class SelfLoopError(ChromacertError):
    """Edge with identical endpoints."""


class DuplicateEdgeError(ChromacertError):
    """Edge listed more than once (in either endpoint order)."""


class VertexRangeError(ChromacertError):
    """Vertex id outside the declared range."""


class InvalidParamsError(ChromacertError):
    """Generator parameters invalid for the requested kind."""


class ForeignLabelingError(ChromacertError):
    """Labeling does not belong to the graph it is used with."""


class ImproperColoringError(ChromacertError):
    """Coloring is missing vertices, uses colors out of range, or repeats a color across an edge."""


class NotUniformError(ChromacertError):
    """Labeling is not uniform where a uniform one is required."""


class NotOneTwoUniformError(ChromacertError):
    """Labeling is not one-two uniform where required."""


class NotAntisymmetricError(ChromacertError):
    """Matrix is well-formed but not antisymmetric."""


class InvalidMatrixError(ChromacertError):
    """Matrix document violates the structural requirements (shape, entries, support symmetry)."""


class BudgetExceededError(ChromacertError):
    """Instance exceeds the enumeration budget of an exhaustive operation."""
