"""Exception hierarchy shared across the package."""


class HypertreeError(Exception):
    """Base class for all package errors."""


# -- construction / validation -----------------------------------------------

class NonUniform(HypertreeError):
    """Some edge has a size different from the uniformity k."""


class DuplicateEdge(HypertreeError):
    """Two edges are equal as vertex sets."""


class VertexOutOfRange(HypertreeError):
    """An edge references a vertex id outside 1..n."""


class RepeatedVertexInEdge(HypertreeError):
    """An edge lists the same vertex twice."""


class BadDimensions(HypertreeError):
    """Family parameters are inconsistent (e.g. n-1 not divisible by k-1)."""


class NotATree(HypertreeError):
    """Parent array / edge list does not describe a tree."""


class BadOverlap(HypertreeError):
    """s-path / s-cycle overlap s outside 1..k/2."""


class NotLinear(HypertreeError):
    """Operation requires a linear hypergraph (pairwise edge overlap <= 1)."""


# -- tensor / spectral -------------------------------------------------------

class DimensionMismatch(HypertreeError):
    """Vector length does not match the vertex count."""


class TooLarge(HypertreeError):
    """Instance exceeds a configured size cap."""


class Disconnected(HypertreeError):
    """Operation requires a connected hypergraph."""


class NoConvergence(HypertreeError):
    """Power iteration exhausted max_iter; carries the last bracket."""

    def __init__(self, message, lower=None, upper=None, iterations=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.iterations = iterations


class NotSquare(HypertreeError):
    """Matrix argument is not square."""


class BadPartition(HypertreeError):
    """Supplied orbit blocks do not partition the vertex set."""


# -- transforms --------------------------------------------------------------

class InvalidSpec(HypertreeError):
    """Edge-move spec violates its preconditions against the hypergraph."""


class MultipleEdge(HypertreeError):
    """An edge move would create two identical edges."""


class PendentEdge(HypertreeError):
    """Edge-releasing requires a non-pendent edge."""


class NotPendentPaths(HypertreeError):
    """Requested pendent paths do not exist at the given vertex."""


# -- enumeration -------------------------------------------------------------

class IncompleteCensus(HypertreeError):
    """Census lacks an instance the verification logic requires."""
