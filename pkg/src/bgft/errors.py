"""Exception types shared across the toolkit."""


class BgftError(Exception):
    """Base class for all toolkit errors."""


class NonConvergenceError(BgftError):
    """Iterative eigenvalue/SVD kernel exceeded its iteration budget."""


class DefectiveMatrixError(BgftError):
    """Matrix is numerically non-diagonalizable (no reliable biorthogonal basis)."""


class SingularMatrixError(BgftError):
    """Matrix is singular to working precision."""


class SinkNodeError(BgftError):
    """A node has out-degree zero, so no transition operator exists."""

    def __init__(self, node):
        self.node = node
        super().__init__(
            f"Found sink node (out-degree 0) at node {node}. "
            "Fix by adding small outgoing weight."
        )


class NotIrreducibleError(BgftError):
    """The chain has no unique positive stationary distribution."""


class NoPositiveVectorError(BgftError):
    """The eigenvalue-1 left eigenvector has mixed signs."""


class InvalidSizeError(BgftError):
    """A size parameter is outside its allowed range."""


class InvalidNodeError(BgftError):
    """A node index is out of range or otherwise invalid."""


class EdgeListParseError(BgftError):
    """A graph file could not be parsed."""

    def __init__(self, path, line_number, message):
        self.path = path
        self.line_number = line_number
        super().__init__(f"{path}:{line_number}: {message}")


class RankDeficientError(BgftError):
    """The sampling matrix has numerically deficient column rank."""
