"""Exception types raised by the corners package."""


class CornersError(ValueError):
    """Base class for all domain errors."""


class MalformedPartition(CornersError):
    pass


class WrongCornerCount(CornersError):
    pass


class BadTruncation(CornersError):
    pass


class LengthBudgetExceeded(CornersError):
    """Raised when l(alpha) + l(beta) exceeds the corner budget k."""


class NotInImage(CornersError):
    """Raised when a partition is not in the image of the bijection."""


class OutOfRange(CornersError):
    pass
