"""Exception hierarchy shared by every walkgauge module."""


class WalkgaugeError(Exception):
    """Base class for all toolkit errors."""


class GraphError(WalkgaugeError, ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotUnicyclic(GraphError):
    pass


class SizeLimitExceeded(WalkgaugeError):
    pass


class SingularMatrix(WalkgaugeError, ArithmeticError):
    pass


class DimensionMismatch(WalkgaugeError, ValueError):
    pass


class StepCapExceeded(WalkgaugeError):
    pass


class ParseError(WalkgaugeError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
