"""Exception hierarchy shared by the plumbook modules."""


class PlumbookError(ValueError):
    """Base class for every error raised on bad input or impossible requests."""


class GraphSyntaxError(PlumbookError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class GraphValidationError(PlumbookError):
    pass


class EmptyBindingError(PlumbookError):
    """Raised when every vertex of a multi-vertex graph has e + d = 0."""


class ForeignCurveError(PlumbookError):
    pass


class SingularMatrixError(PlumbookError):
    pass


class SeifertConventionError(PlumbookError):
    pass
