"""Exception hierarchy shared by every module."""


class LiecError(Exception):
    pass


class GraphError(LiecError, ValueError):
    """Structurally invalid graph, or a graph outside an operation's domain."""


class ParseError(GraphError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ColoringError(LiecError, ValueError):
    pass


class NonColorableError(LiecError, ValueError):
    """Raised by the solvers on graphs that admit no locally irregular coloring."""

    def __init__(self, klass):
        self.klass = klass
        super().__init__(f"graph is not colorable: {klass.tag.value}")


class NotApplicable(LiecError, ValueError):
    pass


class SolverBug(AssertionError):
    """An internal invariant failed. Existence is guaranteed, so this is a bug."""
