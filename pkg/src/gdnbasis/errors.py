"""Exception hierarchy; the CLI maps each family to a fixed exit code."""


class GdnError(Exception):
    exit_code = 2


class ParseError(GdnError, ValueError):
    """Malformed expression or session file.  Carries a 1-based position."""

    exit_code = 1

    def __init__(self, message: str, line: int = 1, col: int = 1):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


class SemanticError(GdnError, ValueError):
    exit_code = 2


class NotHomogeneousError(SemanticError):
    pass


class WeightError(SemanticError):
    pass


class ResourceCapExceeded(GdnError, RuntimeError):
    exit_code = 3
