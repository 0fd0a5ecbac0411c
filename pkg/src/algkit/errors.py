"""Exception types shared across the package."""


class AlgkitError(Exception):
    """Base class for errors raised by algkit."""


class ParseError(AlgkitError):
    """Malformed algebra definition; carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class ParameterError(AlgkitError):
    """A parameter is unbound, unknown, or bound to an excluded value."""


class CorpusError(AlgkitError):
    """The corpus index or one of its definition files cannot be loaded."""


class EngelPreconditionError(AlgkitError):
    """The operator family is not closed under the commutator."""
