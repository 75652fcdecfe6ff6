"""Exception types raised across the package."""


class SymmetroidError(Exception):
    """Base class for all errors raised by this package."""


class MissingAssignmentError(SymmetroidError, KeyError):
    def __init__(self, variable: str):
        super().__init__(variable)
        self.variable = variable

    def __str__(self):
        return f"no value assigned to variable {self.variable!r}"


class UnknownVariableError(SymmetroidError, ValueError):
    pass


class NotGroebnerError(SymmetroidError, ValueError):
    """Raised when a reduction is attempted against a basis not known to be Groebner."""

    def __init__(self):
        super().__init__(
            "basis is not marked as a Groebner basis; compute one with buchberger() first"
        )


class BudgetExceededError(SymmetroidError, RuntimeError):
    pass


class PositiveDimensionalError(SymmetroidError, ValueError):
    """The zero set is not finite.

    For the base locus of the web of a quartic symmetroid this is a genuine
    geometric alarm: a base curve forces the symmetroid to be reducible.
    """

    ALARM = "base locus contains a curve: the symmetroid is reducible"


class DegeneratePencilError(SymmetroidError, ValueError):
    pass


class PreconditionError(SymmetroidError, ValueError):
    pass


class ParseError(SymmetroidError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
