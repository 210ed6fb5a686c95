"""Exception hierarchy shared by every module."""


class ActegoryError(Exception):
    """Base class for all engine errors."""


class ValidationError(ActegoryError):
    """A value failed one of its structural invariants."""


class AssociativityViolation(ValidationError):
    pass


class IdentityViolation(ValidationError):
    pass


class DanglingArrow(ValidationError):
    pass


class MissingComposite(ValidationError):
    pass


class FunctorialityViolation(ValidationError):
    pass


class NaturalityViolation(ValidationError):
    pass


class UnknownObject(ActegoryError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class BaseMismatch(ActegoryError):
    """Two values that must live over the same category do not."""


class TypeMismatch(ActegoryError):
    pass


class SizeLimitExceeded(ActegoryError):
    """A construction or search outgrew the configured bounds.

    Raised instead of truncating; callers that sweep over many instances
    turn it into an explicit "skip" verdict.
    """


class ParseError(ActegoryError):
    """Malformed text input; carries the 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<text>"):
        self.message, self.line, self.column, self.source = message, line, column, source
        super().__init__(f"{source}:{line}:{column}: {message}")


class NameClash(ActegoryError):
    pass


class UnknownName(ActegoryError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ArityError(ActegoryError):
    pass
