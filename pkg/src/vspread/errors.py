"""Exception hierarchy shared by every module."""


class SpreadError(Exception):
    """Base class for all errors raised by vspread."""


class ContractError(SpreadError, ValueError):
    """An argument violates a documented precondition."""


class UnsupportedContextError(ContractError):
    """The context lacks full support (n > t_1 + ... + t_{d-1})."""


class InvalidMonomialError(SpreadError, ValueError):
    """A monomial has an index outside [1, n] or is otherwise malformed."""


class MonomialParseError(InvalidMonomialError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)


class OutOfRangeError(SpreadError, ValueError):
    """A degree or integer argument lies outside the admissible range."""


class InfeasibleSizeError(OutOfRangeError):
    """Requested set size exceeds the number of available monomials."""


class ShadowEmptyError(SpreadError):
    """The shadow of a lex segment is empty, so it has no minimum."""


class NotStronglyStableError(SpreadError):
    """An operation that needs a strongly stable input was given something else."""


class UnitIdealError(SpreadError):
    """The unit ideal has no f-vector in the proper-ideal sense."""


class ClassificationError(SpreadError):
    """A sequence is not the f-vector of any strongly stable ideal."""

    def __init__(self, message: str, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics
