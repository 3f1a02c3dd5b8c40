"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`BottKitError`.
The CLI maps the three families below onto distinct exit codes.
"""

from __future__ import annotations


class BottKitError(Exception):
    """Base class for all library errors."""


class InputError(BottKitError, ValueError):
    """Malformed or out-of-range input."""


class PreconditionError(BottKitError, ValueError):
    """Well-formed input that violates an operation's precondition."""


class InvalidType(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)


class DimensionMismatch(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class NonIntegralWeight(PreconditionError):
    pass


class SingularWeight(PreconditionError):
    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class SingularShiftedWeight(SingularWeight):
    pass


class NotComparable(PreconditionError):
    pass


class NotDominant(PreconditionError):
    pass


class NotSigmaDominant(PreconditionError):
    def __init__(self, message: str, index: int | None = None):
        self.index = index
        super().__init__(message)


class AlphaInSigma(PreconditionError):
    pass


class SigmaIsFull(PreconditionError):
    pass


class InvalidConfig(PreconditionError):
    pass


class NotABRoot(PreconditionError):
    pass


class NotSimplyLacedConfig(PreconditionError):
    pass


class ConditionABViolated(PreconditionError):
    def __init__(self, message: str, index: int | None = None):
        self.index = index
        super().__init__(message)


class OracleViolation(BottKitError, AssertionError):
    """An oracle found a counterexample to a property the build relies on."""

    def __init__(self, message: str, weight=None, root=None):
        self.weight = weight
        self.root = root
        super().__init__(message)


class ConsistencyError(BottKitError, RuntimeError):
    """Internal sanity check failed; indicates a bug, not bad input."""
