"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class KnotError(Exception):
    """Base class for all library errors."""

    code = "KnotError"


class ValidationError(KnotError):
    code = "ValidationError"


class MalformedCode(ValidationError):
    code = "MalformedCode"


class NonPlanar(ValidationError):
    code = "NonPlanar"


class MultiComponent(ValidationError):
    code = "MultiComponent"


class BadParams(ValidationError):
    code = "BadParams"


class NotCoprime(BadParams):
    code = "NotCoprime"


class UnknownCrossing(ValidationError):
    code = "UnknownCrossing"


class IllegalMove(ValidationError):
    code = "IllegalMove"


class InternalScheduleError(KnotError):
    """A scheduled deformation step could not be realized (engine or schedule bug)."""

    code = "InternalScheduleError"


class VerificationError(KnotError):
    code = "VerificationError"

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class IllegalStep(VerificationError):
    code = "IllegalStep"


class StateMismatch(VerificationError):
    code = "StateMismatch"


class TargetMismatch(VerificationError):
    code = "TargetMismatch"


class LimitsExceeded(KnotError):
    code = "LimitsExceeded"

    def __init__(self, message: str, explored: int = 0):
        super().__init__(message)
        self.explored = explored
