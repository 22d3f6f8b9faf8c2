"""
Exception hierarchy for the kernel.

Every failure the kernel, parser or checker can report derives from
KernelError, so the CLI and the HTTP routers can translate them in one
place:

- ParseError                 -> HTTP 400 / exit 2
- CheckError and subclasses  -> HTTP 422 / exit 2
- StuckError, FuelExhausted  -> HTTP 500 / exit 3
- DefinitionNotFound         -> HTTP 404 / exit 1
- NotEvaluable               -> HTTP 400 / exit 1
"""
from __future__ import annotations

from typing import Any, Optional, Sequence


class KernelError(Exception):
    """Base class for every error raised by the kernel."""

    error_class = "KernelError"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ParseError(KernelError):
    """Syntax error in surface source, with a 1-based position."""

    error_class = "ParseError"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SubstitutionError(KernelError):
    """A name substitution was applied outside its domain, or composed across mismatched contexts."""

    error_class = "SubstitutionError"


class FaceError(KernelError):
    """A face operation received names outside the context it was asked about."""

    error_class = "FaceError"


class StuckError(KernelError):
    """No reduction rule applies to a non-introduced term."""

    error_class = "Stuck"

    def __init__(self, reason: Any, term: Any):
        super().__init__(f"stuck ({reason.value if hasattr(reason, 'value') else reason})")
        self.reason = reason
        self.term = term


class FuelExhausted(KernelError):
    """The step budget ran out. Reported as a kernel bug for in-scope inputs."""

    error_class = "FuelExhausted"

    def __init__(self, steps: int, tail: Sequence[Any] = ()):
        super().__init__(f"fuel exhausted after {steps} steps")
        self.steps = steps
        self.tail = list(tail)


class DefinitionNotFound(KernelError):
    error_class = "DefinitionNotFound"


class CheckError(KernelError):
    """Base class for type checker rejections."""

    error_class = "CheckError"

    def __init__(self, message: str, face: Optional[Any] = None):
        super().__init__(message)
        self.face = face


class UnboundVariable(CheckError):
    error_class = "UnboundVariable"


class CannotSynthesize(CheckError):
    error_class = "CannotSynthesize"


class Mismatch(CheckError):
    error_class = "Mismatch"

    def __init__(self, expected: Any, got: Any, message: str = "", face: Optional[Any] = None):
        super().__init__(message or "type mismatch", face)
        self.expected = expected
        self.got = got


class RestrictionUnsatisfied(CheckError):
    """Two terms that must agree on a face disagree on one of its irreducible faces."""

    error_class = "RestrictionUnsatisfied"


class CheckerIncomplete(CheckError):
    """The checker ran out of fuel or met a form it cannot decide."""

    error_class = "CheckerIncomplete"


class NotEvaluable(KernelError):
    """A definition whose type is neither N nor a truncation was asked for a value."""

    error_class = "NotEvaluable"


_HTTP_STATUS = (
    (ParseError, 400),
    (NotEvaluable, 400),
    (DefinitionNotFound, 404),
    (CheckError, 422),
    (StuckError, 500),
    (FuelExhausted, 500),
)

_EXIT_CODES = (
    (ParseError, 2),
    (CheckError, 2),
    (StuckError, 3),
    (FuelExhausted, 3),
    (DefinitionNotFound, 1),
    (NotEvaluable, 1),
)


def http_status(exc: KernelError) -> int:
    for cls, status in _HTTP_STATUS:
        if isinstance(exc, cls):
            return status
    return 500


def exit_code(exc: KernelError) -> int:
    for cls, code in _EXIT_CODES:
        if isinstance(exc, cls):
            return code
    return 3
