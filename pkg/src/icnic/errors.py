"""Exception types. Every error carries a short machine-readable ``code``."""

from __future__ import annotations


class IcnicError(Exception):
    """Base class; ``code`` is one of the upper-case tags listed per subclass."""

    def __init__(self, code: str, message: str = "") -> None:
        self.code = code
        self.message = message
        super().__init__(f"{code}: {message}" if message else code)


class FormatError(IcnicError):
    """Malformed interchange text (code ``FORMAT``)."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__("FORMAT", message)


class DrawingError(IcnicError):
    """Structurally invalid drawing.

    Codes: TOO_SMALL, LOOP_EDGE, DUPLICATE_EDGE, BAD_SEGMENT, TWIN_MISMATCH,
    CROSSING_DEGREE, NON_ALTERNATING_CROSSING, ADJACENT_CROSSING,
    DISCONNECTED, NON_SPHERICAL.
    """


class InsertionError(IcnicError):
    """Rejected edit: INVALID_INSERTION, NOT_FALSE_3_FACE, CLASS_VIOLATION."""


class SpecError(IcnicError):
    """Bad crossing specification for the search module (INVALID_SPEC)."""

    def __init__(self, message: str) -> None:
        super().__init__("INVALID_SPEC", message)


class BudgetExceeded(IcnicError):
    def __init__(self, limit: int) -> None:
        super().__init__("BUDGET_EXCEEDED", f"work limit {limit} reached")
        self.limit = limit
