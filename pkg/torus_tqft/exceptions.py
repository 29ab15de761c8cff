"""
Exception hierarchy for torus_tqft.
"""

from typing import Any, Optional


class TorusTqftError(Exception):
    """Base class for every error raised by the package."""


class FieldMismatchError(TorusTqftError, TypeError):
    """Two scalars (or matrices) live over different fields."""


class ZeroDivisionFieldError(TorusTqftError, ZeroDivisionError):
    """Inversion of a zero scalar or of a singular matrix."""


class NotInSL2ZError(TorusTqftError, ValueError):
    """A 2x2 integer matrix without determinant one."""


class ArityError(TorusTqftError, ValueError):
    """Composition of arrows whose objects do not agree."""

    def __init__(self, message: str, subterm: Optional[Any] = None):
        super().__init__(message)
        self.subterm = subterm


class ParseError(TorusTqftError, ValueError):
    """Malformed text input. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class PreconditionError(TorusTqftError, ValueError):
    """Arguments outside an operation's domain; ``clause`` names the failed condition."""

    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause


class ValidationError(TorusTqftError):
    """A TQFT datum failed one or more axiom checks."""

    def __init__(self, report: Any):
        failed = ", ".join(report.failed_checks()) or "unknown"
        super().__init__(f"TQFT datum '{report.name}' failed: {failed}")
        self.report = report


class MissingEtaError(TorusTqftError):
    """The datum has no unit, but the arrow uses eta or eps."""


class UnknownNameError(TorusTqftError, KeyError):
    """Lookup of a built-in, named matrix or table that does not exist."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
