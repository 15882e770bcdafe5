"""Exception hierarchy shared by the library and the CLI.

Each error carries a short machine-readable code and an optional location
hint; the CLI maps the classes to process exit codes (validation 2,
invariant violation 3, resource ceiling 4).
"""

from __future__ import annotations


class CrystalError(Exception):

    default_code = "ERROR"
    exit_code = 1

    def __init__(self, message: str, *, code: str | None = None, location: str | None = None):
        super().__init__(message)
        self.message = message
        self.code = code or type(self).default_code
        self.location = location

    def to_json(self) -> dict:
        err: dict = {"code": self.code, "message": self.message}
        if self.location is not None:
            err["location"] = self.location
        return {"error": err}


class ValidationError(CrystalError):
    """Malformed input; never raised once values reach the core."""

    default_code = "VALIDATION"
    exit_code = 2


class InvariantViolationError(CrystalError):
    """An internal consistency guarantee failed; indicates corrupt parameters."""

    default_code = "INVARIANT"
    exit_code = 3


class DTieError(InvariantViolationError):
    """Two distinct boundary boxes share a d-value."""

    default_code = "D_TIE"


class DegenerateClassError(InvariantViolationError):
    """A weight flip left the strictly-dominant range."""

    default_code = "DEGENERATE_CLASS"


class ResourceCeilingError(CrystalError):
    """A requested computation exceeds the configured resource ceiling."""

    default_code = "RESOURCE_CEILING"
    exit_code = 4
