"""Exception types shared across the package.

The CLI maps these onto its exit codes: ParseError -> 2,
PreconditionError -> 3, VerificationError -> 4.
"""

from __future__ import annotations


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


class ParseError(ValueError):
    """Malformed input text; ``code`` is a stable machine-readable tag."""

    def __init__(self, code: str, message: str, token: str | None = None):
        super().__init__(message)
        self.code = code
        self.token = token


class VerificationError(RuntimeError):
    """An emitted certificate or derivation failed its re-check.

    This always indicates a bug, never a property of the input.
    """
