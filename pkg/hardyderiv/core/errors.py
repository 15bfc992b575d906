"""
Error Types

Exception hierarchy shared by the numerical core and the command line.
Every exception carries the process exit code the CLI reports for it
and a details dictionary with the measured quantities behind the failure.
"""

from typing import Any, Dict, Optional


class HardyDerivError(Exception):
    """Base exception for all hardyderiv failures."""

    exit_code: int = 3

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        """
        Initialize the error.

        Args:
            message: Human readable description
            details: Measured values and inputs behind the failure
        """
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert the error to a dictionary."""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "exit_code": self.exit_code,
            "details": self.details,
        }


class InputError(HardyDerivError):
    """Malformed input: unreadable JSON, unknown symbol kinds, bad paths."""

    exit_code = 2


class PreconditionError(HardyDerivError):
    """An operation was called outside its documented preconditions."""

    exit_code = 3


class DomainError(PreconditionError):
    """Analytic logarithm requested for a function vanishing on the closed disc."""

    def __init__(
        self,
        message: str,
        zeros: Optional[list] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        details = dict(details or {})
        self.zeros = list(zeros or [])
        details["zeros"] = [[float(z.real), float(z.imag)] for z in self.zeros]
        super().__init__(message, details)


class DecompositionError(HardyDerivError):
    """The square decomposition failed although its splitting constant was inflated."""

    exit_code = 3


class VerificationError(HardyDerivError):
    """A certified inequality was refuted on a sampled input."""

    exit_code = 1
