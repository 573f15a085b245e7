"""
Error handling module for the fuzzy topology census.

This module defines the exceptions raised by the lattice, enumeration and
counting layers, each carrying an error code for reporting and the exit
code the command-line front end maps it to.
"""

from typing import Any, Dict, List, Optional, TextIO


class CensusError(Exception):
    """Base class for all census exceptions."""

    ERROR_CODE = "E000"
    EXIT_CODE = 1

    def __init__(
        self,
        message: str,
        hint: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
        error_code: Optional[str] = None,
    ) -> None:
        """
        Initialize a new census exception.

        Args:
            message: Descriptive error message.
            hint: Optional suggestion shown below the message.
            details: Extra machine-readable context (sizes, limits, arguments).
            error_code: Specific error code. Defaults to the class code.
        """
        self.message: str = message
        self.hint: Optional[str] = hint
        self.details: Dict[str, Any] = dict(details or {})
        self.error_code: str = error_code or self.ERROR_CODE

        super().__init__(f"[{self.error_code}] {message}")

    def get_formatted_message(self) -> str:
        """
        Get the error message with its hint, if any.

        Returns:
            Formatted error message.
        """
        parts: List[str] = [str(self)]
        if self.hint:
            parts.append(f"  hint: {self.hint}")
        return "\n".join(parts)


class InvalidArgsError(CensusError):
    """Exception for invalid n, m, k, ranges or flags."""

    ERROR_CODE = "E100"
    EXIT_CODE = 2


class OutOfRangeError(InvalidArgsError):
    """Exception for grades or codes outside the lattice context."""

    ERROR_CODE = "E101"


class InvalidKError(InvalidArgsError):
    """Exception for an open-set count outside [2, m^n]."""

    ERROR_CODE = "E102"


class HypothesisNotMetError(CensusError):
    """Exception for maximal-cardinality results requested when n < m."""

    ERROR_CODE = "E201"
    EXIT_CODE = 2


class NotCoveredError(CensusError):
    """Exception for open-set counts with no closed form."""

    ERROR_CODE = "E202"
    EXIT_CODE = 2


class BudgetExceededError(CensusError):
    """Exception for instances too large for brute-force enumeration."""

    ERROR_CODE = "E301"
    EXIT_CODE = 3

    def __init__(self, message: str, required: int, allowed: int) -> None:
        """
        Initialize a budget error with the amounts that were compared.

        Args:
            message: Error message.
            required: Work or size the request needs.
            allowed: Configured cap.
        """
        self.required: int = required
        self.allowed: int = allowed
        super().__init__(
            message,
            hint="raise --max-candidates / --max-lattice-size or use --method formula",
            details={"required": required, "allowed": allowed},
        )


class ExportError(CensusError):
    """Exception for failures writing listings and tables."""

    ERROR_CODE = "E401"
    EXIT_CODE = 4


class ErrorReporter:
    """
    Helper class to generate and format error messages.
    """

    @staticmethod
    def report_error(error: CensusError, output: Optional[TextIO] = None) -> str:
        """
        Report an error.

        Args:
            error: The error to report.
            output: Output file object. Defaults to None.

        Returns:
            Formatted error message.
        """
        formatted: str = error.get_formatted_message()

        if output:
            print(formatted, file=output)

        return formatted

    @staticmethod
    def format_json_error(error: CensusError) -> Dict[str, Any]:
        """
        Format an error as a JSON-serializable dictionary.

        Args:
            error: The error to format.

        Returns:
            Dictionary representation of the error.
        """
        result: Dict[str, Any] = {
            "type": error.__class__.__name__,
            "code": error.error_code,
            "message": error.message,
            "exit_code": error.EXIT_CODE,
        }

        if error.hint:
            result["hint"] = error.hint

        if error.details:
            result["details"] = error.details

        return result
