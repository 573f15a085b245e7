"""
Utilities Package.

This package provides the error hierarchy used throughout the census.
"""

from fuzzytop.utils.error import (
    CensusError,
    InvalidArgsError,
    OutOfRangeError,
    InvalidKError,
    HypothesisNotMetError,
    NotCoveredError,
    BudgetExceededError,
    ExportError,
    ErrorReporter,
)

__all__ = [
    "CensusError",
    "InvalidArgsError",
    "OutOfRangeError",
    "InvalidKError",
    "HypothesisNotMetError",
    "NotCoveredError",
    "BudgetExceededError",
    "ExportError",
    "ErrorReporter",
]
