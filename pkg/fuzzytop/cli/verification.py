"""
Formula-versus-enumeration verification sweeps.
"""

import logging
import time
from typing import Any, Dict, List, Optional

from fuzzytop.counting.closed_forms import formula_count
from fuzzytop.lattice.fuzzy_lattice import LatticeContext
from fuzzytop.topology.enumerator import EnumBudget, enumerate_topologies
from fuzzytop.utils.error import BudgetExceededError, InvalidArgsError, NotCoveredError

logger = logging.getLogger(__name__)

MATCH = "match"
MISMATCH = "mismatch"
NOT_COVERED = "not-covered"
OVER_BUDGET = "over-budget"


class VerificationRow:
    """
    One (n, m, k) cell of a sweep.

    Attributes:
        formula: Closed-form value, or None when no closed form covers k.
        enumeration: Enumerated value, or None when over budget.
        elapsed_ms: Wall time spent on the cell.
    """

    __slots__ = ("n", "m", "k", "formula", "enumeration", "elapsed_ms")

    def __init__(
        self,
        n: int,
        m: int,
        k: int,
        formula: Optional[int],
        enumeration: Optional[int],
        elapsed_ms: float,
    ) -> None:
        self.n: int = n
        self.m: int = m
        self.k: int = k
        self.formula: Optional[int] = formula
        self.enumeration: Optional[int] = enumeration
        self.elapsed_ms: float = elapsed_ms

    @property
    def match(self) -> bool:
        return (
            self.formula is not None
            and self.enumeration is not None
            and self.formula == self.enumeration
        )

    @property
    def status(self) -> str:
        if self.enumeration is None:
            return OVER_BUDGET
        if self.formula is None:
            return NOT_COVERED
        return MATCH if self.match else MISMATCH

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        row: Dict[str, Any] = {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "formula": self.formula,
            "enumeration": self.enumeration,
            "match": self.match,
            "status": self.status,
        }
        if timings:
            row["elapsed_ms"] = round(self.elapsed_ms, 3)
        return row


class VerificationReport:
    """
    Rows of a sweep and their summary.
    """

    def __init__(self) -> None:
        self.rows: List[VerificationRow] = []

    def add(self, row: VerificationRow) -> None:
        self.rows.append(row)

    @property
    def matches(self) -> int:
        return sum(1 for row in self.rows if row.status == MATCH)

    @property
    def mismatches(self) -> int:
        return sum(1 for row in self.rows if row.status == MISMATCH)

    @property
    def skips(self) -> int:
        return sum(1 for row in self.rows if row.status in (NOT_COVERED, OVER_BUDGET))

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def summary(self) -> Dict[str, int]:
        return {
            "cells": len(self.rows),
            "matches": self.matches,
            "mismatches": self.mismatches,
            "skips": self.skips,
        }

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        return {
            "rows": [row.to_dict(timings) for row in self.rows],
            "summary": self.summary(),
        }


def run_verification(
    n_max: int, m_max: int, k_max: int, budget: Optional[EnumBudget] = None
) -> VerificationReport:
    """
    Compare closed forms with enumeration over every cell with n <= n_max,
    2 <= m <= m_max and 2 <= k <= min(k_max, m^n).

    Cells over the enumeration budget and cells with no closed form are
    reported as skips.

    Raises:
        InvalidArgsError: If a bound is below its minimum.
    """
    if n_max < 1 or m_max < 2 or k_max < 2:
        raise InvalidArgsError(
            f"need max-n >= 1, max-m >= 2, max-k >= 2; got {n_max}, {m_max}, {k_max}"
        )
    budget = budget or EnumBudget()
    report = VerificationReport()

    for n in range(1, n_max + 1):
        for m in range(2, m_max + 1):
            ctx = LatticeContext(n, m)
            for k in range(2, min(k_max, ctx.size) + 1):
                start = time.perf_counter()

                try:
                    formula: Optional[int] = formula_count(n, m, k).value
                except NotCoveredError:
                    formula = None

                try:
                    enumeration: Optional[int] = enumerate_topologies(ctx, k, budget)
                except BudgetExceededError as e:
                    logger.info("skipping n=%d, m=%d, k=%d: %s", n, m, k, e.message)
                    enumeration = None

                row = VerificationRow(
                    n, m, k, formula, enumeration, (time.perf_counter() - start) * 1000
                )
                if row.status == MISMATCH:
                    logger.warning(
                        "mismatch at n=%d, m=%d, k=%d: formula %d, enumeration %d",
                        n,
                        m,
                        k,
                        formula,
                        enumeration,
                    )
                report.add(row)

    return report
