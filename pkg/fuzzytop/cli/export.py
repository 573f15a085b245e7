"""
Result tables and topology listings in CSV, JSON and text form.
"""

import csv
import io
import json
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence

from fuzzytop.counting.bitopology import PairConvention, pair_count_from_T
from fuzzytop.counting.closed_forms import formula_count
from fuzzytop.lattice.fuzzy_lattice import GradeVector, LatticeContext
from fuzzytop.topology.enumerator import EnumBudget, TopologyFamily, enumerate_topologies
from fuzzytop.utils.error import BudgetExceededError, ExportError, NotCoveredError

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ("n", "m", "k", "formula", "enumeration", "bitop_paper")


def family_key(family: TopologyFamily) -> List[GradeVector]:
    """Members as grade vectors sorted lexicographically; orders listings."""
    return sorted(family.grade_vectors())


def format_grades(grades: Sequence[int], ctx: LatticeContext, rational: bool = False) -> str:
    """
    Render one fuzzy subset as a bracketed grade vector.

    Args:
        grades: Grade ranks.
        ctx: Lattice context.
        rational: Print i/(m-1) instead of the rank i.
    """
    values: Iterable[Any] = ctx.rational_grades(grades) if rational else grades
    return "[" + ", ".join(str(value) for value in values) + "]"


def format_family(family: TopologyFamily, rational: bool = False) -> str:
    """Render a family as {[..], [..], ...} in grade-vector order."""
    return (
        "{"
        + ", ".join(format_grades(g, family.ctx, rational) for g in family_key(family))
        + "}"
    )


def listing_to_json(ctx: LatticeContext, k: int, families: List[TopologyFamily]) -> str:
    """
    Serialize a listing with every family as an array of integer grade vectors.
    """
    document = {
        "n": ctx.n,
        "m": ctx.m,
        "k": k,
        "count": len(families),
        "families": [[list(g) for g in family_key(f)] for f in families],
    }
    return json.dumps(document, indent=2)


def build_table_rows(
    n_values: Iterable[int],
    m_values: Iterable[int],
    k_values: Iterable[int],
    budget: Optional[EnumBudget] = None,
) -> List[Dict[str, Optional[int]]]:
    """
    Compute table rows ordered by n, then m, then k.

    Only k in [2, m^n] produce rows. A cell is None where no closed form
    covers k or the enumeration is over budget; the pair count uses the
    enumerated count when present, else the closed form.
    """
    budget = budget or EnumBudget()
    k_values = sorted(set(k_values))
    rows: List[Dict[str, Optional[int]]] = []

    for n in sorted(set(n_values)):
        for m in sorted(set(m_values)):
            ctx = LatticeContext(n, m)
            for k in k_values:
                if not 2 <= k <= ctx.size:
                    continue

                try:
                    formula: Optional[int] = formula_count(n, m, k).value
                except NotCoveredError:
                    formula = None

                try:
                    enumeration: Optional[int] = enumerate_topologies(ctx, k, budget)
                except BudgetExceededError:
                    logger.info("no enumeration for n=%d, m=%d, k=%d", n, m, k)
                    enumeration = None

                T = enumeration if enumeration is not None else formula
                rows.append(
                    {
                        "n": n,
                        "m": m,
                        "k": k,
                        "formula": formula,
                        "enumeration": enumeration,
                        "bitop_paper": (
                            None if T is None else pair_count_from_T(T, PairConvention.PAPER)
                        ),
                    }
                )

    return rows


def rows_to_csv(rows: List[Dict[str, Optional[int]]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for row in rows:
        writer.writerow(["" if row[c] is None else row[c] for c in TABLE_COLUMNS])
    return buffer.getvalue()


def rows_to_json(rows: List[Dict[str, Optional[int]]]) -> str:
    return json.dumps([{c: row[c] for c in TABLE_COLUMNS} for row in rows], indent=2) + "\n"


def write_text(path: str, text: str) -> None:
    """
    Write an artifact file.

    Raises:
        ExportError: If the file cannot be written.
    """
    try:
        with open(path, "w", encoding="utf-8", newline="") as file:
            file.write(text)
    except OSError as e:
        raise ExportError(f"Failed to write {path}: {str(e)}")
