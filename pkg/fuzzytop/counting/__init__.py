"""
Counting Package.

Closed-form counts of fuzzy topologies and the bitopology pair counts built
on them.
"""

from fuzzytop.counting.closed_forms import (
    FormulaResult,
    FormulaSource,
    count_k2,
    count_k3,
    count_k4,
    count_k5,
    count_k5_by_lattice_type,
    formula_count,
    formula_coverage,
    maximal_results,
)
from fuzzytop.counting.bitopology import (
    BitopCountResult,
    PairConvention,
    bitop_closed_form,
    bitop_count,
    enumerate_pairs,
    pair_count_from_T,
)

__all__ = [
    "FormulaResult",
    "FormulaSource",
    "count_k2",
    "count_k3",
    "count_k4",
    "count_k5",
    "count_k5_by_lattice_type",
    "formula_count",
    "formula_coverage",
    "maximal_results",
    "BitopCountResult",
    "PairConvention",
    "bitop_closed_form",
    "bitop_count",
    "enumerate_pairs",
    "pair_count_from_T",
]
