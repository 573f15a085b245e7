"""
Fuzzy Topology Census Package.

Exact counts and enumeration of fuzzy topologies and fuzzy bitopologies on a
finite set with grades in a finite chain, with closed forms checked against
brute-force enumeration.
"""

__version__ = "1.0.0"

from fuzzytop.lattice.fuzzy_lattice import LatticeContext
from fuzzytop.topology.enumerator import EnumBudget, TopologyFamily, enumerate_topologies
from fuzzytop.counting.closed_forms import formula_count
from fuzzytop.counting.bitopology import PairConvention, bitop_count
from fuzzytop.utils.error import CensusError, BudgetExceededError, InvalidArgsError

__all__ = [
    "LatticeContext",
    "EnumBudget",
    "TopologyFamily",
    "enumerate_topologies",
    "formula_count",
    "PairConvention",
    "bitop_count",
    "CensusError",
    "BudgetExceededError",
    "InvalidArgsError",
]
