"""
Topology Enumeration Package.

This package checks the fuzzy topology axioms, computes closures and
enumerates fuzzy topologies by size.
"""

from fuzzytop.topology.enumerator import (
    EnumBudget,
    EnumStatistics,
    TopologyEnumerator,
    TopologyFamily,
    closure,
    enumerate_all_sizes,
    enumerate_topologies,
    is_topology,
    naive_all_sizes,
    naive_count_topologies,
)

__all__ = [
    "EnumBudget",
    "EnumStatistics",
    "TopologyEnumerator",
    "TopologyFamily",
    "closure",
    "enumerate_all_sizes",
    "enumerate_topologies",
    "is_topology",
    "naive_all_sizes",
    "naive_count_topologies",
]
