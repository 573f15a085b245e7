"""
Fuzzy bitopology counts.

A fuzzy bitopological space pairs two fuzzy topologies on the same set. Both
topologies here have the same number of open sets k, and pairs are counted
under one of three conventions.
"""

import logging
from enum import Enum
from typing import Callable, List, Optional, Tuple

from fuzzytop.counting.closed_forms import (
    check_nm,
    formula_count,
    maximal_cardinality,
)
from fuzzytop.lattice.fuzzy_lattice import LatticeContext
from fuzzytop.topology.enumerator import (
    EnumBudget,
    TopologyFamily,
    enumerate_topologies,
)
from fuzzytop.utils.error import InvalidArgsError, NotCoveredError

logger = logging.getLogger(__name__)


class PairConvention(Enum):
    """
    How (tau1, tau2) pairs are counted.

    PAPER counts unordered pairs with tau1 = tau2 allowed, T(T+1)/2.
    ORDERED counts ordered pairs, T^2. DISTINCT counts unordered pairs of
    different topologies, T(T-1)/2.
    """

    PAPER = "paper-unordered-with-repetition"
    ORDERED = "ordered"
    DISTINCT = "unordered-distinct"

    @classmethod
    def from_flag(cls, flag: str) -> "PairConvention":
        """
        Map a command-line flag (paper, ordered, distinct) or a full tag.

        Raises:
            InvalidArgsError: On an unknown name.
        """
        aliases = {"paper": cls.PAPER, "ordered": cls.ORDERED, "distinct": cls.DISTINCT}
        if flag in aliases:
            return aliases[flag]
        for convention in cls:
            if convention.value == flag:
                return convention
        raise InvalidArgsError(f"unknown pair convention {flag!r}")


class BitopCountResult:
    """
    Number of bitopologies for one (n, m, k).

    Attributes:
        topology_count: T, the number of k-element fuzzy topologies.
        pair_count: Number of pairs under the convention.
        convention: Pair counting convention.
        method: "formula" or "enumerate".
    """

    __slots__ = ("topology_count", "pair_count", "convention", "method")

    def __init__(
        self, topology_count: int, pair_count: int, convention: PairConvention, method: str
    ) -> None:
        self.topology_count: int = topology_count
        self.pair_count: int = pair_count
        self.convention: PairConvention = convention
        self.method: str = method

    def __repr__(self) -> str:
        return (
            f"BitopCountResult(T={self.topology_count}, pairs={self.pair_count}, "
            f"convention={self.convention.value}, method={self.method})"
        )


# Sink receiving each enumerated pair
PairSink = Callable[[Tuple[TopologyFamily, TopologyFamily]], None]


def pair_count_from_T(T: int, conv: PairConvention = PairConvention.PAPER) -> int:
    """
    Number of pairs built from T topologies.

    Raises:
        InvalidArgsError: If T is not a non-negative integer.
    """
    if isinstance(T, bool) or not isinstance(T, int) or T < 0:
        raise InvalidArgsError(f"topology count must be a non-negative integer, got {T!r}")

    if conv is PairConvention.PAPER:
        return T * (T + 1) // 2
    if conv is PairConvention.ORDERED:
        return T * T
    return T * (T - 1) // 2


def bitop_count(
    n: int,
    m: int,
    k: int,
    conv: PairConvention = PairConvention.PAPER,
    method: str = "formula",
    budget: Optional[EnumBudget] = None,
) -> BitopCountResult:
    """
    Count bitopologies whose two topologies have k open sets each.

    Args:
        n: Number of points.
        m: Number of grades.
        k: Open sets in each topology.
        conv: Pair counting convention.
        method: "formula" to use closed forms or "enumerate" for brute force.
        budget: Enumeration limits.

    Raises:
        NotCoveredError: If method is formula and no closed form covers k.
        BudgetExceededError: If method is enumerate and the instance is too large.
        InvalidArgsError: On invalid arguments.
    """
    if method == "formula":
        T = formula_count(n, m, k).value
    elif method == "enumerate":
        T = enumerate_topologies(LatticeContext(n, m), k, budget)
    else:
        raise InvalidArgsError(f"unknown method {method!r}")

    return BitopCountResult(T, pair_count_from_T(T, conv), conv, method)


def bitop_closed_form(n: int, m: int, k: int) -> int:
    """
    Direct closed forms for the pair count under the default convention.

    k = 2 gives 1, k = 3 gives (m^(2n) - 3m^n + 2)/2, and for n >= m the
    maximal cardinality gives (n^4 - 2n^3 + 2n^2 - n)/2 with 0 above it
    short of the discrete endpoint k = m^n, which gives 1.

    Raises:
        NotCoveredError: Outside those cases.
    """
    check_nm(n, m)
    if k == 2:
        return 1
    if k == 3:
        return (m ** (2 * n) - 3 * m**n + 2) // 2
    if k == m**n:
        return 1
    if n >= m:
        low = maximal_cardinality(n, m)
        if k == low:
            return (n**4 - 2 * n**3 + 2 * n**2 - n) // 2
        if low < k < m**n:
            return 0
    raise NotCoveredError(f"no direct pair-count closed form for k={k}, n={n}, m={m}")


def enumerate_pairs(
    ctx: LatticeContext,
    k: int,
    conv: PairConvention = PairConvention.PAPER,
    budget: Optional[EnumBudget] = None,
    emit: Optional[PairSink] = None,
) -> int:
    """
    Enumerate every admissible pair of k-element topologies.

    For unordered conventions the first component is lexicographically no
    greater than the second.

    Raises:
        BudgetExceededError: If the topologies or their pairs exceed the budget.
    """
    budget = budget or EnumBudget()
    families: List[TopologyFamily] = []
    enumerate_topologies(ctx, k, budget, emit=families.append)
    budget.check_candidates(len(families) ** 2)

    count = 0
    for i, first in enumerate(families):
        if conv is PairConvention.ORDERED:
            partners = families
        elif conv is PairConvention.PAPER:
            partners = families[i:]
        else:
            partners = families[i + 1 :]
        for second in partners:
            count += 1
            if emit is not None:
                emit((first, second))

    logger.info(
        "%d pairs of %d-element topologies on %r (%s)", count, k, ctx, conv.value
    )
    return count
