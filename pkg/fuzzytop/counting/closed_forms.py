"""
Closed-form counts of fuzzy topologies.

Every formula is evaluated in exact integer arithmetic. tau(n, m, k) denotes
the number of fuzzy topologies with k open sets on an n-point set with grades
in an m-element chain.
"""

import logging
from enum import Enum
from math import comb
from typing import Dict, List, Optional

from fuzzytop.utils.error import (
    HypothesisNotMetError,
    InvalidArgsError,
    NotCoveredError,
)

logger = logging.getLogger(__name__)


class FormulaSource(Enum):
    """
    The result a closed-form value comes from.
    """

    TRIVIAL_K2 = "trivial-k2"
    FORMULA_K3 = "formula-k3"
    FORMULA_K4 = "formula-k4"
    FORMULA_K5 = "formula-k5"
    GAP_ZERO = "gap-zero"
    MAXIMAL_CARD = "maximal-card"
    DISCRETE_ENDPOINT = "discrete-endpoint"


class FormulaResult:
    """
    A closed-form count with its provenance.

    Attributes:
        value: Exact non-negative count.
        source: The result the value comes from.
        hypotheses_met: Side conditions of that result and whether they hold.
    """

    __slots__ = ("value", "source", "hypotheses_met")

    def __init__(
        self,
        value: int,
        source: FormulaSource,
        hypotheses_met: Optional[Dict[str, bool]] = None,
    ) -> None:
        if value < 0:
            raise ValueError(f"closed form produced negative count {value}")
        self.value: int = value
        self.source: FormulaSource = source
        self.hypotheses_met: Dict[str, bool] = dict(hypotheses_met or {})

    def __repr__(self) -> str:
        return f"FormulaResult(value={self.value}, source={self.source.value})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormulaResult):
            return NotImplemented
        return (self.value, self.source) == (other.value, other.source)


def check_nm(n: int, m: int) -> None:
    for name, value in (("n", n), ("m", m)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidArgsError(f"{name} must be an integer, got {value!r}")
    if n < 1:
        raise InvalidArgsError(f"n must be >= 1, got {n}")
    if m < 2:
        raise InvalidArgsError(f"m must be >= 2, got {m}")


def count_k2(n: int, m: int) -> int:
    """
    tau(n, m, 2): only the indiscrete topology {0_F, 1_F}.

    Raises:
        InvalidArgsError: If n < 1 or m < 2.
    """
    check_nm(n, m)
    return 1


def count_k3(n: int, m: int) -> int:
    """
    tau(n, m, 3) = m^n - 2: one proper open set, any of the m^n - 2.

    Raises:
        InvalidArgsError: If n < 1 or m < 2.
    """
    check_nm(n, m)
    return m**n - 2


def count_k4(n: int, m: int) -> int:
    """
    tau(n, m, 4) = (m(m+1)/2)^n - 3m^n + 2^(n-1) + 2.

    Raises:
        InvalidArgsError: If n < 1 or m < 2.
    """
    check_nm(n, m)
    triangular = m * (m + 1) // 2
    return triangular**n - 3 * m**n + 2 ** (n - 1) + 2


def count_k5(n: int, m: int) -> int:
    """
    tau(n, m, 5) = C(m+2, 3)^n - 4 C(m+1, 2)^n + (2m-1)^n + 5m^n - (m-1)^n - 2^(n+1).

    This is the published closed form. It agrees with enumeration for n = 1
    and for m = 2 and overcounts otherwise (14 against 12 at n=2, m=3);
    count_k5_by_lattice_type gives the exact value.

    Raises:
        InvalidArgsError: If n < 1 or m < 2.
    """
    check_nm(n, m)
    return (
        comb(m + 2, 3) ** n
        - 4 * comb(m + 1, 2) ** n
        + (2 * m - 1) ** n
        + 5 * m**n
        - (m - 1) ** n
        - 2 ** (n + 1)
    )


def count_k5_by_lattice_type(n: int, m: int) -> int:
    """
    tau(n, m, 5) counted by the shape of the five open sets.

    M^X is distributive, so a five-element fuzzy topology is a chain, a
    square with a bottom below it (1 + 2x2), or a square with a top above it
    (2x2 + 1). Inclusion-exclusion over the weak 3-chains gives the chains;
    each square shape contributes ((2m-1)^n - 2^n - 2m^n + 3) / 2, and the two
    are exchanged by complement:

        C(m+2, 3)^n - 4 C(m+1, 2)^n + (2m-1)^n + 4m^n - 2^n - 1

    count_k5 exceeds this by m^n - (m-1)^n - 2^n + 1, which vanishes only for
    n = 1 or m = 2.

    Raises:
        InvalidArgsError: If n < 1 or m < 2.
    """
    check_nm(n, m)
    chains = comb(m + 2, 3) ** n - 4 * comb(m + 1, 2) ** n + 6 * m**n - 4
    squares = (2 * m - 1) ** n - 2**n - 2 * m**n + 3
    return chains + squares


def maximal_cardinality(n: int, m: int) -> int:
    """Number of open sets of a maximal non-discrete topology, m^n - m^(n-2)."""
    return m**n - m ** (n - 2)


def maximal_results(n: int, m: int, k: int) -> FormulaResult:
    """
    Counts at the top of the cardinality range, valid for n >= m >= 2.

    Above the maximal non-discrete cardinality m^n - m^(n-2) only the discrete
    topology exists; at that cardinality there are exactly n(n-1) topologies.

    Args:
        n: Number of points.
        m: Number of grades.
        k: Number of open sets, in [m^n - m^(n-2), m^n].

    Returns:
        FormulaResult with source gap-zero, maximal-card or discrete-endpoint.

    Raises:
        HypothesisNotMetError: If n < m.
        InvalidArgsError: If n, m or k are out of range.
    """
    check_nm(n, m)
    if n < m:
        raise HypothesisNotMetError(
            f"maximal-cardinality results need n >= m, got n={n}, m={m}",
            hint="use enumeration for this instance",
        )

    low = maximal_cardinality(n, m)
    size = m**n
    if isinstance(k, bool) or not isinstance(k, int) or not low <= k <= size:
        raise InvalidArgsError(f"k={k} outside [{low}, {size}] for n={n}, m={m}")

    hypotheses = {"n>=m>=2": True}
    if k == size:
        return FormulaResult(1, FormulaSource.DISCRETE_ENDPOINT, hypotheses)
    if k == low:
        return FormulaResult(n * (n - 1), FormulaSource.MAXIMAL_CARD, hypotheses)
    return FormulaResult(0, FormulaSource.GAP_ZERO, hypotheses)


_SMALL_K = {
    2: (count_k2, FormulaSource.TRIVIAL_K2),
    3: (count_k3, FormulaSource.FORMULA_K3),
    4: (count_k4, FormulaSource.FORMULA_K4),
    5: (count_k5, FormulaSource.FORMULA_K5),
}


def formula_count(n: int, m: int, k: int) -> FormulaResult:
    """
    Evaluate the closed form that covers (n, m, k).

    The small-k formulas take precedence, then the maximal-cardinality
    results (n >= m), then the discrete endpoint k = m^n.

    Raises:
        InvalidArgsError: If n, m or k are out of range.
        NotCoveredError: If no closed form covers this k.
    """
    check_nm(n, m)
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise InvalidArgsError(f"k must be an integer >= 2, got {k!r}")

    if k in _SMALL_K:
        count, source = _SMALL_K[k]
        return FormulaResult(count(n, m), source)

    size = m**n
    if k > size:
        raise InvalidArgsError(f"k={k} exceeds m^n={size} for n={n}, m={m}")
    if n >= m and k >= maximal_cardinality(n, m):
        return maximal_results(n, m, k)
    if k == size:
        return FormulaResult(1, FormulaSource.DISCRETE_ENDPOINT, {"n>=m>=2": n >= m})

    raise NotCoveredError(
        f"no closed form for k={k} with n={n}, m={m}",
        hint="use --method enumerate",
        details={"n": n, "m": m, "k": k},
    )


def formula_coverage(n: int, m: int) -> List[int]:
    """
    Open-set counts k in [2, m^n] that some closed form covers, ascending.

    Raises:
        InvalidArgsError: If n < 1 or m < 2.
    """
    check_nm(n, m)
    size = m**n
    covered = {k for k in _SMALL_K if k <= size}
    if n >= m:
        covered.update(range(maximal_cardinality(n, m), size + 1))
    covered.add(size)
    return sorted(covered)
