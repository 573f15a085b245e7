"""
Shared fixtures for the census tests.
"""

from typing import List, Tuple

import pytest

from fuzzytop.lattice.fuzzy_lattice import LatticeContext


def contexts_up_to(limit: int, max_chain: int = 12) -> List[Tuple[int, int]]:
    """(n, m) pairs with m^n <= limit; chains (n = 1) stop at max_chain."""
    pairs = []
    for n in range(1, 9):
        for m in range(2, limit + 1):
            if m**n > limit or (n == 1 and m > max_chain):
                continue
            pairs.append((n, m))
    return pairs


SMALL_CONTEXTS = contexts_up_to(27)
PROPERTY_CONTEXTS = contexts_up_to(81)


@pytest.fixture
def ctx23() -> LatticeContext:
    return LatticeContext(2, 3)


@pytest.fixture
def ctx32() -> LatticeContext:
    return LatticeContext(3, 2)
