from math import comb

import pytest

from conftest import PROPERTY_CONTEXTS
from fuzzytop.counting.closed_forms import (
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
from fuzzytop.lattice.fuzzy_lattice import LatticeContext
from fuzzytop.topology.enumerator import (
    EnumBudget,
    enumerate_all_sizes,
    enumerate_topologies,
)
from fuzzytop.utils.error import (
    BudgetExceededError,
    HypothesisNotMetError,
    InvalidArgsError,
    NotCoveredError,
)

FORMULAS = {2: count_k2, 3: count_k3, 4: count_k4, 5: count_k5}
EXACT_FORMULAS = {**FORMULAS, 5: count_k5_by_lattice_type}


class TestSmallK:
    @pytest.mark.parametrize("n, m", [(1, 2), (5, 7), (2, 3)])
    def test_k2(self, n, m):
        assert count_k2(n, m) == 1

    def test_k3(self):
        assert count_k3(2, 3) == 7
        assert count_k3(1, 2) == 0
        assert count_k3(3, 2) == 6

    def test_k4(self):
        assert count_k4(2, 3) == 13
        assert count_k4(2, 2) == 1
        assert count_k4(1, 5) == 3

    def test_k5(self):
        assert count_k5(1, 4) == 0
        assert count_k5(2, 2) == 0
        assert count_k5(3, 2) == 6

    def test_k5_published_value(self):
        assert count_k5(2, 3) == 14

    @pytest.mark.parametrize(
        "n, m, published, exact", [(2, 3, 14, 12), (3, 3, 372, 360), (2, 4, 112, 108)]
    )
    def test_k5_overcounts_beyond_chains_and_crisp_sets(self, n, m, published, exact):
        assert count_k5(n, m) == published
        assert count_k5_by_lattice_type(n, m) == exact
        assert enumerate_topologies(LatticeContext(n, m), 5) == exact

    def test_values_are_exact_for_large_arguments(self):
        n, m = 60, 50
        assert count_k4(n, m) == (m * (m + 1) // 2) ** n - 3 * m**n + 2 ** (n - 1) + 2
        assert count_k3(n, m) == 50**60 - 2

    @pytest.mark.parametrize("n, m", [(0, 2), (1, 1), (2, 0)])
    def test_invalid_arguments(self, n, m):
        for formula in FORMULAS.values():
            with pytest.raises(InvalidArgsError):
                formula(n, m)

    def test_non_negative(self):
        for n in range(1, 13):
            for m in range(2, 13):
                for formula in (*FORMULAS.values(), count_k5_by_lattice_type):
                    assert formula(n, m) >= 0, (formula.__name__, n, m)


class TestMaximalResults:
    def test_maximal_cardinality(self):
        result = maximal_results(3, 2, 6)
        assert result.value == 6
        assert result.source is FormulaSource.MAXIMAL_CARD
        assert result.hypotheses_met == {"n>=m>=2": True}

    def test_gap(self):
        result = maximal_results(3, 2, 7)
        assert result.value == 0
        assert result.source is FormulaSource.GAP_ZERO

    def test_discrete_endpoint(self):
        result = maximal_results(3, 3, 27)
        assert result.value == 1
        assert result.source is FormulaSource.DISCRETE_ENDPOINT

    def test_agrees_with_k3_where_both_apply(self):
        assert maximal_results(2, 2, 3).value == count_k3(2, 2) == 2

    def test_refuses_when_n_below_m(self):
        with pytest.raises(HypothesisNotMetError):
            maximal_results(2, 3, 8)

    @pytest.mark.parametrize("k", [5, 9, 2])
    def test_k_outside_range(self, k):
        with pytest.raises(InvalidArgsError):
            maximal_results(3, 2, k)


class TestDispatch:
    def test_small_k_takes_precedence(self):
        assert formula_count(2, 2, 3).source is FormulaSource.FORMULA_K3
        assert formula_count(2, 3, 4).value == 13

    def test_maximal_range(self):
        assert formula_count(3, 2, 6).source is FormulaSource.MAXIMAL_CARD
        assert formula_count(4, 2, 13).source is FormulaSource.GAP_ZERO

    def test_discrete_endpoint_without_hypothesis(self):
        result = formula_count(2, 3, 9)
        assert result.value == 1
        assert result.source is FormulaSource.DISCRETE_ENDPOINT
        assert result.hypotheses_met == {"n>=m>=2": False}

    def test_not_covered(self):
        with pytest.raises(NotCoveredError):
            formula_count(3, 3, 6)
        with pytest.raises(NotCoveredError):
            formula_count(2, 3, 8)

    def test_k_above_lattice(self):
        with pytest.raises(InvalidArgsError):
            formula_count(2, 2, 7)
        with pytest.raises(InvalidArgsError):
            formula_count(2, 2, 1)

    def test_coverage(self):
        assert formula_coverage(2, 2) == [2, 3, 4]
        assert formula_coverage(3, 2) == [2, 3, 4, 5, 6, 7, 8]
        assert formula_coverage(2, 3) == [2, 3, 4, 5, 9]
        assert formula_coverage(1, 2) == [2]


class TestAgainstEnumeration:
    @pytest.mark.parametrize("n, m", PROPERTY_CONTEXTS)
    def test_small_k_formulas(self, n, m):
        ctx = LatticeContext(n, m)
        for k, formula in EXACT_FORMULAS.items():
            if k <= ctx.size:
                assert formula(n, m) == enumerate_topologies(ctx, k), k

    @pytest.mark.parametrize("n, m", PROPERTY_CONTEXTS)
    def test_published_k5_excess(self, n, m):
        ctx = LatticeContext(n, m)
        excess = m**n - (m - 1) ** n - 2**n + 1
        if ctx.size >= 5:
            assert count_k5(n, m) - enumerate_topologies(ctx, 5) == excess
        if n == 1 or m == 2:
            assert excess == 0

    @pytest.mark.parametrize("m", range(2, 13))
    def test_chain_identity(self, m):
        ctx = LatticeContext(1, m)
        for k in range(2, m + 1):
            expected = comb(m - 2, k - 2)
            assert enumerate_topologies(ctx, k) == expected
            if k in FORMULAS:
                assert FORMULAS[k](1, m) == expected

    @pytest.mark.parametrize("n, m", [(2, 2), (3, 2), (4, 2), (5, 2), (3, 3)])
    def test_top_of_the_range(self, n, m):
        ctx = LatticeContext(n, m)
        for k in range(m**n - m ** (n - 2), ctx.size + 1):
            assert maximal_results(n, m, k).value == enumerate_topologies(ctx, k), k

    @pytest.mark.parametrize("n, m", [(5, 2), (4, 3)])
    def test_top_of_the_range_beyond_budget(self, n, m):
        ctx = LatticeContext(n, m)
        low = m**n - m ** (n - 2)
        with pytest.raises(BudgetExceededError):
            enumerate_topologies(ctx, low, EnumBudget(max_candidates=10**6))

    def test_crisp_censuses(self):
        assert sum(enumerate_all_sizes(LatticeContext(2, 2)).values()) == 4
        census = enumerate_all_sizes(LatticeContext(3, 2))
        assert census == {2: 1, 3: 6, 4: 9, 5: 6, 6: 6, 7: 0, 8: 1}
        assert sum(census.values()) == 29
