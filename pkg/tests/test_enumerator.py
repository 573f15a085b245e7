import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import PROPERTY_CONTEXTS, SMALL_CONTEXTS
from fuzzytop.lattice.fuzzy_lattice import LatticeContext
from fuzzytop.topology.enumerator import (
    EnumBudget,
    EnumStatistics,
    TopologyFamily,
    closure,
    enumerate_all_sizes,
    enumerate_topologies,
    is_topology,
    naive_all_sizes,
    naive_count_topologies,
)
from fuzzytop.utils.error import (
    BudgetExceededError,
    InvalidArgsError,
    InvalidKError,
    OutOfRangeError,
)


ORACLE_LIMIT = 10**6
QUICK_ORACLE_LIMIT = 20000


def oracle_cells():
    """Every (n, m, k) whose naive search examines at most ORACLE_LIMIT families."""
    cells = []
    for n, m in PROPERTY_CONTEXTS:
        size = m**n
        for k in range(2, size + 1):
            candidates = math.comb(size - 2, k - 2)
            if candidates > ORACLE_LIMIT:
                continue
            marks = [pytest.mark.slow] if candidates > QUICK_ORACLE_LIMIT else []
            cells.append(pytest.param(n, m, k, marks=marks, id=f"n{n}-m{m}-k{k}"))
    return cells


ORACLE_CELLS = oracle_cells()


def listing(ctx, k, **kwargs):
    families = []
    enumerate_topologies(ctx, k, emit=families.append, **kwargs)
    return families


class TestIsTopology:
    def test_indiscrete(self, ctx23):
        assert is_topology([0, ctx23.top], ctx23)

    def test_two_nested_proper_sets(self, ctx23):
        a1, a2 = ctx23.encode([0, 1]), ctx23.encode([0, 2])
        assert is_topology([0, ctx23.top, a1, a2], ctx23)

    def test_missing_join(self, ctx23):
        a, b = ctx23.encode([0, 1]), ctx23.encode([2, 0])
        assert not is_topology([0, ctx23.top, a, b], ctx23)

    def test_missing_bottom_or_top(self, ctx23):
        assert not is_topology([ctx23.top], ctx23)
        assert not is_topology([0, 4], ctx23)

    def test_invalid_code(self, ctx23):
        with pytest.raises(OutOfRangeError):
            is_topology([0, 8, 9], ctx23)


class TestClosure:
    def test_empty_seed(self, ctx23):
        assert closure([], ctx23).members == (0, 8)

    def test_single_proper_member(self, ctx23):
        a = ctx23.encode([0, 1])
        assert closure([a], ctx23).members == (0, a, 8)

    def test_adds_join(self, ctx23):
        a, b = ctx23.encode([0, 1]), ctx23.encode([2, 0])
        expected = sorted([0, 8, a, b, ctx23.encode([2, 1])])
        assert list(closure([a, b], ctx23).members) == expected

    def test_doubletons_close_to_discrete(self):
        ctx = LatticeContext(3, 2)
        seed = [ctx.encode([1, 1, 0]), ctx.encode([0, 1, 1]), ctx.encode([1, 0, 1])]
        family = closure(seed, ctx)
        # meets of the doubletons are the singletons
        assert len(family) == 8
        assert is_topology(family.members, ctx)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_operator_laws(self, data):
        n, m = data.draw(st.sampled_from([(2, 3), (3, 2), (2, 4), (1, 6)]))
        ctx = LatticeContext(n, m)
        codes = st.sets(st.integers(0, ctx.top), max_size=4)
        small = data.draw(codes)
        large = small | data.draw(codes)

        closed_small = closure(small, ctx)
        closed_large = closure(large, ctx)
        assert small <= set(closed_small.members)
        assert set(closed_small.members) <= set(closed_large.members)
        assert closure(closed_small.members, ctx) == closed_small
        assert is_topology(closed_small.members, ctx)

    @settings(max_examples=80, deadline=None)
    @given(st.sets(st.integers(0, 8), max_size=6))
    def test_topology_iff_closed(self, members):
        ctx = LatticeContext(2, 3)
        expected = closure(members, ctx).members == tuple(sorted(members))
        assert is_topology(members, ctx) == expected


class TestTopologyFamily:
    def test_rejects_non_topology(self, ctx23):
        with pytest.raises(InvalidArgsError):
            TopologyFamily(ctx23, [0, 8, 3, 2])

    def test_grade_vectors(self, ctx23):
        family = TopologyFamily(ctx23, [8, 0, 3])
        assert family.members == (0, 3, 8)
        assert family.k == 3
        assert family.grade_vectors() == [(0, 0), (0, 1), (2, 2)]


class TestEnumerateTopologies:
    @pytest.mark.parametrize(
        "n, m, k, expected",
        [
            (2, 3, 4, 13),
            (2, 3, 5, 12),
            (3, 3, 5, 360),
            (2, 4, 5, 108),
            (2, 3, 2, 1),
            (4, 3, 2, 1),
            (3, 2, 6, 6),
            (3, 2, 7, 0),
            (3, 2, 8, 1),
            (2, 2, 3, 2),
        ],
    )
    def test_known_counts(self, n, m, k, expected):
        assert enumerate_topologies(LatticeContext(n, m), k) == expected

    def test_four_open_sets_on_two_points_three_grades(self, ctx23):
        # grades 0, 0.5, 1 as ranks 0, 1, 2
        a = {
            1: (0, 1),
            2: (0, 2),
            3: (2, 0),
            4: (2, 1),
            5: (1, 0),
            6: (1, 1),
            7: (1, 2),
        }
        pairs = [
            (1, 2), (1, 4), (1, 6), (1, 7), (2, 7), (3, 4), (3, 5),
            (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (2, 3),
        ]
        expected = {
            frozenset([0, ctx23.top, ctx23.encode(a[i]), ctx23.encode(a[j])])
            for i, j in pairs
        }
        found = {frozenset(f.members) for f in listing(ctx23, 4)}
        assert found == expected

    def test_emission_is_lexicographic_and_valid(self, ctx23):
        families = listing(ctx23, 5)
        assert len(families) == 12
        keys = [f.members for f in families]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        assert all(is_topology(f.members, ctx23) for f in families)

    @pytest.mark.parametrize("n, m", SMALL_CONTEXTS)
    def test_discrete_topology_is_unique(self, n, m):
        ctx = LatticeContext(n, m)
        assert enumerate_topologies(ctx, ctx.size) == 1

    @pytest.mark.parametrize("k", [0, 1, 10, -3])
    def test_invalid_k(self, ctx23, k):
        with pytest.raises(InvalidKError):
            enumerate_topologies(ctx23, k)

    def test_candidate_budget(self, ctx23):
        with pytest.raises(BudgetExceededError) as info:
            enumerate_topologies(ctx23, 5, EnumBudget(max_candidates=10))
        assert info.value.required == math.comb(7, 3)
        assert info.value.allowed == 10
        assert info.value.EXIT_CODE == 3

    def test_lattice_budget(self, ctx23):
        with pytest.raises(BudgetExceededError):
            enumerate_topologies(ctx23, 3, EnumBudget(max_lattice_size=8))

    def test_budget_must_be_positive(self):
        with pytest.raises(InvalidArgsError):
            EnumBudget(max_candidates=0)
        with pytest.raises(InvalidArgsError):
            EnumBudget(workers=0)

    def test_statistics_are_collected(self, ctx23):
        stats = EnumStatistics()
        enumerate_topologies(ctx23, 4, statistics=stats)
        report = stats.get_report()
        assert report["families"] == 13
        assert report["nodes"] >= 13
        assert report["partitions"] > 0

    def test_parallel_matches_serial(self, ctx32):
        serial = listing(ctx32, 5)
        parallel = listing(ctx32, 5, budget=EnumBudget(workers=2))
        assert [f.members for f in parallel] == [f.members for f in serial]
        assert enumerate_topologies(ctx32, 4, EnumBudget(workers=2)) == 9


class TestOracles:
    @pytest.mark.parametrize("n, m, k", ORACLE_CELLS)
    def test_pruned_search_matches_naive(self, n, m, k):
        ctx = LatticeContext(n, m)
        assert enumerate_topologies(ctx, k) == naive_count_topologies(ctx, k)

    def test_five_open_sets_on_two_points_three_grades(self, ctx23):
        assert naive_count_topologies(ctx23, 5) == enumerate_topologies(ctx23, 5) == 12

    def test_naive_listing_matches(self, ctx23):
        naive = []
        naive_count_topologies(ctx23, 4, emit=naive.append)
        assert [f.members for f in naive] == [f.members for f in listing(ctx23, 4)]


class TestCensus:
    def test_two_crisp_points(self):
        ctx = LatticeContext(2, 2)
        assert enumerate_all_sizes(ctx) == {2: 1, 3: 2, 4: 1}

    def test_four_grade_chain(self):
        assert enumerate_all_sizes(LatticeContext(1, 4)) == {2: 1, 3: 2, 4: 1}

    def test_two_points_three_grades(self, ctx23):
        census = enumerate_all_sizes(ctx23)
        assert census[4] == 13
        assert census[5] == 12

    def test_crisp_totals_from_naive_oracle(self):
        assert sum(naive_all_sizes(LatticeContext(2, 2)).values()) == 4
        census = naive_all_sizes(LatticeContext(3, 2))
        assert sum(census.values()) == 29
        assert census == enumerate_all_sizes(LatticeContext(3, 2))

    @pytest.mark.parametrize("n, m", [(2, 2), (3, 2), (1, 6), (2, 3)])
    def test_census_agrees_with_per_k_counts(self, n, m):
        ctx = LatticeContext(n, m)
        census = enumerate_all_sizes(ctx)
        assert census == {k: enumerate_topologies(ctx, k) for k in range(2, ctx.size + 1)}

    def test_census_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_all_sizes(LatticeContext(3, 3), EnumBudget(max_candidates=1000))


def point_permutation_generators(n):
    """Adjacent transpositions plus a rotation; together they generate every permutation."""
    generators = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        generators.append(perm)
    if n > 2:
        generators.append([(i + 1) % n for i in range(n)])
    return generators


class TestInvariance:
    @pytest.mark.parametrize("n, m", PROPERTY_CONTEXTS)
    def test_point_permutations(self, n, m):
        ctx = LatticeContext(n, m)
        for k in range(2, min(5, ctx.size) + 1):
            families = {f.members for f in listing(ctx, k)}
            for perm in point_permutation_generators(n):
                moved = {tuple(sorted(ctx.permute(c, perm) for c in f)) for f in families}
                assert moved == families, (k, perm)

    @pytest.mark.parametrize("n, m", PROPERTY_CONTEXTS)
    def test_complement(self, n, m):
        ctx = LatticeContext(n, m)
        for k in range(2, min(5, ctx.size) + 1):
            families = {f.members for f in listing(ctx, k)}
            flipped = {tuple(sorted(ctx.complement(c) for c in f)) for f in families}
            assert flipped == families, k

    @pytest.mark.parametrize("n, m, k", [(3, 2, 6), (2, 3, 6), (2, 4, 7)])
    def test_larger_families(self, n, m, k):
        ctx = LatticeContext(n, m)
        families = {f.members for f in listing(ctx, k)}
        flipped = {tuple(sorted(ctx.complement(c) for c in f)) for f in families}
        assert flipped == families
        for perm in point_permutation_generators(n):
            assert {tuple(sorted(ctx.permute(c, perm) for c in f)) for f in families} == families
