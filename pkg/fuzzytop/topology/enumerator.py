"""
Topology enumeration module for the fuzzy topology census.

This module decides whether a family of fuzzy subsets is a fuzzy topology,
computes closures, and counts or lists every fuzzy topology with a given
number of open sets by depth-first search with closure pruning. A naive
combinations-based enumerator is kept alongside as an independent oracle.
"""

import concurrent.futures
import itertools
import logging
import math
import time
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
)

from fuzzytop.lattice.fuzzy_lattice import GradeVector, LatticeContext, validate_codes
from fuzzytop.utils.error import (
    BudgetExceededError,
    InvalidArgsError,
    InvalidKError,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_CANDIDATES = 10**8
DEFAULT_MAX_LATTICE_SIZE = 4096
DEFAULT_WORKERS = 1


class TopologyFamily:
    """
    A fuzzy topology: a sorted family of codes closed under meet and join
    that contains 0_F and 1_F.

    Attributes:
        ctx: The lattice the members belong to.
        members: Strictly increasing tuple of member codes.
    """

    __slots__ = ("ctx", "members")

    def __init__(
        self, ctx: LatticeContext, members: Iterable[int], validate: bool = True
    ) -> None:
        """
        Initialize a family.

        Args:
            ctx: Lattice context.
            members: Member codes, in any order.
            validate: Check the topology axioms. Defaults to True.

        Raises:
            OutOfRangeError: If a code is outside the lattice.
            InvalidArgsError: If validation is requested and fails.
        """
        self.ctx: LatticeContext = ctx
        self.members: Tuple[int, ...] = tuple(
            validate_codes(members, ctx) if validate else sorted(set(members))
        )
        if validate and not _is_closed(self.members, ctx):
            raise InvalidArgsError(
                f"family {list(self.members)} is not a fuzzy topology on {ctx!r}"
            )

    @property
    def k(self) -> int:
        """Number of open sets."""
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, code: object) -> bool:
        return code in self.members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TopologyFamily):
            return NotImplemented
        return self.ctx == other.ctx and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.ctx, self.members))

    def __repr__(self) -> str:
        return f"TopologyFamily({self.ctx!r}, {list(self.members)})"

    def grade_vectors(self) -> List[GradeVector]:
        """Members as grade vectors, in code order."""
        return [self.ctx.decode(code) for code in self.members]


class EnumBudget:
    """
    Limits on brute-force enumeration.

    Attributes:
        max_candidates: Cap on the number of candidate families examined,
            measured as C(m^n - 2, k - 2) for one k or 2^(m^n - 2) for a census.
        max_lattice_size: Cap on m^n.
        workers: Worker processes used for partitioned searches.
    """

    __slots__ = ("max_candidates", "max_lattice_size", "workers")

    def __init__(
        self,
        max_candidates: int = DEFAULT_MAX_CANDIDATES,
        max_lattice_size: int = DEFAULT_MAX_LATTICE_SIZE,
        workers: int = DEFAULT_WORKERS,
    ) -> None:
        for name, value in (
            ("max_candidates", max_candidates),
            ("max_lattice_size", max_lattice_size),
            ("workers", workers),
        ):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidArgsError(f"{name} must be a positive integer, got {value!r}")

        self.max_candidates: int = max_candidates
        self.max_lattice_size: int = max_lattice_size
        self.workers: int = workers

    def __repr__(self) -> str:
        return (
            f"EnumBudget(max_candidates={self.max_candidates}, "
            f"max_lattice_size={self.max_lattice_size}, workers={self.workers})"
        )

    def check_lattice(self, ctx: LatticeContext) -> None:
        """
        Raises:
            BudgetExceededError: If m^n exceeds the lattice cap.
        """
        if ctx.size > self.max_lattice_size:
            raise BudgetExceededError(
                f"lattice size {ctx.size} exceeds cap {self.max_lattice_size}",
                ctx.size,
                self.max_lattice_size,
            )

    def check_candidates(self, candidates: int) -> None:
        """
        Raises:
            BudgetExceededError: If the candidate count exceeds the cap.
        """
        if candidates > self.max_candidates:
            raise BudgetExceededError(
                f"{candidates} candidate families exceed cap {self.max_candidates}",
                candidates,
                self.max_candidates,
            )


class EnumStatistics:
    """
    Collects statistics about an enumeration run.
    """

    __slots__ = (
        "start_time",
        "nodes",
        "pruned",
        "families",
        "partitions",
        "processing_time",
    )

    def __init__(self) -> None:
        self.start_time: float = time.time()
        self.nodes: int = 0
        self.pruned: int = 0
        self.families: int = 0
        self.partitions: int = 0
        self.processing_time: float = 0

    def merge(self, report: Dict[str, Any]) -> None:
        """
        Add the counters of a partition report.

        Args:
            report: Dictionary produced by get_report on a worker.
        """
        self.nodes += report["nodes"]
        self.pruned += report["pruned"]
        self.families += report["families"]
        self.partitions += 1

    def finish(self) -> None:
        self.processing_time = time.time() - self.start_time

    def get_report(self) -> Dict[str, Any]:
        """
        Get a complete statistics report.

        Returns:
            Dictionary with all statistics.
        """
        return {
            "nodes": self.nodes,
            "pruned": self.pruned,
            "families": self.families,
            "partitions": self.partitions,
            "processing_time": self.processing_time,
            "nodes_per_second": self.nodes / max(0.001, self.processing_time),
        }


# Sink receiving each enumerated family
FamilySink = Callable[[TopologyFamily], None]


def _is_closed(members: Sequence[int], ctx: LatticeContext) -> bool:
    present = set(members)
    if 0 not in present or ctx.top not in present:
        return False
    for a, b in itertools.combinations(members, 2):
        if ctx.meet(a, b) not in present or ctx.join(a, b) not in present:
            return False
    return True


def is_topology(members: Iterable[int], ctx: LatticeContext) -> bool:
    """
    Check the fuzzy topology axioms for a family of codes.

    Args:
        members: Codes of the family.
        ctx: Lattice context.

    Returns:
        True iff 0_F and 1_F are present and the family is closed under
        pairwise meet and join.

    Raises:
        OutOfRangeError: If a code is outside the lattice.
    """
    return _is_closed(validate_codes(members, ctx), ctx)


def closure(seed: Iterable[int], ctx: LatticeContext) -> TopologyFamily:
    """
    Smallest fuzzy topology containing the seed codes.

    Args:
        seed: Generating codes, possibly empty.
        ctx: Lattice context.

    Returns:
        The closed family.

    Raises:
        OutOfRangeError: If a code is outside the lattice.
    """
    family: Set[int] = set(validate_codes(seed, ctx)) | {0, ctx.top}

    while True:
        added: Set[int] = set()
        for a, b in itertools.combinations(sorted(family), 2):
            for product in (ctx.meet(a, b), ctx.join(a, b)):
                if product not in family:
                    added.add(product)
        if not added:
            break
        family |= added

    return TopologyFamily(ctx, family, validate=False)


def _check_k(ctx: LatticeContext, k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int):
        raise InvalidKError(f"k must be an integer, got {k!r}")
    if not 2 <= k <= ctx.size:
        raise InvalidKError(
            f"k={k} outside [2, {ctx.size}] for n={ctx.n}, m={ctx.m}",
            hint="a fuzzy topology has between 2 and m^n open sets",
        )


class TopologyEnumerator:
    """
    Depth-first enumerator of fuzzy topologies on one lattice.

    Proper members are chosen in increasing code order. Codes increase along
    the pointwise order, so the meet of a new member with an earlier one is
    never larger than the new member and must already be present, while the
    join is never smaller and becomes a pending requirement. A branch dies
    when a meet is missing, when a pending requirement is skipped, or when
    the requirements outnumber the open sets still available.
    """

    __slots__ = ("ctx", "budget", "statistics")

    def __init__(self, ctx: LatticeContext, budget: Optional[EnumBudget] = None) -> None:
        """
        Initialize the enumerator.

        Args:
            ctx: Lattice context.
            budget: Enumeration limits. Defaults to EnumBudget().

        Raises:
            BudgetExceededError: If m^n exceeds the lattice cap.
        """
        self.ctx: LatticeContext = ctx
        self.budget: EnumBudget = budget or EnumBudget()
        self.statistics: EnumStatistics = EnumStatistics()
        self.budget.check_lattice(ctx)

    def _children(
        self,
        members: Tuple[int, ...],
        required: FrozenSet[int],
        remaining: Optional[int],
    ) -> List[Tuple[Tuple[int, ...], FrozenSet[int]]]:
        ctx = self.ctx
        top = ctx.top
        start = members[-1] + 1 if members else 1
        stop = top - 1
        if required:
            stop = min(stop, min(required))
        if remaining is not None:
            stop = min(stop, top - remaining)

        present = set(members)
        children = []
        for candidate in range(start, stop + 1):
            pending = set(required)
            pending.discard(candidate)
            viable = True
            for member in members:
                low = ctx.meet(member, candidate)
                if low != 0 and low not in present:
                    viable = False
                    break
                high = ctx.join(member, candidate)
                if high != top and high != candidate:
                    pending.add(high)
            if viable and remaining is not None and len(pending) > remaining - 1:
                viable = False
            if not viable:
                self.statistics.pruned += 1
                continue
            children.append((members + (candidate,), frozenset(pending)))
        return children

    def search(
        self,
        k: Optional[int],
        on_family: Callable[[Tuple[int, ...]], None],
        first: Optional[int] = None,
    ) -> None:
        """
        Walk the search tree and report every closed family of proper members.

        Args:
            k: Number of open sets, or None to report families of every size.
            on_family: Called with the proper members of each topology,
                in lexicographic order.
            first: Restrict the walk to families whose smallest proper member
                is this code. None walks the whole tree, including the family
                with no proper members.
        """
        proper = None if k is None else k - 2
        if first is None:
            root: List[Tuple[Tuple[int, ...], FrozenSet[int]]] = [((), frozenset())]
        else:
            root = [((first,), frozenset())]

        stack = list(reversed(root))
        while stack:
            members, required = stack.pop()
            self.statistics.nodes += 1

            if not required and (proper is None or len(members) == proper):
                self.statistics.families += 1
                on_family(members)
            if proper is not None and len(members) >= proper:
                continue

            remaining = None if proper is None else proper - len(members)
            stack.extend(reversed(self._children(members, required, remaining)))

    def family(self, proper_members: Sequence[int]) -> TopologyFamily:
        """Wrap proper members found by search as a TopologyFamily."""
        return TopologyFamily(
            self.ctx, (0,) + tuple(proper_members) + (self.ctx.top,), validate=False
        )


def _run_partition(
    n: int, m: int, k: Optional[int], first: int, collect: bool
) -> Tuple[Dict[int, int], List[Tuple[int, ...]], Dict[str, Any]]:
    ctx = LatticeContext(n, m)
    enumerator = TopologyEnumerator(ctx, EnumBudget(max_lattice_size=ctx.size))
    sizes: Dict[int, int] = {}
    found: List[Tuple[int, ...]] = []

    def record(members: Tuple[int, ...]) -> None:
        size = len(members) + 2
        sizes[size] = sizes.get(size, 0) + 1
        if collect:
            found.append(members)

    enumerator.search(k, record, first=first)
    return sizes, found, enumerator.statistics.get_report()


def _partitioned_search(
    ctx: LatticeContext,
    k: Optional[int],
    budget: EnumBudget,
    emit: Optional[FamilySink],
    statistics: Optional[EnumStatistics],
) -> Dict[int, int]:
    enumerator = TopologyEnumerator(ctx, budget)
    stats = statistics if statistics is not None else enumerator.statistics
    sizes: Dict[int, int] = {}

    def record(members: Tuple[int, ...]) -> None:
        size = len(members) + 2
        sizes[size] = sizes.get(size, 0) + 1
        if emit is not None:
            emit(enumerator.family(members))

    # the family without proper members: {0_F, 1_F}
    if k is None or k == 2:
        record(())
        stats.families += 1

    if k == 2:
        stats.finish()
        return sizes

    last_first = ctx.top - 1 if k is None else ctx.top - (k - 2)
    firsts = list(range(1, last_first + 1))

    if budget.workers <= 1 or len(firsts) <= 1:
        for first in firsts:
            partition = TopologyEnumerator(ctx, budget)
            partition.search(k, record, first=first)
            stats.merge(partition.statistics.get_report())
    else:
        logger.debug(
            "enumerating %r across %d workers (%d partitions)",
            ctx,
            budget.workers,
            len(firsts),
        )
        with concurrent.futures.ProcessPoolExecutor(max_workers=budget.workers) as pool:
            results = pool.map(
                _run_partition,
                itertools.repeat(ctx.n),
                itertools.repeat(ctx.m),
                itertools.repeat(k),
                firsts,
                itertools.repeat(emit is not None),
            )
            # map yields in submission order, so merged output stays lexicographic
            for partition_sizes, found, report in results:
                for size, count in partition_sizes.items():
                    sizes[size] = sizes.get(size, 0) + count
                if emit is not None:
                    for members in found:
                        emit(enumerator.family(members))
                stats.merge(report)

    stats.finish()
    return sizes


def enumerate_topologies(
    ctx: LatticeContext,
    k: int,
    budget: Optional[EnumBudget] = None,
    emit: Optional[FamilySink] = None,
    statistics: Optional[EnumStatistics] = None,
) -> int:
    """
    Count the fuzzy topologies with exactly k open sets.

    Args:
        ctx: Lattice context.
        k: Number of open sets, in [2, m^n].
        budget: Enumeration limits. Defaults to EnumBudget().
        emit: Optional sink receiving every family once, in lexicographic
            order of member codes.
        statistics: Optional collector for search statistics.

    Returns:
        The exact number of k-element fuzzy topologies.

    Raises:
        InvalidKError: If k is outside [2, m^n].
        BudgetExceededError: If the instance is too large for brute force.
    """
    budget = budget or EnumBudget()
    _check_k(ctx, k)
    budget.check_lattice(ctx)
    budget.check_candidates(math.comb(ctx.size - 2, k - 2))

    sizes = _partitioned_search(ctx, k, budget, emit, statistics)
    count = sizes.get(k, 0)
    logger.info("tau(n=%d, m=%d, k=%d) = %d by enumeration", ctx.n, ctx.m, k, count)
    return count


def enumerate_all_sizes(
    ctx: LatticeContext,
    budget: Optional[EnumBudget] = None,
    statistics: Optional[EnumStatistics] = None,
) -> Dict[int, int]:
    """
    Count the fuzzy topologies of every size in a single search.

    Args:
        ctx: Lattice context.
        budget: Enumeration limits; the candidate measure is 2^(m^n - 2).
        statistics: Optional collector for search statistics.

    Returns:
        Mapping from k in [2, m^n] to the number of k-element topologies,
        zero counts included.

    Raises:
        BudgetExceededError: If the census is too large for brute force.
    """
    budget = budget or EnumBudget()
    budget.check_lattice(ctx)
    budget.check_candidates(2 ** (ctx.size - 2))

    sizes = _partitioned_search(ctx, None, budget, None, statistics)
    census = {k: sizes.get(k, 0) for k in range(2, ctx.size + 1)}
    logger.info(
        "census n=%d, m=%d: %d topologies in total", ctx.n, ctx.m, sum(census.values())
    )
    return census


OPERATION_TABLE_LIMIT = 256

LatticeOp = Callable[[int, int], int]


def _operation_tables(ctx: LatticeContext) -> Tuple[LatticeOp, LatticeOp]:
    """Meet and join, tabulated for lattices of at most OPERATION_TABLE_LIMIT codes."""
    if ctx.size > OPERATION_TABLE_LIMIT:
        return ctx.meet, ctx.join
    codes = list(ctx.codes())
    meets = [[ctx.meet(a, b) for b in codes] for a in codes]
    joins = [[ctx.join(a, b) for b in codes] for a in codes]
    return (lambda a, b: meets[a][b]), (lambda a, b: joins[a][b])


def _proper_members_closed(
    proper: Tuple[int, ...], meet: LatticeOp, join: LatticeOp, top: int
) -> bool:
    # pairs with the bottom or top are closed once both are present
    present = set(proper)
    present.add(0)
    present.add(top)
    for i, a in enumerate(proper):
        for b in proper[i + 1 :]:
            if meet(a, b) not in present or join(a, b) not in present:
                return False
    return True


def naive_count_topologies(
    ctx: LatticeContext,
    k: int,
    budget: Optional[EnumBudget] = None,
    emit: Optional[FamilySink] = None,
) -> int:
    """
    Count k-element fuzzy topologies by testing every (k-2)-subset of the
    proper codes against the topology axioms.

    Raises:
        InvalidKError: If k is outside [2, m^n].
        BudgetExceededError: If C(m^n - 2, k - 2) exceeds the budget.
    """
    budget = budget or EnumBudget()
    _check_k(ctx, k)
    budget.check_lattice(ctx)
    budget.check_candidates(math.comb(ctx.size - 2, k - 2))

    meets, joins = _operation_tables(ctx)
    count = 0
    for proper in itertools.combinations(ctx.proper_codes(), k - 2):
        if _proper_members_closed(proper, meets, joins, ctx.top):
            count += 1
            if emit is not None:
                emit(TopologyFamily(ctx, (0,) + proper + (ctx.top,), validate=False))
    return count


def naive_all_sizes(
    ctx: LatticeContext, budget: Optional[EnumBudget] = None
) -> Dict[int, int]:
    """
    Census of all sizes using the naive oracle for each k.

    Raises:
        BudgetExceededError: If 2^(m^n - 2) exceeds the budget.
    """
    budget = budget or EnumBudget()
    budget.check_lattice(ctx)
    budget.check_candidates(2 ** (ctx.size - 2))
    return {
        k: naive_count_topologies(ctx, k, budget) for k in range(2, ctx.size + 1)
    }
