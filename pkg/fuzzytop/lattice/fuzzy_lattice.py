"""
Fuzzy lattice module for the fuzzy topology census.

This module represents the fuzzy subsets of an n-point set with grades in an
m-element chain as mixed-radix integer codes (digit i has weight m^i) and
provides the pointwise lattice operations the topology axioms use.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from fuzzytop.utils.error import InvalidArgsError, OutOfRangeError

# Grade ranks of a fuzzy subset, one entry per point of X
GradeVector = Tuple[int, ...]

# Codes above this size are decoded on the fly instead of through a table
DIGIT_TABLE_LIMIT = 1 << 16


def _require_int(name: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidArgsError(f"{name} must be an integer, got {value!r}")
    return value


class LatticeContext:
    """
    The lattice M^X of all fuzzy subsets for a fixed (n, m).

    Attributes:
        n: Number of points of the ground set X.
        m: Number of grades in the chain M.
        size: Number of fuzzy subsets, m^n.
        top: Code of 1_F, m^n - 1. The code of 0_F is 0.
    """

    __slots__ = ("n", "m", "size", "top", "_powers", "_digit_table")

    def __init__(self, n: int, m: int) -> None:
        """
        Initialize a lattice context.

        Args:
            n: Number of points, at least 1.
            m: Number of grades, at least 2.

        Raises:
            InvalidArgsError: If n or m is not an integer or out of range.
        """
        n = _require_int("n", n)
        m = _require_int("m", m)
        if n < 1:
            raise InvalidArgsError(f"n must be >= 1, got {n}")
        if m < 2:
            raise InvalidArgsError(f"m must be >= 2, got {m}")

        self.n: int = n
        self.m: int = m
        self.size: int = m**n
        self.top: int = self.size - 1
        self._powers: Tuple[int, ...] = tuple(m**i for i in range(n))
        self._digit_table: Optional[List[GradeVector]] = None

    @property
    def bottom(self) -> int:
        """Code of 0_F."""
        return 0

    def __repr__(self) -> str:
        return f"LatticeContext(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeContext):
            return NotImplemented
        return self.n == other.n and self.m == other.m

    def __hash__(self) -> int:
        return hash((self.n, self.m))

    def __getstate__(self) -> Tuple[int, int]:
        return (self.n, self.m)

    def __setstate__(self, state: Tuple[int, int]) -> None:
        self.__init__(*state)  # type: ignore[misc]

    def codes(self) -> range:
        """All codes of the lattice in increasing order."""
        return range(self.size)

    def proper_codes(self) -> range:
        """Codes strictly between 0_F and 1_F."""
        return range(1, self.top)

    def validate_code(self, code: int) -> int:
        """
        Check that a code belongs to this lattice.

        Args:
            code: Code to check.

        Returns:
            The code unchanged.

        Raises:
            OutOfRangeError: If the code is not an integer in [0, m^n).
        """
        if isinstance(code, bool) or not isinstance(code, int):
            raise OutOfRangeError(f"code must be an integer, got {code!r}")
        if not 0 <= code < self.size:
            raise OutOfRangeError(
                f"code {code} outside [0, {self.size}) for n={self.n}, m={self.m}"
            )
        return code

    def encode(self, grades: Sequence[int]) -> int:
        """
        Encode a grade vector as its mixed-radix code.

        Args:
            grades: Length-n sequence of grade ranks in [0, m-1].

        Returns:
            The code sum(grades[i] * m^i).

        Raises:
            OutOfRangeError: On a wrong length or a grade outside the chain.
        """
        if len(grades) != self.n:
            raise OutOfRangeError(
                f"grade vector has length {len(grades)}, expected {self.n}"
            )
        code = 0
        for grade, weight in zip(grades, self._powers):
            if isinstance(grade, bool) or not isinstance(grade, int):
                raise OutOfRangeError(f"grade must be an integer, got {grade!r}")
            if not 0 <= grade < self.m:
                raise OutOfRangeError(f"grade {grade} outside [0, {self.m - 1}]")
            code += grade * weight
        return code

    def decode(self, code: int) -> GradeVector:
        """
        Decode a code into its grade vector.

        Args:
            code: Code in [0, m^n).

        Returns:
            Tuple of n grade ranks, point 0 first.

        Raises:
            OutOfRangeError: If the code is outside the lattice.
        """
        self.validate_code(code)
        table = self._table()
        if table is not None:
            return table[code]
        return self._digits(code)

    def _digits(self, code: int) -> GradeVector:
        digits: List[int] = []
        for _ in range(self.n):
            code, digit = divmod(code, self.m)
            digits.append(digit)
        return tuple(digits)

    def _table(self) -> Optional[List[GradeVector]]:
        if self._digit_table is None and self.size <= DIGIT_TABLE_LIMIT:
            self._digit_table = [self._digits(code) for code in range(self.size)]
        return self._digit_table

    def meet(self, a: int, b: int) -> int:
        """Pointwise minimum (fuzzy intersection) of two codes."""
        da, db = self.decode(a), self.decode(b)
        return sum(min(x, y) * w for x, y, w in zip(da, db, self._powers))

    def join(self, a: int, b: int) -> int:
        """Pointwise maximum (fuzzy union) of two codes."""
        da, db = self.decode(a), self.decode(b)
        return sum(max(x, y) * w for x, y, w in zip(da, db, self._powers))

    def leq(self, a: int, b: int) -> bool:
        """True iff every grade of a is at most the matching grade of b."""
        da, db = self.decode(a), self.decode(b)
        return all(x <= y for x, y in zip(da, db))

    def strictly_less(self, a: int, b: int) -> bool:
        """True iff a <= b and a differs from b in at least one point."""
        return a != b and self.leq(a, b)

    def complement(self, code: int) -> int:
        """Order-reversing involution t -> (m-1) - t applied to every grade."""
        return self.top - self.validate_code(code)

    def permute(self, code: int, perm: Sequence[int]) -> int:
        """
        Relabel the points of X.

        Args:
            code: Code to relabel.
            perm: Permutation of range(n); point i moves to position perm[i].

        Returns:
            Code of the relabeled fuzzy subset.

        Raises:
            InvalidArgsError: If perm is not a permutation of range(n).
        """
        if sorted(perm) != list(range(self.n)):
            raise InvalidArgsError(f"{list(perm)} is not a permutation of range({self.n})")
        grades = self.decode(code)
        moved = [0] * self.n
        for i, target in enumerate(perm):
            moved[target] = grades[i]
        return self.encode(moved)

    def rational_grades(self, grades: Sequence[int]) -> Tuple[Fraction, ...]:
        """Map grade ranks to the evenly spaced values i/(m-1) in [0, 1]."""
        return tuple(Fraction(g, self.m - 1) for g in grades)


def encode(grades: Sequence[int], ctx: LatticeContext) -> int:
    """Encode a grade vector for ctx."""
    return ctx.encode(grades)


def decode(code: int, ctx: LatticeContext) -> GradeVector:
    """Decode a code of ctx."""
    return ctx.decode(code)


def meet(a: int, b: int, ctx: LatticeContext) -> int:
    """Pointwise minimum of two codes of ctx."""
    return ctx.meet(a, b)


def join(a: int, b: int, ctx: LatticeContext) -> int:
    """Pointwise maximum of two codes of ctx."""
    return ctx.join(a, b)


def leq(a: int, b: int, ctx: LatticeContext) -> bool:
    """Pointwise order of two codes of ctx."""
    return ctx.leq(a, b)


def complement(code: int, ctx: LatticeContext) -> int:
    """Complement of a code of ctx."""
    return ctx.complement(code)


def validate_codes(codes: Iterable[int], ctx: LatticeContext) -> List[int]:
    """
    Validate a collection of codes and return them sorted without duplicates.

    Raises:
        OutOfRangeError: If any code is outside the lattice.
    """
    return sorted({ctx.validate_code(code) for code in codes})
