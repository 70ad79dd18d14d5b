"""
Value types of the plactic toolkit: words, partitions, semistandard tableaux,
skew tableaux and weak compositions.

All public coordinates are 1-based (row, column), top row first.
"""
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cache
from itertools import accumulate, product, zip_longest
from typing import Iterator, Optional

from utils.error import (
    BadShape,
    ColumnNotStrictlyIncreasing,
    InvalidArgument,
    RowNotWeaklyIncreasing,
)

Word = tuple[int, ...]
Partition = tuple[int, ...]
WeakComposition = tuple[int, ...]
Cell = tuple[int, int]


@dataclass(frozen=True)
class Ssyt:
    rows: tuple[tuple[int, ...], ...] = ()

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def max_entry(self) -> int:
        return max((row[-1] for row in self.rows), default=0)

    def __str__(self):
        return "\n".join("[" + ",".join(str(x) for x in row) + "]" for row in self.rows)


@dataclass(frozen=True)
class SkewTableau:
    """
    Filling of outer/inner. ``rows[i]`` has length ``outer[i]`` and holds ``None``
    on the ``inner[i]`` blank cells at its start.
    """
    outer: Partition
    inner: Partition
    rows: tuple[tuple[Optional[int], ...], ...]

    @property
    def filling(self) -> dict[Cell, int]:
        return {
            (i + 1, j + 1): value
            for i, row in enumerate(self.rows)
            for j, value in enumerate(row)
            if value is not None
        }

    def is_straight(self) -> bool:
        return not any(self.inner)

    def to_ssyt(self) -> Ssyt:
        if not self.is_straight():
            raise InvalidArgument("Skew tableau still has blank cells")
        return Ssyt(tuple(tuple(row) for row in self.rows if row))


def _trim(parts) -> tuple[int, ...]:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def validate_partition(parts) -> Partition:
    parts = tuple(parts)
    for i, part in enumerate(parts):
        if part < 1:
            raise BadShape("Partition parts must be positive", (i + 1, 1))
        if i and part > parts[i - 1]:
            raise BadShape("Partition must be weakly decreasing", (i + 1, parts[i - 1] + 1))
    return parts


def validate_ssyt(rows) -> Ssyt:
    rows = tuple(tuple(row) for row in rows)
    for i, row in enumerate(rows):
        if not row:
            raise BadShape("Empty row", (i + 1, 1))
        if i and len(row) > len(rows[i - 1]):
            raise BadShape("Row longer than the row above", (i + 1, len(rows[i - 1]) + 1))
        for j, value in enumerate(row):
            if not isinstance(value, int) or value < 1:
                raise InvalidArgument(f"Entries must be positive integers, got {value!r} at {(i + 1, j + 1)}")
            if j and value < row[j - 1]:
                raise RowNotWeaklyIncreasing("Row decreases", (i + 1, j + 1))
            if i and value <= rows[i - 1][j]:
                raise ColumnNotStrictlyIncreasing("Column does not strictly increase", (i + 1, j + 1))
    return Ssyt(rows)


def validate_skew(outer, inner, filling: dict) -> SkewTableau:
    """Builds a skew tableau from 1-based cell -> value pairs."""
    outer = validate_partition(outer)
    inner = validate_partition(_trim(inner))
    if len(inner) > len(outer) or any(a > b for a, b in zip(inner, outer)):
        raise BadShape("Inner shape does not fit inside the outer shape", (len(inner), inner[-1]))
    padded = inner + (0,) * (len(outer) - len(inner))
    rows = []
    for i, (length, blank) in enumerate(zip(outer, padded)):
        row = [None] * length
        for j in range(blank, length):
            if (i + 1, j + 1) not in filling:
                raise BadShape("Missing entry", (i + 1, j + 1))
            row[j] = filling[(i + 1, j + 1)]
        rows.append(tuple(row))
    for (i, j) in filling:
        if i > len(outer) or j > outer[i - 1] or j <= padded[i - 1]:
            raise BadShape("Entry outside outer/inner", (i, j))
    skew = SkewTableau(outer, inner, tuple(rows))
    _check_skew_order(skew)
    return skew


def _check_skew_order(skew: SkewTableau):
    for (i, j), value in skew.filling.items():
        left = skew.rows[i - 1][j - 2] if j > 1 else None
        if left is not None and value < left:
            raise RowNotWeaklyIncreasing("Row decreases", (i, j))
        if i > 1 and j <= len(skew.rows[i - 2]):
            above = skew.rows[i - 2][j - 1]
            if above is not None and value <= above:
                raise ColumnNotStrictlyIncreasing("Column does not strictly increase", (i, j))


def shape(tableau: Ssyt) -> Partition:
    return tableau.shape


def row_word(tableau: Ssyt) -> Word:
    # Bottom row first, each row read left to right
    return tuple(x for row in reversed(tableau.rows) for x in row)


def columns(tableau: Ssyt) -> list[tuple[int, ...]]:
    if not tableau.rows:
        return []
    return [
        tuple(row[j] for row in tableau.rows if len(row) > j)
        for j in range(len(tableau.rows[0]))
    ]


def alpha(tableau: Ssyt, b: int) -> WeakComposition:
    """Multiplicity of ``b`` in each row; trailing zeros dropped."""
    return _trim(row_count_filter(row, b, False) - row_count_filter(row, b, True) for row in tableau.rows)


def dominates(a: WeakComposition, b: WeakComposition) -> bool:
    """True iff a ⪯ b in dominance order (every prefix sum of a is at most b's)."""
    pairs = zip_longest(accumulate(a), accumulate(b))
    last_a = last_b = 0
    for sum_a, sum_b in pairs:
        last_a = last_a if sum_a is None else sum_a
        last_b = last_b if sum_b is None else sum_b
        if last_a > last_b:
            return False
    return True


def composition_equal(a: WeakComposition, b: WeakComposition) -> bool:
    return _trim(a) == _trim(b)


def row_count_filter(row, u: int, strict: bool) -> int:
    # #R(<u) when strict, #R(<=u) otherwise; row is weakly increasing
    return bisect_left(row, u) if strict else bisect_right(row, u)


def conjugate(partition: Partition) -> Partition:
    if not partition:
        return ()
    return tuple(sum(1 for part in partition if part > j) for j in range(partition[0]))


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, largest first part first."""
    def build(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in build(remaining - first, first):
                yield (first,) + rest

    return tuple(build(n, n))


def words(m: int, n: int) -> Iterator[Word]:
    """All words of length n over [m], in lexicographic order."""
    return product(range(1, m + 1), repeat=n)


def generate_ssyt(partition: Partition, max_entry: int) -> Iterator[Ssyt]:
    cells = [(i, j) for i, length in enumerate(partition) for j in range(length)]
    grid = [[0] * length for length in partition]

    def fill(k):
        if k == len(cells):
            yield Ssyt(tuple(tuple(row) for row in grid))
            return
        i, j = cells[k]
        low = 1
        if j:
            low = grid[i][j - 1]
        if i:
            low = max(low, grid[i - 1][j] + 1)
        for value in range(low, max_entry + 1):
            grid[i][j] = value
            yield from fill(k + 1)
        grid[i][j] = 0

    yield from fill(0)


def generate_syt(partition: Partition) -> Iterator[Ssyt]:
    """Standard tableaux: the largest entry always sits in an outer corner."""
    n = sum(partition)
    if n == 0:
        yield Ssyt()
        return
    for i, length in enumerate(partition):
        below = partition[i + 1] if i + 1 < len(partition) else 0
        if length > below:
            smaller = _trim(partition[:i] + (length - 1,) + partition[i + 1:])
            for tableau in generate_syt(smaller):
                rows = [list(row) for row in tableau.rows]
                if i == len(rows):
                    rows.append([])
                rows[i].append(n)
                yield Ssyt(tuple(tuple(row) for row in rows))
