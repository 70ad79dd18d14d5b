"""
Schensted row insertion, the insertion tableau P(w), the (P, Q) pair and its
inverse, and longest weakly increasing subsequence statistics.
"""
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from actions.tableau import Ssyt, Word
from utils.error import QNotStandard, ShapeMismatch


@dataclass(frozen=True)
class BumpTrace:
    # (row, column, displaced value or None), 1-based, one step per visited row
    path: tuple[tuple[int, int, Optional[int]], ...]

    def displaced(self) -> tuple[int, ...]:
        return tuple(value for _, _, value in self.path if value is not None)


def _insert(rows: list[list[int]], a: int, path: Optional[list] = None) -> int:
    """Inserts in place and returns the 0-based index of the row that grew."""
    value = a
    for i, row in enumerate(rows):
        j = bisect_right(row, value)
        if j == len(row):
            row.append(value)
            if path is not None:
                path.append((i + 1, j + 1, None))
            return i
        row[j], value = value, row[j]
        if path is not None:
            path.append((i + 1, j + 1, value))
    rows.append([value])
    if path is not None:
        path.append((len(rows), 1, None))
    return len(rows) - 1


def insert_word(rows: list[list[int]], letters) -> list[list[int]]:
    for a in letters:
        _insert(rows, a)
    return rows


def _freeze(rows) -> Ssyt:
    return Ssyt(tuple(tuple(row) for row in rows))


def row_insert(tableau: Ssyt, a: int) -> tuple[Ssyt, BumpTrace]:
    rows = [list(row) for row in tableau.rows]
    path = []
    _insert(rows, a, path)
    return _freeze(rows), BumpTrace(tuple(path))


@lru_cache(maxsize=1 << 16)
def p_tableau(word: Word) -> Ssyt:
    return _freeze(insert_word([], word))


def rsk_pair(word: Word) -> tuple[Ssyt, Ssyt]:
    rows: list[list[int]] = []
    recording: list[list[int]] = []
    for step, a in enumerate(word, start=1):
        i = _insert(rows, a)
        if i == len(recording):
            recording.append([])
        recording[i].append(step)
    return _freeze(rows), _freeze(recording)


def _check_standard(q: Ssyt):
    n = q.size
    entries = sorted(x for row in q.rows for x in row)
    if entries != list(range(1, n + 1)):
        raise QNotStandard(f"Q must contain 1..{n} exactly once")
    for i, row in enumerate(q.rows):
        for j, value in enumerate(row):
            if j and value <= row[j - 1]:
                raise QNotStandard(f"Row {i + 1} of Q is not strictly increasing")
            if i and value <= q.rows[i - 1][j]:
                raise QNotStandard(f"Column {j + 1} of Q is not strictly increasing")


def inverse_rsk(p: Ssyt, q: Ssyt) -> Word:
    if p.shape != q.shape:
        raise ShapeMismatch(f"P has shape {p.shape} but Q has shape {q.shape}")
    _check_standard(q)
    rows = [list(row) for row in p.rows]
    where = {value: i for i, row in enumerate(q.rows) for value in row}
    letters = []
    for step in range(q.size, 0, -1):
        i = where[step]
        value = rows[i].pop()
        if not rows[i]:
            rows.pop()
        # Reverse bump: rightmost entry strictly smaller than the value coming up
        for k in range(i - 1, -1, -1):
            row = rows[k]
            j = bisect_left(row, value) - 1
            row[j], value = value, row[j]
        letters.append(value)
    return tuple(reversed(letters))


def lwi(word: Word) -> int:
    return len(_first_row_columns(word)[0])


def lwi_ending_at(word: Word, a: int) -> int:
    """Longest weakly increasing subsequence whose last letter is ``a`` (0 if absent)."""
    _, ending = _first_row_columns(word)
    return max((length for letter, length in ending if letter == a), default=0)


def _first_row_columns(word: Word):
    # Column of insertion into the first row = longest weakly increasing subsequence ending there
    row: list[int] = []
    ending = []
    for x in word:
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
        else:
            row[j] = x
        ending.append((x, j + 1))
    return row, ending
