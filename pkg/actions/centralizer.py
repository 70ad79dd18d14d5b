"""
Membership in the centralizer C(u) = {w : P(uw) = P(wu)}.

``in_centralizer`` is the universal oracle. The other tests are the fast
characterizations for particular families of u; each one exists as a predicate on
a tableau and as a word-level test applied to P(w).
"""
import inspect
import logging
from functools import partial

from actions.rsk import insert_word, lwi, lwi_ending_at, p_tableau
from actions.sharding import WordBlock, blocks, run_sharded
from actions.tableau import Ssyt, Word, columns, row_count_filter, words
from utils.config import get_budget
from utils.error import BudgetExceeded, InvalidArgument


def in_centralizer(u: Word, w: Word) -> bool:
    u, w = tuple(u), tuple(w)
    if not u or not w:
        return True
    # P(wu) continues inserting u into P(w); P(uw) continues inserting w into P(u)
    wu = insert_word([list(row) for row in p_tableau(w).rows], u)
    uw = insert_word([list(row) for row in p_tableau(u).rows], w)
    return wu == uw


# Tableau predicates

def satisfies_single_letter_rows(tableau: Ssyt, u: int) -> bool:
    rows = tableau.rows
    if not rows:
        return True
    if rows[0][-1] > u:
        return False
    for i, row in enumerate(rows):
        below = rows[i + 1] if i + 1 < len(rows) else ()
        if row_count_filter(row, u, True) != row_count_filter(below, u, False):
            return False
    return True


def every_column_contains(tableau: Ssyt, u: int) -> bool:
    return all(u in column for column in columns(tableau))


def _long_columns_hold_one_and_two(cols) -> bool:
    return all(column[0] == 1 and column[1] == 2 for column in cols if len(column) > 1)


def satisfies_c12_columns(tableau: Ssyt) -> bool:
    cols = columns(tableau)
    singletons = {column for column in cols if len(column) == 1}
    if singletons and singletons != {(1,), (2,)}:
        return False
    return _long_columns_hold_one_and_two(cols)


def satisfies_c212_columns(tableau: Ssyt) -> bool:
    cols = columns(tableau)
    if any(column != (2,) for column in cols if len(column) == 1):
        return False
    return _long_columns_hold_one_and_two(cols)


def rows_bounded(tableau: Ssyt, m: int, k: int = None) -> bool:
    """max R_i <= m for the first ``k`` rows (default ``m``) that exist."""
    k = m if k is None else k
    return all(row[-1] <= m for row in tableau.rows[:k])


# Word-level tests

def test_single_letter_rows(u: int, w: Word) -> bool:
    return satisfies_single_letter_rows(p_tableau(tuple(w)), u)


def test_single_letter_cols(u: int, w: Word) -> bool:
    return every_column_contains(p_tableau(tuple(w)), u)


def test_c1_lwi(w: Word) -> bool:
    w = tuple(w)
    return lwi(w) == lwi_ending_at(w, 1)


def test_c12(w: Word) -> bool:
    return satisfies_c12_columns(p_tableau(tuple(w)))


def test_c212(w: Word) -> bool:
    return satisfies_c212_columns(p_tableau(tuple(w)))


def test_staircase(m: int, w: Word) -> bool:
    return rows_bounded(p_tableau(tuple(w)), m, m)


def test_power(a: int, k: int, w: Word) -> bool:
    # C(a^k) = C(a)
    if k < 1:
        raise InvalidArgument(f"Power must be at least 1, got {k}")
    return test_single_letter_cols(a, w)


def is_yamanouchi(w: Word) -> bool:
    counts = {}
    for letter in reversed(tuple(w)):
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


def yamanouchi_words(n: int) -> list[Word]:
    """Binary Yamanouchi words of length n, lexicographic."""
    return [w for w in words(2, n) if is_yamanouchi(w)]


def staircase_insertion_rows(tableau: Ssyt, m: int) -> Ssyt:
    """
    P(row_word(T) m (m-1) ... 1) read off directly: row i gains one i for i <= m.

    Only valid when the first m rows of T are bounded by m.
    """
    if not rows_bounded(tableau, m, m):
        raise InvalidArgument(f"Rows 1..{m} must have entries at most {m}")
    height = max(m, len(tableau.rows))
    rows = []
    for i in range(1, height + 1):
        row = tableau.rows[i - 1] if i <= len(tableau.rows) else ()
        if i <= m:
            row = tuple(sorted(row + (i,)))
        rows.append(row)
    return Ssyt(tuple(rows))


# Enumeration

def _block_members(u: Word, m: int, block: WordBlock) -> list[Word]:
    return [w for w in block.words(m) if in_centralizer(u, w)]


def centralizer_words(u: Word, n: int, m: int, workers: int = 1) -> list[Word]:
    """Every w in [m]^n with P(uw) = P(wu), lexicographic."""
    u = tuple(u)
    if n < 0 or m < 1:
        raise InvalidArgument(f"Need n >= 0 and m >= 1, got n={n}, m={m}")
    budget = get_budget()
    if m ** n > budget:
        raise BudgetExceeded(f"{m}^{n} words exceed the budget of {budget}")
    logging.info(f"START || {inspect.currentframe().f_code.co_name} || u={u} n={n} m={m}")
    task = partial(_block_members, u, m)
    members = []
    for chunk in run_sharded(task, blocks(m, n, workers), workers):
        members.extend(chunk)
    return members
