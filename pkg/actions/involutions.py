"""
Bender-Knuth involutions, the m-reverse complement of words, m-evacuation and
the mixed map tau_m on tableaux.
"""
from actions.rsk import p_tableau
from actions.tableau import SkewTableau, Ssyt, Word, _trim, row_word, validate_ssyt
from utils.error import InvalidArgument, MaxEntryExceedsM, ShapeMismatch


def bender_knuth(tableau: Ssyt, u: int) -> Ssyt:
    """
    Swaps the roles of u and u+1. A u with a u+1 below it (and that u+1) is fixed;
    in each row the free u's and free (u+1)'s trade multiplicities.
    """
    rows = tableau.rows
    result = []
    for i, row in enumerate(rows):
        below = rows[i + 1] if i + 1 < len(rows) else ()
        above = rows[i - 1] if i else ()
        free = [
            j for j, value in enumerate(row)
            if (value == u and not (j < len(below) and below[j] == u + 1))
            or (value == u + 1 and not (j < len(above) and above[j] == u))
        ]
        if not free:
            result.append(row)
            continue
        lows = sum(1 for j in free if row[j] == u)
        highs = len(free) - lows
        new_row = list(row)
        # Free cells are contiguous: the tail of the u block and the head of the u+1 block
        for offset, j in enumerate(free):
            new_row[j] = u if offset < highs else u + 1
        result.append(tuple(new_row))
    return Ssyt(tuple(result))


def rc_m(w: Word, m: int) -> Word:
    """Letters <= m are replaced by the reversed complement m - x + 1 of their subword."""
    if m < 1:
        raise InvalidArgument(f"m must be positive, got {m}")
    w = tuple(w)
    positions = [k for k, letter in enumerate(w) if letter <= m]
    complement = [m - w[k] + 1 for k in reversed(positions)]
    result = list(w)
    for k, letter in zip(positions, complement):
        result[k] = letter
    return tuple(result)


def evacuation_m(tableau: Ssyt, m: int) -> Ssyt:
    if tableau.max_entry() > m:
        raise MaxEntryExceedsM(f"Tableau has entry {tableau.max_entry()} > m={m}")
    return p_tableau(rc_m(row_word(tableau), m))


def split_at(tableau: Ssyt, m: int) -> tuple[Ssyt, SkewTableau]:
    """(entries <= m as a straight tableau, entries > m on the complementary skew shape)."""
    low = tuple(row for row in (tuple(x for x in row if x <= m) for row in tableau.rows) if row)
    high = tuple(tuple(None if x <= m else x for x in row) for row in tableau.rows)
    inner = _trim(len(row) for row in low)
    return Ssyt(low), SkewTableau(tableau.shape, inner, high)


def tau_m(tableau: Ssyt, m: int) -> Ssyt:
    low, high = split_at(tableau, m)
    evacuated = evacuation_m(low, m)
    if evacuated.shape != low.shape:
        raise ShapeMismatch(f"m-evacuation changed the shape {low.shape} to {evacuated.shape}")
    rows = []
    for i, row in enumerate(high.rows):
        head = evacuated.rows[i] if i < len(evacuated.rows) else ()
        rows.append(head + tuple(x for x in row if x is not None))
    return validate_ssyt(rows)
