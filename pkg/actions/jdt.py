"""
Jeu-de-taquin on skew tableaux.

A slide moves the hole into the smaller of its south/east neighbours; on a tie the
south entry moves up so columns stay strict.
"""
from typing import Optional

from actions.rsk import p_tableau
from actions.tableau import Cell, SkewTableau, Ssyt, Word, _trim
from utils.error import InvalidArgument, NotAnInnerCorner

CORNER_POLICIES = ("column", "row")


def southwest_concat(a: Ssyt, b: Ssyt) -> SkewTableau:
    """``a`` below and to the left of ``b``; rectifying gives P(row_word(a) + row_word(b))."""
    width = len(a.rows[0]) if a.rows else 0
    rows = [(None,) * width + row for row in b.rows] + [row for row in a.rows]
    outer = tuple(len(row) for row in rows)
    inner = _trim((width,) * len(b.rows))
    return SkewTableau(outer, inner, tuple(rows))


def _inner_of(grid) -> tuple[int, ...]:
    inner = []
    for row in grid:
        blanks = 0
        while blanks < len(row) and row[blanks] is None:
            blanks += 1
        inner.append(blanks)
    return _trim(inner)


def _to_skew(grid) -> SkewTableau:
    return SkewTableau(
        tuple(len(row) for row in grid),
        _inner_of(grid),
        tuple(tuple(row) for row in grid),
    )


def _slide(grid: list[list], i: int, j: int, moves: Optional[list]):
    # i, j are 0-based; the hole travels south/east until it reaches an outer corner
    while True:
        row = grid[i]
        east = row[j + 1] if j + 1 < len(row) else None
        south = grid[i + 1][j] if i + 1 < len(grid) and j < len(grid[i + 1]) else None
        if south is not None and (east is None or south <= east):
            row[j], grid[i + 1][j] = south, None
            if moves is not None:
                moves.append((south, (i + 2, j + 1), (i + 1, j + 1)))
            i += 1
        elif east is not None:
            row[j], row[j + 1] = east, None
            if moves is not None:
                moves.append((east, (i + 1, j + 2), (i + 1, j + 1)))
            j += 1
        else:
            break
    grid[i].pop()
    if not grid[i]:
        grid.pop(i)


def _is_blank(grid, i, j):
    return i < len(grid) and j < len(grid[i]) and grid[i][j] is None


def _is_filled(grid, i, j):
    return i < len(grid) and j < len(grid[i]) and grid[i][j] is not None


def jdt_slide(skew: SkewTableau, hole: Cell, moves: Optional[list] = None) -> SkewTableau:
    """
    Slides the blank cell ``hole`` (1-based) out of the tableau.

    ``moves``, when given, receives one ``(value, from_cell, to_cell)`` entry per swap.
    """
    grid = [list(row) for row in skew.rows]
    i, j = hole[0] - 1, hole[1] - 1
    if i < 0 or j < 0 or not _is_blank(grid, i, j):
        raise NotAnInnerCorner(f"{hole} is not a blank cell")
    if _is_blank(grid, i, j + 1) or _is_blank(grid, i + 1, j):
        raise NotAnInnerCorner(f"{hole} has a blank cell to its south or east")
    if not (_is_filled(grid, i, j + 1) or _is_filled(grid, i + 1, j)):
        raise NotAnInnerCorner(f"{hole} has no filled neighbour")
    _slide(grid, i, j, moves)
    return _to_skew(grid)


def inner_corners(skew: SkewTableau) -> list[Cell]:
    inner = skew.inner
    return [
        (i + 1, blanks)
        for i, blanks in enumerate(inner)
        if blanks and (i + 1 == len(inner) or inner[i + 1] < blanks)
    ]


def rectify(skew: SkewTableau, policy: str = "column", moves: Optional[list] = None) -> Ssyt:
    """
    Slides every blank cell out.

    policy "column": rightmost column first, bottom to top inside a column.
    policy "row": lowest row first.
    """
    if policy not in CORNER_POLICIES:
        raise InvalidArgument(f"Unknown corner policy '{policy}'")
    grid = [list(row) for row in skew.rows]
    while True:
        inner = _inner_of(grid)
        corners = [
            (i, blanks - 1)
            for i, blanks in enumerate(inner)
            if blanks and (i + 1 == len(inner) or inner[i + 1] < blanks)
        ]
        if not corners:
            break
        if policy == "column":
            i, j = max(corners, key=lambda c: (c[1], c[0]))
        else:
            i, j = max(corners)
        _slide(grid, i, j, moves)
    return Ssyt(tuple(tuple(row) for row in grid if row))


def p_via_jdt(u: Word, w: Word) -> Ssyt:
    return rectify(southwest_concat(p_tableau(u), p_tableau(w)))
