"""
Knuth transpositions and Knuth equivalence.

    x a c b y  <->  x c a b y   when a <= b < c
    x b a c y  <->  x b c a y   when a < b <= c
"""
import inspect
import logging
from collections import deque
from typing import Optional

from actions.rsk import p_tableau
from actions.tableau import Word
from utils.config import KNUTH_CLASS_BOUND
from utils.error import BoundExceeded


def _window_moves(x: int, y: int, z: int):
    # acb -> cab
    if x <= z < y:
        yield (y, x, z)
    # cab -> acb
    if y <= z < x:
        yield (y, x, z)
    # bac -> bca
    if y < x <= z:
        yield (x, z, y)
    # bca -> bac
    if z < x <= y:
        yield (x, z, y)


def knuth_neighbors(w: Word) -> set[Word]:
    w = tuple(w)
    neighbors = set()
    for k in range(len(w) - 2):
        for window in _window_moves(*w[k:k + 3]):
            neighbors.add(w[:k] + window + w[k + 3:])
    return neighbors


def knuth_equivalent(v: Word, w: Word) -> bool:
    return p_tableau(tuple(v)) == p_tableau(tuple(w))


def knuth_class(w: Word, bound: Optional[int] = None) -> set[Word]:
    """Breadth-first closure of ``w`` under single Knuth transpositions."""
    bound = KNUTH_CLASS_BOUND if bound is None else bound
    w = tuple(w)
    if len(w) > bound:
        raise BoundExceeded(f"Word length {len(w)} exceeds the Knuth class bound {bound}")
    logging.info(f"START || {inspect.currentframe().f_code.co_name} || {w}")
    seen = {w}
    queue = deque([w])
    while queue:
        for neighbor in knuth_neighbors(queue.popleft()):
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append(neighbor)
    return seen
