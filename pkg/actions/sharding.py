"""
Lexicographic word blocks and the worker pool used by the exhaustive sweeps.

A block is every word of a given length that starts with a fixed prefix. Blocks are
produced in lexicographic order and results are always merged in that order, so the
output does not depend on how many workers ran.
"""
import inspect
import logging
from dataclasses import dataclass
from itertools import product
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator

from actions.tableau import Word
from utils.error import InvalidArgument

# Words shorter than this are never split
MIN_SPLIT_LENGTH = 4


@dataclass(frozen=True)
class WordBlock:
    length: int
    prefix: Word = ()

    def size(self, m: int) -> int:
        return m ** (self.length - len(self.prefix))

    def words(self, m: int) -> Iterator[Word]:
        for suffix in product(range(1, m + 1), repeat=self.length - len(self.prefix)):
            yield self.prefix + suffix


def prefix_length(m: int, length: int, shards: int) -> int:
    """Shortest prefix giving at least ``shards`` blocks, never the whole word."""
    if shards <= 1 or length < MIN_SPLIT_LENGTH or m == 1:
        return 0
    k = 0
    while m ** k < shards and k < length - 1:
        k += 1
    return k


def blocks(m: int, length: int, shards: int = 1) -> list[WordBlock]:
    if m < 1 or length < 0:
        raise InvalidArgument(f"Invalid word range m={m}, length={length}")
    k = prefix_length(m, length, shards)
    return [WordBlock(length, prefix) for prefix in product(range(1, m + 1), repeat=k)]


def blocks_up_to(m: int, max_length: int, shards: int = 1) -> list[WordBlock]:
    """Blocks covering every word of length 0..max_length, shortest words first."""
    return [block for length in range(max_length + 1) for block in blocks(m, length, shards)]


def run_sharded(task: Callable, items: Iterable, workers: int = 1) -> Iterator:
    """
    Yields ``task(item)`` for each item, in input order.

    ``task`` must be picklable (a module-level function or a ``functools.partial`` of
    one) when ``workers > 1``. On KeyboardInterrupt the pool is terminated and the
    interrupt propagates after the results already yielded.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        for item in items:
            yield task(item)
        return

    logging.info(f"START || {inspect.currentframe().f_code.co_name} || {len(items)} blocks on {workers} workers")
    pool = Pool(min(workers, len(items)))
    try:
        for result in pool.imap(task, items):
            yield result
        pool.close()
    except BaseException:
        pool.terminate()
        raise
    finally:
        pool.join()
