"""
Exact counts c_{n,m}(u) = #{w in C(u) : |w| = n, max w <= m}.

Two paths: brute force over [m]^n, and a sum over shapes
    c_{n,m}(u) = sum_{lambda |- n} g_m^lambda f^lambda
where g_m^lambda counts admissible tableaux of shape lambda. The top r rows are
enumerated directly; the rows below only need entries greater than r and are counted
as P-partitions of the shape poset (order polynomial from the descent polynomial of
its linear extensions).
"""
import inspect
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Optional

import sympy

from actions.centralizer import (
    centralizer_words,
    every_column_contains,
    rows_bounded,
    satisfies_c12_columns,
)
from actions.tableau import Partition, Ssyt, Word, conjugate, generate_ssyt, partitions, validate_partition
from utils.config import CROSS_CHECK_BOUND, POSET_BOUND, get_budget
from utils.error import (
    BoundExceeded,
    InvalidArgument,
    NotAPoset,
    UnsupportedFamily,
    ValidationFailed,
)


# Binomial coefficients on integer arguments

def binom_int(n: int, k: int) -> int:
    """C(n, k) for integer n and k >= 0; negative n uses C(n, k) = (-1)^k C(k - n - 1, k)."""
    if k < 0:
        raise InvalidArgument("k must be non-negative")
    if k == 0:
        return 1
    if n < 0:
        return (-1) ** k * binom_int(k - n - 1, k)
    if k > n:
        return 0
    result = 1
    for i in range(1, k + 1):
        result = result * (n - i + 1) // i
    return result


def binom_row(t: int, d: int) -> list[int]:
    row = [1]
    for k in range(1, d + 1):
        row.append(row[-1] * (t - k + 1) // k)
    return row


def eval_binom_poly(coefficients, t: int) -> int:
    coefficients = list(coefficients)
    if not coefficients:
        return 0
    return sum(c * b for c, b in zip(coefficients, binom_row(t, len(coefficients) - 1)))


@dataclass(frozen=True)
class BinomialPoly:
    """sum a_k C(m, k)"""
    coefficients: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, m: int) -> int:
        return eval_binom_poly(self.coefficients, m)

    def to_sympy(self, symbol: str = "m") -> sympy.Poly:
        m = sympy.Symbol(symbol)
        expr = sum(
            (a * sympy.expand_func(sympy.binomial(m, k)) for k, a in enumerate(self.coefficients)),
            sympy.Integer(0),
        )
        return sympy.Poly(sympy.expand(expr), m)

    def leading_monomial_coefficient(self) -> sympy.Rational:
        return sympy.Rational(self.to_sympy().LC())

    def __str__(self):
        terms = []
        for k, a in enumerate(self.coefficients):
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            magnitude = abs(a)
            if k == 0:
                body = str(magnitude)
            elif magnitude == 1:
                body = f"C(m,{k})"
            else:
                body = f"{magnitude}*C(m,{k})"
            terms.append((sign, body))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class DescentPoly:
    """c_j = number of linear extensions with j descents."""
    coefficients: tuple[int, ...] = ()

    @property
    def extensions(self) -> int:
        return sum(self.coefficients)

    def to_sympy(self, symbol: str = "x") -> sympy.Poly:
        x = sympy.Symbol(symbol)
        return sympy.Poly(sum((c * x ** j for j, c in enumerate(self.coefficients)), sympy.Integer(0)), x)


@dataclass(frozen=True)
class LabeledPoset:
    """
    Strict order on labels 1..size given by covering pairs ``(lower, upper)``,
    meaning lower ⊴ upper.
    """
    size: int
    covers: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "covers", frozenset(tuple(pair) for pair in self.covers))
        for lower, upper in self.covers:
            if not (1 <= lower <= self.size and 1 <= upper <= self.size):
                raise NotAPoset(f"Cover {(lower, upper)} uses a label outside 1..{self.size}")
            if lower == upper:
                raise NotAPoset(f"Cover {(lower, upper)} is reflexive")
        # Kahn: every label must be removable
        remaining = {label: 0 for label in range(1, self.size + 1)}
        for _, upper in self.covers:
            remaining[upper] += 1
        ready = [label for label, count in remaining.items() if count == 0]
        seen = 0
        while ready:
            label = ready.pop()
            seen += 1
            for lower, upper in self.covers:
                if lower == label:
                    remaining[upper] -= 1
                    if remaining[upper] == 0:
                        ready.append(upper)
        if seen != self.size:
            raise NotAPoset("Covering relation has a cycle")

    @classmethod
    def chain(cls, size: int) -> "LabeledPoset":
        return cls(size, frozenset((i, i + 1) for i in range(1, size)))

    @classmethod
    def antichain(cls, size: int) -> "LabeledPoset":
        return cls(size, frozenset())

    def lower_covers(self) -> dict[int, set[int]]:
        below = {label: set() for label in range(1, self.size + 1)}
        for lower, upper in self.covers:
            below[upper].add(lower)
        return below


def f_lambda(partition: Partition) -> int:
    """Number of standard tableaux of the shape (hook length formula)."""
    partition = validate_partition(partition)
    transpose = conjugate(partition)
    hooks = (
        (length - j) + (transpose[j] - i) - 1
        for i, length in enumerate(partition)
        for j in range(length)
    )
    return factorial(sum(partition)) // prod(hooks)


def shape_poset(partition: Partition) -> LabeledPoset:
    """
    Cells ordered by (i, j) ⊴ (i', j') iff i >= i' and j >= j'. Labels go row by row,
    each row numbered right to left.
    """
    partition = validate_partition(partition)
    offsets = [0]
    for length in partition:
        offsets.append(offsets[-1] + length)

    def label(i, j):
        return offsets[i - 1] + partition[i - 1] - j + 1

    covers = set()
    for i, length in enumerate(partition, start=1):
        for j in range(1, length + 1):
            if i > 1:
                covers.add((label(i, j), label(i - 1, j)))
            if j > 1:
                covers.add((label(i, j), label(i, j - 1)))
    return LabeledPoset(sum(partition), frozenset(covers))


def linear_extensions(poset: LabeledPoset, bound: Optional[int] = None) -> list[tuple[int, ...]]:
    """Orderings where i ⊴ j puts i to the left of j, in lexicographic order."""
    bound = POSET_BOUND if bound is None else bound
    if poset.size > bound:
        raise BoundExceeded(f"Poset of size {poset.size} exceeds the bound {bound}")
    below = poset.lower_covers()
    placed = set()
    current = []
    extensions = []

    def extend():
        if len(current) == poset.size:
            extensions.append(tuple(current))
            return
        for label in range(1, poset.size + 1):
            if label not in placed and below[label] <= placed:
                placed.add(label)
                current.append(label)
                extend()
                current.pop()
                placed.remove(label)

    extend()
    return extensions


def descents(permutation) -> int:
    return sum(1 for a, b in zip(permutation, permutation[1:]) if a > b)


def descent_poly(poset: LabeledPoset, bound: Optional[int] = None) -> DescentPoly:
    counts = {}
    for extension in linear_extensions(poset, bound):
        d = descents(extension)
        counts[d] = counts.get(d, 0) + 1
    top = max(counts, default=-1)
    return DescentPoly(tuple(counts.get(j, 0) for j in range(top + 1)))


def _order_poly_from_descents(descent: DescentPoly, n: int, m: int) -> int:
    if m < 0:
        return 0 if n else 1
    return sum(c * binom_int(m + n - j, n) for j, c in enumerate(descent.coefficients))


def order_poly_count(poset: LabeledPoset, m: int, bound: Optional[int] = None) -> int:
    """Number of P-partitions into {0, ..., m}: sum over extensions of C(m + n - des, n)."""
    return _order_poly_from_descents(descent_poly(poset, bound), poset.size, m)


def count_p_partitions_direct(poset: LabeledPoset, m: int) -> int:
    """
    Maps f into {0, ..., m} with i ⊴ j => f(i) >= f(j), strictly when the label i > j.
    Exhaustive; only for small posets.
    """
    if m < 0:
        return 0 if poset.size else 1
    covers = list(poset.covers)
    total = 0
    for values in product(range(m + 1), repeat=poset.size):
        if all(
            values[lower - 1] > values[upper - 1] if lower > upper else values[lower - 1] >= values[upper - 1]
            for lower, upper in covers
        ):
            total += 1
    return total


def count_centralizer(u: Word, n: int, m: int, workers: int = 1) -> int:
    return len(centralizer_words(u, n, m, workers))


# Families with a tableau characterization and polynomial counts

FAMILY_KINDS = ("single", "word12", "staircase")


@dataclass(frozen=True)
class Family:
    kind: str
    param: int = 1

    @property
    def r(self) -> int:
        """Number of constrained top rows."""
        if self.kind == "single":
            return 1
        if self.kind == "word12":
            return 2
        return self.param

    def word(self) -> Word:
        if self.kind == "single":
            return (self.param,)
        if self.kind == "word12":
            return (1, 2)
        return tuple(range(self.param, 0, -1))

    def admits(self, tableau: Ssyt) -> bool:
        if self.kind == "single":
            return every_column_contains(tableau, self.param)
        if self.kind == "word12":
            return satisfies_c12_columns(tableau)
        return rows_bounded(tableau, self.param, self.param)

    def __str__(self):
        if self.kind == "word12":
            return "word12"
        return f"{self.kind}({self.param})"


def single(a: int) -> Family:
    if a < 1:
        raise InvalidArgument(f"Letter must be positive, got {a}")
    return Family("single", a)


def staircase(k: int) -> Family:
    if k < 1:
        raise InvalidArgument(f"Staircase size must be positive, got {k}")
    return Family("staircase", k)


def word12() -> Family:
    return Family("word12", 2)


def family_of(u: Word) -> Family:
    """a^k -> single(a), 12 -> word12, k(k-1)...1 -> staircase(k)."""
    u = tuple(u)
    if not u:
        raise UnsupportedFamily("The empty word commutes with everything; there is no family to count")
    if len(set(u)) == 1:
        return single(u[0])
    if u == (1, 2):
        return word12()
    if u == tuple(range(len(u), 0, -1)):
        return staircase(len(u))
    raise UnsupportedFamily(f"No polynomial characterization is known for u={u}")


@lru_cache(maxsize=None)
def _top_count(family: Family, partition: Partition) -> int:
    # Admissible fillings of the top r rows with entries <= r; the rows further down
    # are padded with row i = all i so the family predicate sees the full shape
    r = family.r
    return sum(
        1 for top in generate_ssyt(partition[:r], r) if _padded_admits(family, top, partition)
    )


@lru_cache(maxsize=None)
def _shape_descents(partition: Partition) -> DescentPoly:
    return descent_poly(shape_poset(partition))


def g_lambda(family: Family, partition: Partition, m: int) -> int:
    r = family.r
    top = _top_count(family, partition)
    if not top:
        return 0
    rest = partition[r:]
    return top * _order_poly_from_descents(_shape_descents(rest), sum(rest), m - r - 1)


def count_by_shapes(family: Family, n: int, m: int) -> int:
    """sum over lambda |- n of g_m^lambda f^lambda."""
    if family.kind not in FAMILY_KINDS:
        raise UnsupportedFamily(f"Unknown family {family}")
    if n < 0:
        raise InvalidArgument(f"Length must be non-negative, got {n}")
    if family.kind == "single":
        # c_{n,m}(a) = c_{n,m}(1) when a <= m, and delta_{n,0} otherwise
        if family.param > m:
            return 1 if n == 0 else 0
        family = single(1)
    elif m < family.r:
        raise InvalidArgument(f"{family} needs m >= {family.r}, got m={m}")
    return sum(g_lambda(family, partition, m) * f_lambda(partition) for partition in partitions(n))


def _padded_admits(family: Family, top: Ssyt, partition: Partition) -> bool:
    rows = list(top.rows)
    for i in range(len(rows) + 1, len(partition) + 1):
        rows.append((i,) * partition[i - 1])
    return family.admits(Ssyt(tuple(rows)))


def _counter(u: Word, method: str):
    if method == "shapes":
        family = family_of(u)
        return lambda n, m: count_by_shapes(family, n, m)
    if method == "brute":
        return lambda n, m: count_centralizer(u, n, m)
    raise InvalidArgument(f"Unknown counting method '{method}'")


def expand_binomial(u: Word, n: int, method: str = "shapes") -> BinomialPoly:
    """
    Coefficients a_k with c_{n,m}(u) = sum a_k C(m, k) for all m >= n.

    Samples the count at d + 1 consecutive m (d = n - r) starting at max(n, family
    parameter), moves the Newton forward differences back to m = 0, and checks one
    extra sample. The shape sums are polynomial in m by construction, so with
    method="shapes" that check only guards the interpolation; the first sample is
    also re-counted by brute force while m^n stays within CROSS_CHECK_BOUND.
    """
    u = tuple(u)
    family = family_of(u)
    r = family.r
    if n < r:
        raise InvalidArgument(f"Need n >= {r} for u={u}, got n={n}")
    logging.info(f"START || {inspect.currentframe().f_code.co_name} || u={u} n={n} method={method}")
    count = _counter(u, method)
    d = n - r
    start = max(n, family.param)
    samples = [count(n, start + j) for j in range(d + 1)]
    if method == "shapes" and start ** n <= min(CROSS_CHECK_BOUND, get_budget()):
        brute = count_centralizer(u, n, start)
        if brute != samples[0]:
            raise ValidationFailed(
                f"c_{{{n},{start}}}({u}): shape sum gives {samples[0]}, brute force gives {brute}"
            )

    differences = []
    row = samples
    for _ in range(d + 1):
        differences.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]

    # p(t) = sum_k differences[k] C(t - start, k), evaluated at t = 0..d
    at_zero = [sum(delta * binom_int(t - start, k) for k, delta in enumerate(differences)) for t in range(d + 1)]
    coefficients = []
    row = at_zero
    for _ in range(d + 1):
        coefficients.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    while len(coefficients) > 1 and coefficients[-1] == 0:
        coefficients.pop()

    check = start + d + 1
    expected = count(n, check)
    if eval_binom_poly(coefficients, check) != expected:
        raise ValidationFailed(
            f"c_{{{n},m}}({u}) is not a polynomial of degree {d}: got {expected} at m={check}, "
            f"interpolation gives {eval_binom_poly(coefficients, check)}"
        )
    return BinomialPoly(tuple(coefficients))
