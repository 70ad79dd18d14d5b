"""
Conjecture sweeps over finite ranges of (u, w).

Every sweep enumerates u in lexicographic order (shortest first), splits the w range
into lexicographic blocks and merges block results in order, so a report does not
depend on the shard or worker count. A KeyboardInterrupt ends the sweep with verdict
"incomplete" and whatever was merged so far.
"""
import inspect
import json
import logging
import time
from dataclasses import dataclass, field
from functools import partial
from math import ceil
from typing import Optional

from actions.centralizer import in_centralizer, rows_bounded
from actions.enumeration import expand_binomial
from actions.involutions import rc_m, tau_m
from actions.rsk import p_tableau
from actions.sharding import WordBlock, blocks_up_to, run_sharded
from actions.tableau import Ssyt, Word, row_word, words
from utils.config import get_budget
from utils.error import BudgetExceeded, InvalidArgument

CONJECTURES = ("maxri", "stability", "coeffs", "rc")

HOLDS = "holds"
COUNTEREXAMPLE = "counterexample"
INCOMPLETE = "incomplete"

# Execution-only settings; they never change a report
EXECUTION_FIELDS = ("shards", "workers")


@dataclass
class SweepConfig:
    conjecture: str
    u_alphabet: int = 3
    u_length: int = 3
    # When set, only u with |u| + max(u) <= u_sum
    u_sum: Optional[int] = None
    w_alphabet: int = 4
    w_length: int = 5
    k_bound: int = 3
    n_max: int = 8
    shards: int = 1
    workers: int = 1
    budget: Optional[int] = None

    def __post_init__(self):
        if self.conjecture not in CONJECTURES:
            raise InvalidArgument(f"Unknown conjecture '{self.conjecture}', expected one of {', '.join(CONJECTURES)}")
        for name in ("u_alphabet", "u_length", "w_alphabet", "w_length", "k_bound", "n_max", "shards", "workers"):
            if getattr(self, name) < 1:
                raise InvalidArgument(f"{name} must be at least 1, got {getattr(self, name)}")
        if self.u_sum is not None and self.u_sum < 2:
            raise InvalidArgument(f"u_sum must be at least 2, got {self.u_sum}")
        if self.budget is None:
            self.budget = get_budget()
        if self.budget <= 0:
            raise InvalidArgument(f"budget must be positive, got {self.budget}")

    def echo(self) -> dict:
        return {
            key: value
            for key, value in self.__dict__.items()
            if key not in EXECUTION_FIELDS
        }


@dataclass
class SweepReport:
    conjecture: str
    config: dict
    checked: int = 0
    verdict: str = HOLDS
    counterexamples: list = field(default_factory=list)
    elapsed_ms: int = 0
    summary: dict = field(default_factory=dict)

    def add_counterexample(self, u: Word, w: Word, detail: str):
        self.counterexamples.append({"u": list(u), "w": list(w), "detail": detail})
        if self.verdict == HOLDS:
            self.verdict = COUNTEREXAMPLE

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "conjecture": self.conjecture,
            "config": self.config,
            "checked": self.checked,
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
            "elapsed_ms": self.elapsed_ms if timing else 0,
            "summary": self.summary,
        }


def report_json(report: SweepReport, timing: bool = True) -> str:
    return json.dumps(report.to_dict(timing), sort_keys=True, indent=2)


def u_words(cfg: SweepConfig) -> list[Word]:
    result = []
    for length in range(1, cfg.u_length + 1):
        for u in words(cfg.u_alphabet, length):
            if cfg.u_sum is None or length + max(u) <= cfg.u_sum:
                result.append(u)
    return result


def w_range_size(alphabet: int, max_length: int) -> int:
    return sum(alphabet ** length for length in range(max_length + 1))


def _check_budget(planned: int, cfg: SweepConfig):
    if planned > cfg.budget:
        raise BudgetExceeded(f"Sweep would examine {planned} words, budget is {cfg.budget}")


def _finish(report: SweepReport, started: float) -> SweepReport:
    report.elapsed_ms = int((time.perf_counter() - started) * 1000)
    logging.info(f"{report.conjecture}: {report.verdict} after {report.checked} checks in {report.elapsed_ms} ms")
    return report


# maxRi: for w in C(u), rows 1..l of P(w) are bounded by max u, l = number of rows of P(u)

def _max_ri_block(m: int, item: tuple[Word, WordBlock]):
    u, block = item
    rows = len(p_tableau(u).rows)
    bound = max(u)
    checked = 0
    failures = []
    for w in block.words(m):
        checked += 1
        if in_centralizer(u, w) and not rows_bounded(p_tableau(w), bound, rows):
            tableau = p_tableau(w)
            i = next(i for i, row in enumerate(tableau.rows[:rows], start=1) if row[-1] > bound)
            failures.append((w, f"row {i} of P(w) has max {tableau.rows[i - 1][-1]} > max u = {bound}"))
    return checked, failures


def check_max_ri(cfg: SweepConfig) -> SweepReport:
    logging.info(f"START || {inspect.currentframe().f_code.co_name}")
    started = time.perf_counter()
    us = u_words(cfg)
    _check_budget(len(us) * w_range_size(cfg.w_alphabet, cfg.w_length), cfg)
    report = SweepReport("maxri", cfg.echo())
    items = [(u, block) for u in us for block in blocks_up_to(cfg.w_alphabet, cfg.w_length, cfg.shards)]
    try:
        results = run_sharded(partial(_max_ri_block, cfg.w_alphabet), items, cfg.workers)
        for (u, _), (checked, failures) in zip(items, results):
            report.checked += checked
            for w, detail in failures:
                report.add_counterexample(u, w, detail)
    except KeyboardInterrupt:
        report.verdict = INCOMPLETE
    report.summary = {"u_words": len(us)}
    return _finish(report, started)


# Stability: C(u^k) is contained in C(u^(k+1)) from some K on, and equal from some L on

def _stability_block(u: Word, k_bound: int, m: int, block: WordBlock):
    powers = [u * k for k in range(1, k_bound + 2)]
    checked = 0
    contained = [True] * k_bound
    equal = [True] * k_bound
    violations = [None] * k_bound
    for w in block.words(m):
        checked += 1
        members = [in_centralizer(power, w) for power in powers]
        for k in range(k_bound):
            if members[k] and not members[k + 1]:
                contained[k] = equal[k] = False
                if violations[k] is None:
                    violations[k] = w
            elif members[k + 1] and not members[k]:
                equal[k] = False
    return checked, contained, equal, violations


def _first_stable(flags: list[bool]) -> Optional[int]:
    # Smallest K with flags[k-1] true for every K <= k <= len(flags)
    stable = None
    for k in range(len(flags), 0, -1):
        if not flags[k - 1]:
            break
        stable = k
    return stable


def check_stability(u: Word, cfg: SweepConfig) -> SweepReport:
    u = tuple(u)
    if not u:
        raise InvalidArgument("u must be non-empty")
    logging.info(f"START || {inspect.currentframe().f_code.co_name} || u={u}")
    started = time.perf_counter()
    _check_budget((cfg.k_bound + 1) * w_range_size(cfg.w_alphabet, cfg.w_length), cfg)
    report = SweepReport("stability", cfg.echo())
    contained = [True] * cfg.k_bound
    equal = [True] * cfg.k_bound
    violations = [None] * cfg.k_bound
    try:
        task = partial(_stability_block, u, cfg.k_bound, cfg.w_alphabet)
        for checked, block_contained, block_equal, block_violations in run_sharded(
            task, blocks_up_to(cfg.w_alphabet, cfg.w_length, cfg.shards), cfg.workers
        ):
            report.checked += checked
            for k in range(cfg.k_bound):
                contained[k] = contained[k] and block_contained[k]
                equal[k] = equal[k] and block_equal[k]
                if violations[k] is None:
                    violations[k] = block_violations[k]
    except KeyboardInterrupt:
        report.verdict = INCOMPLETE

    first_contained = _first_stable(contained)
    first_equal = _first_stable(equal)
    report.summary = {
        "u": list(u),
        "K": first_contained,
        "L": first_equal,
        "violations": [
            {"k": k + 1, "w": list(w)} for k, w in enumerate(violations) if w is not None
        ],
    }
    if report.verdict != INCOMPLETE and first_contained is None:
        k = cfg.k_bound
        report.add_counterexample(
            u, violations[k - 1], f"w is in C(u^{k}) but not in C(u^{k + 1})"
        )
    return _finish(report, started)


# Coefficients of c_{n,m}(1) in the binomial basis

def coefficient_failures(n: int, a: tuple[int, ...]) -> list[str]:
    failures = []
    a = tuple(a) + (0,) * (n - len(a))
    if a[0] != 0 or a[1] != 1:
        failures.append(f"a_0={a[0]}, a_1={a[1]}; expected 0 and 1")
    if len(a) != n or any(a[k] < 1 for k in range(1, n)):
        failures.append(f"some a_k < 1 for k in 1..{n - 1}")
    for k in range(1, n - 1):
        if a[k] ** 2 < a[k - 1] * a[k + 1]:
            failures.append(f"not log-concave at k={k}: {a[k]}^2 < {a[k - 1]}*{a[k + 1]}")
    peak = ceil(n / 2)
    if peak >= len(a) or a[peak] != max(a):
        failures.append(f"maximum is not attained at k={peak}")
    interior = a[1:n]
    top = interior.index(max(interior))
    if any(x > y for x, y in zip(interior[:top], interior[1:top + 1])) or any(
        x < y for x, y in zip(interior[top:], interior[top + 1:])
    ):
        failures.append("a_1..a_{n-1} is not unimodal")
    return failures


def check_coefficients(n_max: int, cfg: Optional[SweepConfig] = None) -> SweepReport:
    """n runs over 2..n_max; at n = 1 the expansion is the constant 1."""
    cfg = cfg or SweepConfig("coeffs", n_max=n_max)
    logging.info(f"START || {inspect.currentframe().f_code.co_name} || n_max={n_max}")
    started = time.perf_counter()
    config = cfg.echo()
    config["n_max"] = n_max
    report = SweepReport("coeffs", config)
    lines = {}
    try:
        for n in range(2, n_max + 1):
            poly = expand_binomial((1,), n)
            lines[str(n)] = {"coefficients": list(poly.coefficients), "expansion": str(poly)}
            report.checked += 1
            for failure in coefficient_failures(n, poly.coefficients):
                report.add_counterexample((1,), (), f"n={n}: {failure}")
    except KeyboardInterrupt:
        report.verdict = INCOMPLETE
    report.summary = {"lines": lines}
    return _finish(report, started)


# RC: tau_m(P(C(u))) = P(C(RC_m(u)))

def _rc_block(u: Word, v: Word, m: int, block: WordBlock):
    checked = 0
    left, right = set(), set()
    for w in block.words(m):
        checked += 1
        if in_centralizer(u, w):
            left.add(p_tableau(w))
        if in_centralizer(v, w):
            right.add(p_tableau(w))
    return checked, left, right


def _tableau_key(tableau: Ssyt):
    return (tableau.size, tableau.rows)


def check_rc(u: Word, m: int, cfg: SweepConfig) -> SweepReport:
    """
    Compares tau_m of the P-tableaux of C(u) with the P-tableaux of C(RC_m(u)).

    The w alphabet is widened to at least m so tau_m maps the range onto itself.
    """
    u = tuple(u)
    if not u or max(u) > m:
        raise InvalidArgument(f"Need a non-empty u with max u <= m, got u={u}, m={m}")
    logging.info(f"START || {inspect.currentframe().f_code.co_name} || u={u} m={m}")
    started = time.perf_counter()
    alphabet = max(cfg.w_alphabet, m)
    _check_budget(2 * w_range_size(alphabet, cfg.w_length), cfg)
    v = rc_m(u, m)
    config = cfg.echo()
    config["m"] = m
    report = SweepReport("rc", config)
    left, right = set(), set()
    try:
        task = partial(_rc_block, u, v, alphabet)
        for checked, block_left, block_right in run_sharded(
            task, blocks_up_to(alphabet, cfg.w_length, cfg.shards), cfg.workers
        ):
            report.checked += checked
            left |= block_left
            right |= block_right
    except KeyboardInterrupt:
        report.verdict = INCOMPLETE

    image = {tau_m(tableau, m): tableau for tableau in left}
    missing_right = sorted((t for t in image if t not in right), key=_tableau_key)
    missing_left = sorted((t for t in right if t not in image), key=_tableau_key)
    for tableau in missing_right:
        report.add_counterexample(
            u, row_word(image[tableau]),
            f"tau_{m}(P(w)) = {list(map(list, tableau.rows))} is not in P(C({list(v)}))",
        )
    for tableau in missing_left:
        report.add_counterexample(
            v, row_word(tableau),
            f"P(w) for w in C({list(v)}) is not tau_{m} of any tableau in P(C({list(u)}))",
        )
    report.summary = {
        "rc_u": list(v),
        "tableaux": len(left),
        "rc_tableaux": len(right),
        "missing_from_rc_side": len(missing_right),
        "missing_from_tau_image": len(missing_left),
    }
    return _finish(report, started)


def run_conjecture(cfg: SweepConfig, u: Optional[Word] = None, m: Optional[int] = None) -> SweepReport:
    if cfg.conjecture == "maxri":
        return check_max_ri(cfg)
    if cfg.conjecture == "coeffs":
        return check_coefficients(cfg.n_max, cfg)
    if not u:
        raise InvalidArgument(f"Conjecture '{cfg.conjecture}' needs a word u")
    if cfg.conjecture == "stability":
        return check_stability(u, cfg)
    return check_rc(u, max(u) if m is None else m, cfg)
