"""Small-scope instance enumeration and law checking.

Instances are produced by *builders*: plain functions that ask a chooser for
each component (a subset, a relation, a function...).  The same builder
drives both modes:

* exhaustive: every choice sequence is replayed in odometer order, so each
  instance appears exactly once and earlier choices vary slowest;
* sampled: each choice is drawn from a ``random.Random`` seeded from the
  configured seed and the law id, so results do not depend on run order or
  on how many worker processes share the suite.

Options inside every choice are listed in the canonical value order, and
subsets are listed by increasing size, which keeps the first counterexample
small.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Optional, Sequence

from .errors import BudgetExceeded, UnknownLaw
from .report import BUDGET, FAIL, PASS, LawReport
from .values import Fun, cartesian, sorted_values

DEFAULT_POOL = ("a", "b", "c", "d")
DEFAULT_CAP = 10**6
ESTIMATE_PROBES = 16


@dataclass(frozen=True)
class EnumConfig:
    max_carrier: int = 2
    atom_pool: tuple = DEFAULT_POOL
    mode: str = "exhaustive"
    samples: int = 100
    seed: int = 0
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not 0 <= self.max_carrier <= len(self.atom_pool):
            raise ValueError(
                f"max_carrier must be between 0 and {len(self.atom_pool)} (pool size)"
            )
        if len(set(self.atom_pool)) != len(self.atom_pool):
            raise ValueError("atom_pool has duplicates")
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.cap < 1:
            raise ValueError("cap must be positive")

    def carrier(self, n: Optional[int] = None) -> frozenset:
        return frozenset(self.atom_pool[: self.max_carrier if n is None else n])

    def to_dict(self) -> dict:
        d = {
            "max_carrier": self.max_carrier,
            "atom_pool": list(self.atom_pool),
            "mode": self.mode,
            "cap": self.cap,
        }
        if self.mode == "sampled":
            d.update(samples=self.samples, seed=self.seed)
        return d


# -- choosers ----------------------------------------------------------------

class _DeadEnd(Exception):
    """A choice had no options; the partial instance has no completions."""


_ABSENT = object()


@lru_cache(maxsize=512)
def subsets_by_size(items: frozenset) -> tuple:
    xs = sorted_values(items)
    return tuple(
        frozenset(c) for r in range(len(xs) + 1) for c in combinations(xs, r)
    )


class Chooser:
    """Base class; subclasses implement ``_pick(n) -> index``."""

    def _pick(self, n: int) -> int:
        raise NotImplementedError

    def choice(self, options: Sequence):
        if not options:
            raise _DeadEnd()
        return options[self._pick(len(options))]

    def subset(self, items: frozenset) -> frozenset:
        return self.choice(subsets_by_size(frozenset(items)))

    def nonempty_subset(self, items: frozenset) -> frozenset:
        return self.choice(subsets_by_size(frozenset(items))[1:])

    def relation(self, X: frozenset, Y: frozenset) -> frozenset:
        return self.subset(cartesian(X, Y))

    def function(self, X: frozenset, Y: frozenset) -> Fun:
        ys = sorted_values(Y)
        return Fun((x, self.choice(ys)) for x in sorted_values(X))

    def partial_function(self, X: frozenset, Y: frozenset) -> Fun:
        opts = [_ABSENT] + sorted_values(Y)
        table = {}
        for x in sorted_values(X):
            y = self.choice(opts)
            if y is not _ABSENT:
                table[x] = y
        return Fun(table)

    def family(self, index: Sequence, member: Callable[["Chooser", object], object]) -> Fun:
        return Fun((i, member(self, i)) for i in index)


class _Replay(Chooser):
    def __init__(self, prefix):
        self.prefix = prefix
        self.trail = []

    def _pick(self, n):
        pos = len(self.trail)
        k = self.prefix[pos] if pos < len(self.prefix) else 0
        self.trail.append((k, n))
        return k


class RandomChooser(Chooser):
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.branching = 1

    def _pick(self, n):
        self.branching *= n
        return self.rng.randrange(n)


def exhaust(build: Callable[[Chooser], object]) -> Iterator:
    """Yield ``build(ch)`` for every choice sequence, each exactly once."""
    prefix: list = []
    while True:
        ch = _Replay(prefix)
        try:
            inst = build(ch)
        except _DeadEnd:
            inst = _DeadEnd
        if inst is not _DeadEnd:
            yield inst
        trail = ch.trail
        while trail and trail[-1][0] + 1 >= trail[-1][1]:
            trail.pop()
        if not trail:
            return
        k, _ = trail.pop()
        prefix = [t[0] for t in trail] + [k + 1]


def estimate_count(build: Callable[[Chooser], object], probes: int = ESTIMATE_PROBES) -> int:
    """Knuth's random-probe estimate of the number of instances.

    Exact whenever the branching at each depth does not depend on earlier
    choices, which holds for almost every builder in the catalog.
    """
    rng = random.Random("estimate")
    total = 0
    for _ in range(probes):
        ch = RandomChooser(rng)
        try:
            build(ch)
        except _DeadEnd:
            continue
        total += ch.branching
    return round(total / probes)


def sample(build: Callable[[Chooser], object], count: int, seed) -> Iterator:
    rng = random.Random(seed)
    produced = attempts = 0
    while produced < count and attempts < 20 * count:
        attempts += 1
        try:
            inst = build(RandomChooser(rng))
        except _DeadEnd:
            continue
        produced += 1
        yield inst


_KINDS = {
    "sets": lambda ch, p: ch.subset(p["X"]),
    "relations": lambda ch, p: ch.relation(p["X"], p["Y"]),
    "functions": lambda ch, p: ch.function(p["X"], p["Y"]),
    "partial_functions": lambda ch, p: ch.partial_function(p["X"], p["Y"]),
    "set_families": lambda ch, p: ch.family(
        sorted_values(p["I"]), lambda c, i: c.subset(p["X"])
    ),
    "fun_families": lambda ch, p: ch.family(
        sorted_values(p["I"]), lambda c, i: c.function(p["X"], p["Y"])
    ),
}


def enumerate_instances(kind: str, cfg: EnumConfig, **params) -> Iterator:
    """Stream instances of one kind.

    ``kind`` is one of ``sets(X)``, ``relations(X, Y)``, ``functions(X, Y)``,
    ``partial_functions(X, Y)``, ``set_families(I, X)``, ``fun_families(I, X, Y)``;
    carriers default to ``cfg.carrier()``.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown instance kind {kind!r}")
    A = cfg.carrier()
    p = {"X": A, "Y": A, "I": A, **params}
    build = lambda ch: _KINDS[kind](ch, p)  # noqa: E731
    if cfg.mode == "sampled":
        return sample(build, cfg.samples, f"{cfg.seed}:{kind}")
    est = estimate_count(build)
    if est > cfg.cap:
        raise BudgetExceeded(est, cfg.cap)
    return exhaust(build)


# -- laws ----------------------------------------------------------------------

@dataclass(frozen=True)
class Law:
    """A named quantified statement.

    ``build(ch, A)`` draws one instance (a dict of named values) over the
    carrier A; ``check(**instance)`` is the pure predicate.  Laws with
    ``expected == "fail"`` encode arguments that a plausible-looking claim is
    false; finding a counterexample is their success.
    """

    id: str
    anchor: str
    build: Callable = field(repr=False)
    check: Callable = field(repr=False)
    expected: str = PASS


def run_law(law: Law, cfg: EnumConfig = EnumConfig()) -> LawReport:
    A = cfg.carrier()
    build = lambda ch: law.build(ch, A)  # noqa: E731
    if cfg.mode == "sampled":
        stream = sample(build, cfg.samples, f"{cfg.seed}:{law.id}")
    else:
        est = estimate_count(build)
        if est > cfg.cap:
            return LawReport(law.id, 0, BUDGET, estimate=est, expected=law.expected)
        stream = exhaust(build)
    n = 0
    for inst in stream:
        n += 1
        if not law.check(**inst):
            return LawReport(law.id, n, FAIL, inst, expected=law.expected)
    return LawReport(law.id, n, PASS, expected=law.expected)


def get_law(law_id: str) -> Law:
    from .catalog import CATALOG

    try:
        return CATALOG[law_id]
    except KeyError:
        raise UnknownLaw(law_id) from None


def resolve_ids(ids) -> list:
    from .catalog import CATALOG

    if not ids or list(ids) == ["all"]:
        return list(CATALOG)
    for i in ids:
        get_law(i)
    return list(ids)


def _run_by_id(law_id: str, cfg: EnumConfig) -> LawReport:
    return run_law(get_law(law_id), cfg)


def run_suite(ids, cfg: EnumConfig = EnumConfig(), jobs: int = 1) -> list:
    """Run the named laws (or all of them) and return reports in request order."""
    ids = resolve_ids(ids)
    if jobs <= 1 or len(ids) <= 1:
        return [_run_by_id(i, cfg) for i in ids]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_by_id, ids, [cfg] * len(ids)))


def replay(law_id: str, counterexample: dict) -> bool:
    """Re-evaluate a law on a serialized counterexample (name -> value text)."""
    from .dsl.parser import parse_value

    law = get_law(law_id)
    return law.check(**{k: parse_value(v) for k, v in counterexample.items()})
