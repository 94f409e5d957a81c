"""The closed value universe: atoms, ordered pairs, finite sets and functions.

Atoms are plain ``int`` or ``str`` objects (``bool`` is rejected).  Sets are
``frozenset``.  Pairs and functions are primitive types defined here; a pair
is never encoded as a set and a function is never a set of pairs, so
``(x, y) in f`` and ``{a, b} in (a, b)`` are simply not expressible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Union

from .errors import OutsideDomain

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

Atom = Union[int, str]
Value = Any  # Atom | Pair | frozenset | Fun
VSet = frozenset


@dataclass(frozen=True, slots=True)
class Pair:
    first: Any
    second: Any

    def __iter__(self):
        yield self.first
        yield self.second

    def __repr__(self):
        return f"Pair({self.first!r}, {self.second!r})"


class Fun:
    """A function: a finite domain with one value per domain element.

    Equality is domain plus pointwise values; there is no codomain.
    """

    __slots__ = ("_table", "_hash", "_domain")

    def __init__(self, table: Mapping | Iterable = ()):
        self._table = dict(table)
        self._hash = None
        self._domain = None

    @property
    def domain(self) -> frozenset:
        if self._domain is None:
            self._domain = frozenset(self._table)
        return self._domain

    @property
    def range(self) -> frozenset:
        return frozenset(self._table.values())

    def items(self):
        return self._table.items()

    def __call__(self, x):
        try:
            return self._table[x]
        except KeyError:
            raise OutsideDomain(x) from None

    def __len__(self):
        return len(self._table)

    def __eq__(self, other):
        if not isinstance(other, Fun):
            return NotImplemented
        return self._table == other._table

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._table.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(
            f"{k!r}: {v!r}" for k, v in sorted(self._table.items(), key=_item_key)
        )
        return f"Fun({{{body}}})"


def _item_key(item):
    return value_key(item[0])


def is_atom(v) -> bool:
    return (isinstance(v, int) and not isinstance(v, bool)) or isinstance(v, str)


def is_value(v) -> bool:
    """Deep check that ``v`` belongs to the value universe."""
    if is_atom(v):
        return True
    if isinstance(v, Pair):
        return is_value(v.first) and is_value(v.second)
    if isinstance(v, frozenset):
        return all(is_value(e) for e in v)
    if isinstance(v, Fun):
        return all(is_value(k) and is_value(x) for k, x in v.items())
    return False


def value_eq(a, b) -> bool:
    """Structural equality, computed by recursion on the value kinds.

    Independent of ``==`` on purpose: the test suite uses it as an oracle
    for the hashed equality that sets and dicts rely on.
    """
    if is_atom(a) or is_atom(b):
        return is_atom(a) and is_atom(b) and type(a) is type(b) and a == b
    if isinstance(a, Pair) or isinstance(b, Pair):
        return (
            isinstance(a, Pair)
            and isinstance(b, Pair)
            and value_eq(a.first, b.first)
            and value_eq(a.second, b.second)
        )
    if isinstance(a, frozenset) and isinstance(b, frozenset):
        return all(any(value_eq(x, y) for y in b) for x in a) and all(
            any(value_eq(x, y) for x in a) for y in b
        )
    if isinstance(a, Fun) and isinstance(b, Fun):
        if not value_eq(a.domain, b.domain):
            return False
        bt = list(b.items())
        for k, v in a.items():
            if not any(value_eq(k, k2) and value_eq(v, v2) for k2, v2 in bt):
                return False
        return True
    return False


def value_key(v):
    """Total order on values, used only to print and enumerate canonically.

    Atoms by kind (integers before symbols) then payload; pairs
    lexicographically; sets by their sorted elements; functions by their
    sorted graph.
    """
    if isinstance(v, bool):
        raise TypeError("bool is not an atom")
    if isinstance(v, int):
        return (0, 0, v)
    if isinstance(v, str):
        return (0, 1, v)
    if isinstance(v, Pair):
        return (1, value_key(v.first), value_key(v.second))
    if isinstance(v, frozenset):
        return (2, tuple(sorted(value_key(e) for e in v)))
    if isinstance(v, Fun):
        return (
            3,
            tuple(sorted((value_key(k), value_key(x)) for k, x in v.items())),
        )
    raise TypeError(f"not a value: {v!r}")


def sorted_values(vs: Iterable) -> list:
    return sorted(vs, key=value_key)


def format_value(v) -> str:
    """Canonical text of a value; parseable by the DSL value grammar."""
    if isinstance(v, bool):
        raise TypeError("bool is not an atom")
    if isinstance(v, (int, str)):
        return str(v)
    if isinstance(v, Pair):
        return f"({format_value(v.first)}, {format_value(v.second)})"
    if isinstance(v, frozenset):
        return "{" + ", ".join(format_value(e) for e in sorted_values(v)) + "}"
    if isinstance(v, Fun):
        if not len(v):
            return "{->}"
        body = ", ".join(
            f"{format_value(k)} -> {format_value(x)}"
            for k, x in sorted(v.items(), key=_item_key)
        )
        return "{" + body + "}"
    raise TypeError(f"not a value: {v!r}")


# -- finite set operations -------------------------------------------------

def vset(*elements) -> frozenset:
    return frozenset(elements)


def member(x, s: frozenset) -> bool:
    return x in s


def subset(a: frozenset, b: frozenset) -> bool:
    return a <= b


def union(a: frozenset, b: frozenset) -> frozenset:
    return a | b


def intersection(a: frozenset, b: frozenset) -> frozenset:
    return a & b


def difference(a: frozenset, b: frozenset) -> frozenset:
    return a - b


def size(s: frozenset) -> int:
    return len(s)


def cartesian(X: frozenset, Y: frozenset) -> frozenset:
    return frozenset(Pair(x, y) for x in X for y in Y)


def first(p: Pair):
    return p.first


def second(p: Pair):
    return p.second


def tuple_of(vs) -> Fun:
    """n-tuple as a function on ``{0, ..., n-1}``."""
    return Fun(enumerate(vs))
