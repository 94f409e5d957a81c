"""Relations as bare finite sets of ordered pairs.

Pairs are stored as ``(input, output)``: ``holds(R, x, y)`` means the pair
``(x, y)`` is in ``R``, read "R relates x to y" (in the natural-order
notation this is ``y R x``).  Domain and range are always computed; a
relation never carries source or target carriers.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from .errors import NotARelation
from .values import Pair, cartesian

Rel = frozenset


def relation(pairs: Iterable = ()) -> frozenset:
    """Build a relation, accepting ``Pair`` objects or 2-tuples."""
    out = []
    for p in pairs:
        if isinstance(p, Pair):
            out.append(p)
        elif isinstance(p, tuple) and len(p) == 2:
            out.append(Pair(*p))
        else:
            raise NotARelation(p)
    return frozenset(out)


def is_relation(v) -> bool:
    return isinstance(v, frozenset) and all(isinstance(p, Pair) for p in v)


def check_relation(v) -> frozenset:
    if not isinstance(v, frozenset):
        raise NotARelation(v)
    for p in v:
        if not isinstance(p, Pair):
            raise NotARelation(p)
    return v


def dom(R: frozenset) -> frozenset:
    return frozenset(p.first for p in R)


def ran(R: frozenset) -> frozenset:
    return frozenset(p.second for p in R)


def holds(R: frozenset, x, y) -> bool:
    return Pair(x, y) in R


def compose(S: frozenset, R: frozenset) -> frozenset:
    """``S o R``: relates x to z iff R relates x to some y and S relates y to z.

    Total on arbitrary relations; no carrier matching is required.
    """
    after = defaultdict(list)
    for p in S:
        after[p.first].append(p.second)
    return frozenset(
        Pair(p.first, z) for p in R for z in after.get(p.second, ())
    )


def converse(R: frozenset) -> frozenset:
    return frozenset(Pair(p.second, p.first) for p in R)


def identity(A: frozenset) -> frozenset:
    return frozenset(Pair(a, a) for a in A)


def union(R: frozenset, S: frozenset) -> frozenset:
    return R | S


def intersection(R: frozenset, S: frozenset) -> frozenset:
    return R & S


def difference(R: frozenset, S: frozenset) -> frozenset:
    return R - S


def restrict_dom(R: frozenset, A: frozenset) -> frozenset:
    return frozenset(p for p in R if p.first in A)


def is_relation_from(R: frozenset, X: frozenset, Y: frozenset) -> bool:
    """R is a relation from X to Y: ``dom R`` within X and ``ran R`` within Y."""
    return dom(R) <= X and ran(R) <= Y


def is_relation_from_product(R: frozenset, X: frozenset, Y: frozenset) -> bool:
    """Second reading of the same notion: R is a subset of ``X x Y``."""
    return R <= cartesian(X, Y)


def functional_witness(R: frozenset):
    """A first member with two or more images, or ``None``."""
    seen = {}
    for p in R:
        if p.first in seen and seen[p.first] != p.second:
            return p.first
        seen[p.first] = p.second
    return None


def is_functional(R: frozenset) -> bool:
    """No two pairs of R share a first member."""
    return functional_witness(R) is None


def is_functional_pointfree(R: frozenset) -> bool:
    return compose(R, converse(R)) == identity(ran(R))
