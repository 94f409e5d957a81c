"""Families (functions used as indexed data) and the constructions over them.

Products are sets of choice functions, disjoint unions are sets of labeled
pairs ``(i, x)``.  ``transpose`` and ``uncurry`` are the mediating maps of
the two universal properties; ``curry`` goes the other way.
"""

from __future__ import annotations

from itertools import product as _cartesian_power

from .errors import (
    DomainNotPairs,
    EmptyFamily,
    NotFunctionFamily,
    NotSetFamily,
)
from .values import Fun, Pair, cartesian, sorted_values

_ABSENT = object()


def _set_family(T: Fun) -> list:
    """Sorted index list of T, after checking every value is a set."""
    idx = sorted_values(T.domain)
    for i in idx:
        if not isinstance(T(i), frozenset):
            raise NotSetFamily(i)
    return idx


def _function_family(F: Fun) -> list:
    idx = sorted_values(F.domain)
    for i in idx:
        if not isinstance(F(i), Fun):
            raise NotFunctionFamily(i)
    return idx


def product(T: Fun) -> frozenset:
    """All f with ``dom f = dom T`` and ``f(i)`` in ``T(i)`` for each index."""
    idx = _set_family(T)
    choices = [sorted_values(T(i)) for i in idx]
    return frozenset(Fun(zip(idx, c)) for c in _cartesian_power(*choices))


def projections(T: Fun) -> Fun:
    idx = _set_family(T)
    P = product(T)
    return Fun((i, Fun((t, t(i)) for t in P)) for i in idx)


def transpose(f: Fun) -> Fun:
    """``(transpose f)(s)`` is the family ``i -> f_i(s)``.

    The domain is the intersection of the member domains, which is the
    shared domain whenever all members agree on it.
    """
    idx = _function_family(f)
    if not idx:
        raise EmptyFamily()
    members = [f(i) for i in idx]
    common = frozenset.intersection(*(g.domain for g in members))
    return Fun((s, Fun((i, g(s)) for i, g in zip(idx, members))) for s in common)


def disjoint_union(T: Fun) -> frozenset:
    idx = _set_family(T)
    return frozenset(Pair(i, x) for i in idx for x in T(i))


def labelings(T: Fun) -> Fun:
    idx = _set_family(T)
    return Fun((i, Fun((x, Pair(i, x)) for x in T(i))) for i in idx)


def curry(f: Fun) -> Fun:
    """``curry(f)(x)(y) = f(x, y)`` for any f whose domain is a set of pairs.

    ``dom curry(f)`` is the set of first members of ``dom f``, and
    ``dom curry(f)(x)`` is ``{y | (x, y) in dom f}``.
    """
    groups: dict = {}
    for k, v in f.items():
        if not isinstance(k, Pair):
            raise DomainNotPairs(k)
        groups.setdefault(k.first, {})[k.second] = v
    return Fun((x, Fun(table)) for x, table in groups.items())


def curry_on(f: Fun, X: frozenset, Y: frozenset) -> Fun:
    """Typed curry of ``f : X x Y -> Z`` into ``X -> (Y -> Z)``.

    Differs from ``curry`` only when Y is empty: every x in X then maps to
    the empty function instead of being dropped.
    """
    return Fun((x, Fun((y, f(Pair(x, y))) for y in Y)) for x in X)


def uncurry(F: Fun) -> Fun:
    """``uncurry(F)(x, y) = F(x)(y)`` on ``{(x, y) | x in dom F, y in dom F(x)}``."""
    idx = _function_family(F)
    return Fun((Pair(x, y), v) for x in idx for y, v in F(x).items())


uncurry_family = uncurry


def function_space(X: frozenset, Y: frozenset) -> frozenset:
    """All functions with domain X and range within Y (``|Y| ** |X|`` of them)."""
    xs, ys = sorted_values(X), sorted_values(Y)
    return frozenset(Fun(zip(xs, c)) for c in _cartesian_power(ys, repeat=len(xs)))


def partial_function_space(X: frozenset, Y: frozenset) -> frozenset:
    """All functions with domain within X and range within Y."""
    xs = sorted_values(X)
    opts = [_ABSENT] + sorted_values(Y)
    return frozenset(
        Fun((x, y) for x, y in zip(xs, c) if y is not _ABSENT)
        for c in _cartesian_power(opts, repeat=len(xs))
    )


def alpha(Y: frozenset, Z: frozenset) -> Fun:
    """Evaluation map on ``(Y -> Z) x Y``: ``(g, y) -> g(y)``."""
    return Fun((p, p.first(p.second)) for p in cartesian(function_space(Y, Z), Y))


def parallel_pair(f: Fun, g: Fun) -> Fun:
    """``(f || g)(x, y) = (f x, g y)`` on ``dom f x dom g``."""
    return Fun(
        (Pair(x, y), Pair(fx, gy)) for x, fx in f.items() for y, gy in g.items()
    )
