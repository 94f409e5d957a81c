"""Functions as domain-plus-values objects, and their algebra.

Composition is unrestricted: ``dom(g o f)`` is whatever part of ``dom f``
lands in ``dom g``.  Surjectivity is a predicate with a set argument
(``is_onto(f, Y)``); there is no codomain and no adjective form.
"""

from __future__ import annotations

from typing import Callable

from .errors import (
    CarrierMismatch,
    NotFunctional,
    NotInjective,
    NotWellDefined,
    OutsideDomain,
)
from .relations import check_relation, converse, is_functional
from .values import Fun, Pair, sorted_values


def fun_from_graph(R: frozenset) -> Fun:
    check_relation(R)
    table = {}
    for p in sorted_values(R):
        if p.first in table and table[p.first] != p.second:
            raise NotFunctional(p.first, sorted_values({table[p.first], p.second}))
        table[p.first] = p.second
    return Fun(table)


def graph(f: Fun) -> frozenset:
    return frozenset(Pair(x, y) for x, y in f.items())


def apply(f: Fun, x):
    if x not in f.domain:
        raise OutsideDomain(x)
    return f(x)


def identity_fun(A: frozenset) -> Fun:
    return Fun((a, a) for a in A)


def compose_fun(g: Fun, f: Fun) -> Fun:
    gd = g.domain
    return Fun((x, g(y)) for x, y in f.items() if y in gd)


def is_fun_from(f: Fun, X: frozenset, Y: frozenset) -> bool:
    return f.domain == X and f.range <= Y


def is_onto(f: Fun, Y: frozenset) -> bool:
    return f.range == Y


def is_total_on(f: Fun, X: frozenset) -> bool:
    return f.domain == X


def is_partial_on(f: Fun, X: frozenset) -> bool:
    return f.domain <= X


def is_injective(f: Fun) -> bool:
    return is_functional(converse(graph(f)))


def _collision(f: Fun, same: Callable[[object, object], bool]):
    xs = sorted_values(f.domain)
    for i, x in enumerate(xs):
        for x2 in xs[i + 1:]:
            if same(x, x2):
                return x, x2
    return None


def inverse(f: Fun) -> Fun:
    """``f^-`` with domain ``ran f``; defined iff f is one-to-one."""
    hit = _collision(f, lambda x, x2: f(x) == f(x2))
    if hit:
        raise NotInjective(*hit)
    return Fun((y, x) for x, y in f.items())


def define_by_proxy(f: Fun, h: Fun) -> Fun:
    """The g on ``ran f`` with ``g(f x) = h x`` for every x in ``dom f``.

    Requires ``dom h == dom f``; fails when two inputs agree under f but
    not under h.
    """
    if h.domain != f.domain:
        raise CarrierMismatch("h", "dom h must equal dom f")
    hit = _collision(f, lambda x, x2: f(x) == f(x2) and h(x) != h(x2))
    if hit:
        raise NotWellDefined(*hit)
    return Fun((f(x), h(x)) for x in f.domain)


def spec_check(f: Fun, X: frozenset, Y: frozenset, pred) -> bool:
    """f is a function from X to Y and ``pred(x, f(x))`` holds throughout X."""
    return is_fun_from(f, X, Y) and all(pred(x, f(x)) for x in X)
