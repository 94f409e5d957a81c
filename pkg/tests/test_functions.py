import itertools

import pytest

from cct.errors import CarrierMismatch, NotFunctional, NotInjective, NotWellDefined, OutsideDomain
from cct.functions import (
    apply,
    compose_fun,
    define_by_proxy,
    fun_from_graph,
    graph,
    identity_fun,
    inverse,
    is_fun_from,
    is_injective,
    is_onto,
    is_partial_on,
    is_total_on,
    spec_check,
)
from cct.relations import is_functional, relation
from cct.values import Fun, Pair, cartesian, vset


def partial_functions(n):
    A = list("abc"[:n])
    for vals in itertools.product([None] + A, repeat=n):
        yield Fun((x, v) for x, v in zip(A, vals) if v is not None)


def test_fun_from_graph_examples():
    f = fun_from_graph(relation([("a", 1), ("b", 2)]))
    assert f("a") == 1 and f("b") == 2
    assert fun_from_graph(frozenset()) == Fun()
    with pytest.raises(NotFunctional) as e:
        fun_from_graph(relation([("a", 1), ("a", 2)]))
    assert e.value.x == "a"


def test_graph_examples_and_bijection():
    assert graph(Fun({"a": 1})) == relation([("a", 1)])
    assert graph(Fun()) == frozenset()
    for n in range(4):
        for f in partial_functions(n):
            assert fun_from_graph(graph(f)) == f
    A = frozenset("ab")
    cells = sorted(cartesian(A, A), key=lambda p: (p.first, p.second))
    for bits in itertools.product((0, 1), repeat=4):
        R = frozenset(c for c, b in zip(cells, bits) if b)
        if is_functional(R):
            assert graph(fun_from_graph(R)) == R


def test_apply_examples():
    assert apply(Fun({"a": 1, "b": 2}), "b") == 2
    assert apply(identity_fun(vset("a")), "a") == "a"
    with pytest.raises(OutsideDomain):
        apply(Fun({"a": 1}), "z")


def test_compose_fun_examples():
    g, f = Fun({1: "u"}), Fun({"a": 1, "b": 2})
    assert compose_fun(g, f) == Fun({"a": "u"})
    assert compose_fun(f, identity_fun(f.domain)) == f


def test_compose_fun_associative():
    funs = list(partial_functions(2))
    for f, g, h in itertools.product(funs, repeat=3):
        assert compose_fun(h, compose_fun(g, f)) == compose_fun(compose_fun(h, g), f)


def test_predicates():
    f = Fun({"a": 1, "b": 1})
    assert is_fun_from(f, vset("a", "b"), vset(1, 2))
    assert not is_onto(f, vset(1, 2))
    assert is_onto(f, vset(1))
    p = fun_from_graph(relation([(0, 1), (2, 3)]))
    assert is_partial_on(p, vset(0, 1, 2, 3))
    assert not is_total_on(p, vset(0, 1, 2, 3))
    assert is_total_on(p, vset(0, 2))
    assert not is_injective(f)


def test_onto_into_duality():
    Y_pool = [frozenset(s) for k in range(3) for s in itertools.combinations("ab", k)]
    for f in partial_functions(2):
        for Y in Y_pool:
            if is_onto(f, Y):
                assert is_fun_from(f, f.domain, Y)
            for Y2 in Y_pool:
                if is_fun_from(f, f.domain, Y) and Y <= Y2:
                    assert is_fun_from(f, f.domain, Y2)


def test_space_counts_by_predicate():
    X, Y = vset("a", "b"), vset(1, 2, 3)
    cells = sorted(cartesian(X, Y), key=lambda p: (p.first, p.second))
    rels = [
        frozenset(c for c, b in zip(cells, bits) if b)
        for bits in itertools.product((0, 1), repeat=len(cells))
    ]
    functional = [R for R in rels if is_functional(R)]
    total = [R for R in functional if is_fun_from(fun_from_graph(R), X, Y)]
    assert len(total) == 3**2
    assert len(functional) == 4**2


def test_inverse_examples():
    assert inverse(Fun({"a": 1, "b": 2})) == Fun({1: "a", 2: "b"})
    with pytest.raises(NotInjective) as e:
        inverse(Fun({"a": 1, "b": 1}))
    assert (e.value.x, e.value.x2) == ("a", "b")
    for n in range(4):
        for f in partial_functions(n):
            if is_injective(f):
                assert compose_fun(inverse(f), f) == identity_fun(f.domain)


def test_define_by_proxy_examples():
    f = Fun({"a": 1, "b": 1})
    assert define_by_proxy(f, Fun({"a": "u", "b": "u"})) == Fun({1: "u"})
    with pytest.raises(NotWellDefined) as e:
        define_by_proxy(f, Fun({"a": "u", "b": "v"}))
    assert (e.value.x, e.value.x2) == ("a", "b")
    with pytest.raises(CarrierMismatch):
        define_by_proxy(f, Fun({"a": "u"}))


def test_define_by_proxy_injective_is_composition_with_inverse():
    A = list("ab")
    totals = [Fun(zip(A, vals)) for vals in itertools.product(A, repeat=2)]
    for f, h in itertools.product(totals, repeat=2):
        if is_injective(f):
            assert define_by_proxy(f, h) == compose_fun(h, inverse(f))


def test_proxy_over_finite_cons():
    # cons modeled as an injective finite map on (head, tail) pairs
    heads, tails = vset(0, 1), vset("nil", "t1")
    cons = Fun((p, f"c{p.first}{p.second}") for p in cartesian(heads, tails))
    assert is_injective(cons)
    h = Fun((p, p.first) for p in cons.domain)
    g = define_by_proxy(cons, h)
    for p in cons.domain:
        assert g(cons(p)) == h(p)


def test_spec_check_sqrt_table():
    sqrt = Fun({0: 0, 1: 1, 4: 2})
    pred = lambda x, y: y * y == x  # noqa: E731
    assert spec_check(sqrt, vset(0, 1, 4), vset(0, 1, 2), pred)
    assert not spec_check(Fun({0: 1}), vset(0), vset(0, 1, 2), pred)
    assert spec_check(Fun(), frozenset(), frozenset(), pred)
