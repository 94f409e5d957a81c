import pytest

from cct.errors import DomainNotPairs, EmptyFamily, NotFunctionFamily, NotSetFamily
from cct.families import (
    alpha,
    curry,
    curry_on,
    disjoint_union,
    function_space,
    labelings,
    parallel_pair,
    partial_function_space,
    product,
    projections,
    transpose,
    uncurry,
)
from cct.functions import compose_fun, identity_fun, is_injective
from cct.values import Fun, Pair, cartesian, tuple_of, vset


def F(**kw):
    return Fun(kw)


def test_product_examples():
    T = F(i=vset(1, 2), j=vset("u"))
    assert product(T) == vset(F(i=1, j="u"), F(i=2, j="u"))
    assert product(F(i=vset(1), j=frozenset())) == frozenset()
    assert product(Fun()) == vset(Fun())
    with pytest.raises(NotSetFamily):
        product(F(i="a"))


def test_projections_examples():
    T = F(i=vset(1, 2), j=vset("u"))
    pr = projections(T)
    assert pr("i")(F(i=2, j="u")) == 2
    assert transpose(pr) == identity_fun(product(T))
    single = F(i=vset(1, 2))
    p = projections(single)("i")
    assert is_injective(p) and p.range == vset(1, 2) and p.domain == product(single)


def test_transpose_examples():
    f = F(i=Fun({"s": 1}), j=Fun({"s": "u"}))
    assert transpose(f) == Fun({"s": F(i=1, j="u")})
    assert transpose(F(i=Fun({"s": 1}), j=Fun({"t": "u"}))) == Fun()
    with pytest.raises(EmptyFamily):
        transpose(Fun())
    with pytest.raises(NotFunctionFamily):
        transpose(F(i=vset(1)))


def test_disjoint_union_and_labelings():
    T = F(i=vset(1), j=vset(1))
    assert disjoint_union(T) == vset(Pair("i", 1), Pair("j", 1))
    assert disjoint_union(Fun()) == frozenset()
    lam = labelings(T)
    assert lam("i")(1) == Pair("i", 1)
    assert all(is_injective(lam(i)) for i in T.domain)
    assert uncurry(lam) == identity_fun(disjoint_union(T))


def test_curry_examples():
    assert curry(Fun()) == Fun()
    with pytest.raises(DomainNotPairs):
        curry(Fun({"a": 1}))


def test_uncurry_examples():
    assert uncurry(F(i=Fun({1: "u"}))) == Fun({Pair("i", 1): "u"})
    witness = F(i=Fun())
    assert uncurry(witness) == Fun()
    assert curry(uncurry(witness)) == Fun() != witness


def test_curry_on_keeps_empty_rows():
    f = Fun()
    X = vset("a")
    assert curry(f) == Fun()
    assert curry_on(f, X, frozenset()) == Fun({"a": Fun()})


def test_function_spaces():
    assert len(function_space(vset("a"), vset(1, 2))) == 2
    assert partial_function_space(vset("a"), vset(1)) == vset(Fun(), Fun({"a": 1}))
    assert function_space(frozenset(), vset(1)) == vset(Fun())
    assert function_space(vset("a"), frozenset()) == frozenset()


def test_alpha_examples():
    ev = alpha(vset(1), vset("u"))
    assert ev(Pair(Fun({1: "u"}), 1)) == "u"
    X, Y, Z = vset("a", "b"), vset(1, 2), vset("p", "q")
    for f in function_space(cartesian(X, Y), Z):
        fc = curry(f)
        assert compose_fun(alpha(Y, Z), parallel_pair(fc, identity_fun(Y))) == f


def test_pair_family_product_matches_cartesian():
    X, Y = vset("a", "b"), vset(1, 2, 3)
    P = product(tuple_of([X, Y]))
    to_pair = Fun((t, Pair(t(0), t(1))) for t in P)
    assert is_injective(to_pair)
    assert to_pair.range == cartesian(X, Y)
    # distinct representations: neither set contains the other's elements
    assert not (P & cartesian(X, Y))
