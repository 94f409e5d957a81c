"""The built-in law catalog.

Each builder takes a chooser and the carrier A (the first ``max_carrier``
atoms of the pool) and returns the instance as a dict; each check is a pure
predicate over that dict.  Laws that quantify over whole function spaces
(the universal properties, the evaluation map) bound their carriers at two
elements so the sampled run at larger sizes stays desk-scale.
"""

from __future__ import annotations

from .engine import Law
from .families import (
    alpha,
    curry,
    curry_on,
    disjoint_union,
    function_space,
    labelings,
    parallel_pair,
    product,
    projections,
    transpose,
    uncurry,
)
from .functions import (
    compose_fun,
    define_by_proxy,
    fun_from_graph,
    graph,
    identity_fun,
    inverse,
    is_fun_from,
    is_onto,
)
from .errors import NotInjective, NotWellDefined
from .pointfree import (
    check_product_universal,
    check_sum_universal,
    fork,
    fork_pointwise,
    par,
    par_pointwise,
    sharp_projection,
    tabulation_laws_hold,
)
from .relations import (
    compose,
    converse,
    dom,
    identity,
    is_functional,
    is_functional_pointfree,
    is_relation_from,
    is_relation_from_product,
)
from .report import FAIL
from .values import Fun, Pair, cartesian, sorted_values

INDEX_POOL = ("i", "j")
SPACE_BOUND = 2


def _small(A):
    return frozenset(sorted_values(A)[:SPACE_BOUND])


def _prefix(A, k):
    return frozenset(sorted_values(A)[:k])


# -- relations -------------------------------------------------------------------

def _r(ch, A):
    return {"R": ch.relation(A, A)}


def _rs(ch, A):
    return {"R": ch.relation(A, A), "S": ch.relation(A, A)}


def _rst(ch, A):
    return {"R": ch.relation(A, A), "S": ch.relation(A, A), "T": ch.relation(A, A)}


def _rxy(ch, A):
    return {"R": ch.relation(A, A), "X": ch.subset(A), "Y": ch.subset(A)}


def _codomain_instance(ch, A):
    R = ch.relation(A, A)
    return {"R": R, "X": dom(R), "Y": ch.subset(A), "Y2": ch.subset(A)}


def _codomain_is_attribute(R, X, Y, Y2):
    # Straw man: a nonempty relation determines the Y it is "from X to".
    if not R:
        return True
    if is_relation_from(R, X, Y) and is_relation_from(R, X, Y2):
        return Y == Y2
    return True


# -- functions -------------------------------------------------------------------

def _f(ch, A):
    return {"f": ch.partial_function(A, A)}


def _fg(ch, A):
    return {"f": ch.partial_function(A, A), "g": ch.partial_function(A, A)}


def _fyy(ch, A):
    return {"f": ch.partial_function(A, A), "Y": ch.subset(A), "Y2": ch.subset(A)}


def _onto_is_adjective(f, Y, Y2):
    # Straw man: "onto" is a property of a nonempty f alone.
    if not len(f):
        return True
    X = f.domain
    if is_fun_from(f, X, Y) and is_fun_from(f, X, Y2):
        return is_onto(f, Y) == is_onto(f, Y2)
    return True


def _equality(f, g):
    pointwise = f.domain == g.domain and all(f(x) == g(x) for x in f.domain)
    return (f == g) == pointwise


def _compose_graph_agree(f, g):
    return compose_fun(g, f) == fun_from_graph(compose(graph(g), graph(f)))


def _compose_domain(f, g):
    h = compose_fun(g, f)
    expected = {x for x in f.domain if f(x) in g.domain}
    return h.domain == expected and all(h(x) == g(f(x)) for x in expected)


def _injective_oracle(f):
    xs = sorted_values(f.domain)
    return all(f(a) != f(b) for n, a in enumerate(xs) for b in xs[n + 1:])


def _inverse_iff_injective(f):
    try:
        inv = inverse(f)
    except NotInjective:
        return not _injective_oracle(f)
    return (
        _injective_oracle(f)
        and inv.domain == f.range
        and compose_fun(inv, f) == identity_fun(f.domain)
        and compose_fun(f, inv) == identity_fun(f.range)
    )


def _fh(ch, A):
    return {"f": ch.function(A, A), "h": ch.function(A, A)}


def _proxy_welldef(f, h):
    xs = sorted_values(f.domain)
    welldef = all(
        h(a) == h(b) for a in xs for b in xs if f(a) == f(b)
    )
    try:
        g = define_by_proxy(f, h)
    except NotWellDefined:
        return not welldef
    if not welldef or g.domain != f.range:
        return False
    if any(g(f(x)) != h(x) for x in xs):
        return False
    if _injective_oracle(f):
        return g == compose_fun(h, inverse(f))
    return True


# -- families --------------------------------------------------------------------

def _product_universal_instance(ch, A):
    B = _small(A)
    k = ch.choice([1, 2])
    T = ch.family(INDEX_POOL[:k], lambda c, i: c.nonempty_subset(B))
    return {"T": T, "S": ch.subset(B)}


def _sum_universal_instance(ch, A):
    B = _small(A)
    k = ch.choice([0, 1, 2])
    T = ch.family(INDEX_POOL[:k], lambda c, i: c.subset(B))
    return {"T": T, "S": ch.subset(B)}


def _set_family(ch, A, sizes):
    k = ch.choice(sizes)
    return {"T": ch.family(INDEX_POOL[:k], lambda c, i: c.subset(A))}


def _pair_domain_fun(ch, A):
    return {"f": ch.partial_function(cartesian(A, A), A)}


def _fun_family(ch, A):
    I = ch.subset(A)
    return {"F": ch.family(sorted_values(I), lambda c, i: c.partial_function(A, A))}


def _uncurry_guard(F):
    roundtrip = curry(uncurry(F)) == F
    return roundtrip == (Fun() not in F.range)


def _alpha_instance(ch, A):
    B = _small(A)
    X = _prefix(B, ch.choice([0, 1, 2]))
    Y = _prefix(B, ch.choice([0, 1, 2]))
    Z = _prefix(B, ch.choice([0, 1, 2]))
    return {"X": X, "Y": Y, "Z": Z, "f": ch.function(cartesian(X, Y), Z)}


def _alpha_curry(X, Y, Z, f):
    ev = alpha(Y, Z)
    idY = identity_fun(Y)
    fc = curry_on(f, X, Y)
    if f != compose_fun(ev, parallel_pair(fc, idY)):
        return False
    for h in function_space(X, function_space(Y, Z)):
        if (h == fc) != (compose_fun(ev, parallel_pair(h, idY)) == f):
            return False
    return True


# -- point-free --------------------------------------------------------------------

def _fork_instance(ch, A):
    k = ch.choice([1, 2])
    idx = INDEX_POOL[:k]
    T = ch.family(idx, lambda c, i: c.subset(A))
    R = ch.family(idx, lambda c, i: c.relation(A, T(i)))
    return {"R": R, "T": T, "S": A}


def _fork_sub(R, T, S):
    F = fork(R, T, S)
    if F != fork_pointwise(R, T, S):
        return False
    pr = projections(T)
    for i in R.domain:
        through = compose(graph(pr(i)), F)
        if not through <= R(i):
            return False
        for s in S:
            for y in T(i):
                if (Pair(s, y) in through) != sharp_projection(R, i, s, y):
                    return False
    return True


def _fork_sharp(R, T, S):
    doms = {dom(R(i)) for i in R.domain}
    if len(doms) != 1:
        return True
    F = fork(R, T, S)
    pr = projections(T)
    return all(compose(graph(pr(i)), F) == R(i) for i in R.domain)


def _par_instance(ch, A):
    k = ch.choice([1, 2])
    idx = INDEX_POOL[:k]
    T = ch.family(idx, lambda c, i: c.subset(A))
    T2 = ch.family(idx, lambda c, i: c.subset(A))
    R = ch.family(idx, lambda c, i: c.relation(T(i), T2(i)))
    return {"R": R, "T": T, "T2": T2}


def _laws():
    return [
        Law(
            "rel.def3-def5-equiv",
            "relation from X to Y: (dom R within X and ran R within Y) iff R within X x Y",
            _rxy,
            lambda R, X, Y: is_relation_from(R, X, Y) == is_relation_from_product(R, X, Y),
        ),
        Law(
            "rel.compose-assoc",
            "composition of relations is associative",
            _rst,
            lambda R, S, T: compose(T, compose(S, R)) == compose(compose(T, S), R),
        ),
        Law(
            "rel.converse-involution",
            "converse of converse is the identity",
            _r,
            lambda R: converse(converse(R)) == R,
        ),
        Law(
            "rel.converse-antidistributes",
            "converse of S o R equals converse R then converse S",
            _rs,
            lambda R, S: converse(compose(S, R)) == compose(converse(R), converse(S)),
        ),
        Law(
            "rel.functional-pointfree",
            "R functional iff R o converse R = id on ran R",
            _r,
            lambda R: is_functional(R) == is_functional_pointfree(R),
        ),
        Law(
            "rel.codomain-not-attribute",
            "a relation does not determine a codomain: R within X x Y within X x Y'",
            _codomain_instance,
            _codomain_is_attribute,
            expected=FAIL,
        ),
        Law(
            "fun.onto-not-adjective",
            "onto takes a set argument: f can be onto Y but not onto Y'",
            _fyy,
            _onto_is_adjective,
            expected=FAIL,
        ),
        Law(
            "fun.equality-thm",
            "f = g iff same domain and pointwise equal values",
            _fg,
            _equality,
        ),
        Law(
            "fun.compose-graph-agree",
            "direct composition agrees with composing graphs (g o f is functional)",
            _fg,
            _compose_graph_agree,
        ),
        Law(
            "fun.compose-domain",
            "dom (g o f) = {x in dom f | f(x) in dom g}",
            _fg,
            _compose_domain,
        ),
        Law(
            "fun.inverse-iff-injective",
            "inverse defined iff one-to-one; then both round trips are identities",
            _f,
            _inverse_iff_injective,
        ),
        Law(
            "fun.proxy-welldef",
            "specification by proxy well-defined iff h(x) = h(x') whenever f(x) = f(x')",
            _fh,
            _proxy_welldef,
        ),
        Law(
            "fam.product-universal",
            "product: unique g : S -> xT with f_i = pr_i o g, namely transpose f",
            _product_universal_instance,
            lambda T, S: check_product_universal(T, S).passed,
        ),
        Law(
            "fam.sum-universal",
            "disjoint union: unique g with f_i = g o lambda_i, namely uncurry f",
            _sum_universal_instance,
            lambda T, S: check_sum_universal(T, S).passed,
        ),
        Law(
            "fam.pr-transpose-id",
            "transpose of the projections is the identity on the product",
            lambda ch, A: _set_family(ch, A, [1, 2]),
            lambda T: transpose(projections(T)) == identity_fun(product(T)),
        ),
        Law(
            "fam.lam-uncurry-id",
            "uncurry of the labelings is the identity on the disjoint union",
            lambda ch, A: _set_family(ch, A, [0, 1, 2]),
            lambda T: uncurry(labelings(T)) == identity_fun(disjoint_union(T)),
        ),
        Law(
            "fam.curry-roundtrip",
            "uncurry (curry f) = f for pair-domain f",
            _pair_domain_fun,
            lambda f: uncurry(curry(f)) == f,
        ),
        Law(
            "fam.uncurry-roundtrip-guard",
            "curry (uncurry F) = F iff the range of F contains no empty function",
            _fun_family,
            _uncurry_guard,
        ),
        Law(
            "fam.alpha-curry",
            "f = alpha o (curry f || id_Y), and curry f is the only such h",
            _alpha_instance,
            _alpha_curry,
        ),
        Law(
            "pf.fork-sub",
            "pr_i o <R> within R_i; pointwise and point-free fork agree",
            _fork_instance,
            _fork_sub,
        ),
        Law(
            "pf.fork-sharp-common-domain",
            "pr_i o <R> = R_i when all R_i share a domain",
            _fork_instance,
            _fork_sharp,
        ),
        Law(
            "pf.par-pointwise",
            "parallel relates tuples componentwise: t' (||R) t iff all t'_i R_i t_i",
            _par_instance,
            lambda R, T, T2: par(R, T, T2) == par_pointwise(R, T, T2),
        ),
        Law(
            "pf.tabulation",
            "R = g o converse f and (converse f o f) meet (converse g o g) = id_R",
            _r,
            tabulation_laws_hold,
        ),
    ]


CATALOG = {law.id: law for law in _laws()}
