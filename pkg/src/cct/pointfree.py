"""Point-free constructions: fork, parallel, tabulation, and the checkers for
the product and sum universal properties.

Relations carry no carriers, so every construction that needs a source or a
target takes it as an explicit argument.
"""

from __future__ import annotations

from .errors import (
    BudgetExceeded,
    CarrierMismatch,
    EmptyIndex,
    NotRelationFamily,
)
from .families import (
    disjoint_union,
    function_space,
    labelings,
    product,
    projections,
    transpose,
    uncurry,
)
from .functions import compose_fun, graph, identity_fun, inverse, is_fun_from
from .relations import (
    compose,
    converse,
    dom,
    identity,
    intersection,
    is_relation,
    is_relation_from,
    restrict_dom,
)
from .report import FAIL, PASS, LawReport
from .values import Fun, Pair, sorted_values

DEFAULT_CAP = 10**6


def _check_fork_args(R: Fun, T: Fun, S: frozenset) -> list:
    idx = sorted_values(R.domain)
    if not idx:
        raise EmptyIndex()
    if R.domain != T.domain:
        odd = sorted_values(R.domain ^ T.domain)[0]
        raise CarrierMismatch(odd, "relation and set families have different index sets")
    for i in idx:
        if not is_relation(R(i)):
            raise NotRelationFamily(i)
        if not isinstance(T(i), frozenset):
            raise CarrierMismatch(i, "carrier is not a set")
        if not is_relation_from(R(i), S, T(i)):
            raise CarrierMismatch(i, "relation is not from S to its carrier")
    return idx


def fork(R: Fun, T: Fun, S: frozenset) -> frozenset:
    """``<R>``: the intersection over i of ``converse(pr_i) o R_i``, restricted to S.

    Relates s to every tuple t in the product of T whose components are
    each related to s by the matching R_i.
    """
    idx = _check_fork_args(R, T, S)
    pr = projections(T)
    parts = [compose(converse(graph(pr(i))), R(i)) for i in idx]
    out = parts[0]
    for p in parts[1:]:
        out = intersection(out, p)
    return restrict_dom(out, S)


def fork_pointwise(R: Fun, T: Fun, S: frozenset) -> frozenset:
    idx = _check_fork_args(R, T, S)
    P = product(T)
    return frozenset(
        Pair(s, t)
        for s in S
        for t in P
        if all(Pair(s, t(i)) in R(i) for i in idx)
    )


def _check_par_args(R: Fun, T: Fun, T2: Fun) -> list:
    idx = sorted_values(R.domain)
    if not idx:
        raise EmptyIndex()
    for name, fam in (("T", T), ("T'", T2)):
        if fam.domain != R.domain:
            odd = sorted_values(R.domain ^ fam.domain)[0]
            raise CarrierMismatch(odd, f"{name} has a different index set")
    for i in idx:
        if not is_relation(R(i)):
            raise NotRelationFamily(i)
        if not is_relation_from(R(i), T(i), T2(i)):
            raise CarrierMismatch(i, "relation is not from T_i to T'_i")
    return idx


def par(R: Fun, T: Fun, T2: Fun) -> frozenset:
    """``||R`` from the product of T to the product of T2, built as
    ``fork(i -> R_i o pr_i)``."""
    idx = _check_par_args(R, T, T2)
    pr = projections(T)
    legs = Fun((i, compose(R(i), graph(pr(i)))) for i in idx)
    return fork(legs, T2, product(T))


def par_pointwise(R: Fun, T: Fun, T2: Fun) -> frozenset:
    idx = _check_par_args(R, T, T2)
    P, P2 = product(T), product(T2)
    return frozenset(
        Pair(t, t2)
        for t in P
        for t2 in P2
        if all(Pair(t(i), t2(i)) in R(i) for i in idx)
    )


def tabulate(R: frozenset) -> tuple:
    """The two projections of R's own pair set: ``f(x, y) = x``, ``g(x, y) = y``."""
    f = Fun((p, p.first) for p in R)
    g = Fun((p, p.second) for p in R)
    return f, g


def tabulation_laws_hold(R: frozenset) -> bool:
    f, g = tabulate(R)
    gf, gg = graph(f), graph(g)
    rebuilt = compose(gg, converse(gf))
    kernel = intersection(compose(converse(gf), gf), compose(converse(gg), gg))
    return rebuilt == R and kernel == identity(R)


def sharp_projection(R: Fun, i, s, y) -> bool:
    """Pointwise form of ``pr_i o <R>``: y R_i-related to s and s in every ``dom R_j``."""
    return Pair(s, y) in R(i) and all(s in dom(R(j)) for j in R.domain)


# -- universal properties ---------------------------------------------------

def _family_space(idx, make_space):
    """Every family choosing one member of ``make_space(i)`` per index."""
    spaces = [sorted_values(make_space(i)) for i in idx]
    out = [{}]
    for i, space in zip(idx, spaces):
        out = [{**acc, i: m} for acc in out for m in space]
    return [Fun(d) for d in out]


def check_product_universal(T: Fun, S: frozenset, cap: int = DEFAULT_CAP) -> LawReport:
    """For every family f with ``f_i : S -> T_i``, exactly one g in
    ``S -> product(T)`` satisfies ``f_i = pr_i o g``, and it is ``transpose(f)``.

    Every candidate g is tried; nothing about the solution is assumed.
    """
    idx = sorted_values(T.domain)
    if not idx:
        raise EmptyIndex()
    P = product(T)
    n_fams = 1
    for i in idx:
        n_fams *= len(T(i)) ** len(S)
    n_cands = len(P) ** len(S)
    if n_fams * n_cands > cap:
        raise BudgetExceeded(n_fams * n_cands, cap)
    pr = projections(T)
    candidates = sorted_values(function_space(S, P))
    checked = 0
    for f in _family_space(idx, lambda i: function_space(S, T(i))):
        solutions = []
        for g in candidates:
            checked += 1
            if all(compose_fun(pr(i), g) == f(i) for i in idx):
                solutions.append(g)
        if len(solutions) != 1 or solutions[0] != transpose(f):
            return LawReport(
                "product-universal",
                checked,
                FAIL,
                {"T": T, "S": S, "f": f, "solutions": frozenset(solutions)},
            )
    return LawReport("product-universal", checked, PASS)


def check_sum_universal(T: Fun, S: frozenset, cap: int = DEFAULT_CAP) -> LawReport:
    """For every family f with ``f_i : T_i -> S``, exactly one g in
    ``disjoint_union(T) -> S`` satisfies ``f_i = g o lambda_i``, namely ``uncurry(f)``.
    """
    idx = sorted_values(T.domain)
    D = disjoint_union(T)
    n_fams = 1
    for i in idx:
        n_fams *= len(S) ** len(T(i))
    n_cands = len(S) ** len(D)
    if n_fams * n_cands > cap:
        raise BudgetExceeded(n_fams * n_cands, cap)
    lam = labelings(T)
    candidates = sorted_values(function_space(D, S))
    checked = 0
    for f in _family_space(idx, lambda i: function_space(T(i), S)):
        solutions = []
        for g in candidates:
            checked += 1
            if all(compose_fun(g, lam(i)) == f(i) for i in idx):
                solutions.append(g)
        if len(solutions) != 1 or solutions[0] != uncurry(f):
            return LawReport(
                "sum-universal",
                checked,
                FAIL,
                {"T": T, "S": S, "f": f, "solutions": frozenset(solutions)},
            )
    return LawReport("sum-universal", checked, PASS)


def _bijection_report(law_id, m: Fun, source: frozenset, target: frozenset):
    """Report whether m is a bijection from ``source`` onto ``target``; on
    success ``detail`` is the inverse h with both round trips verified."""
    seen = {}
    for x in sorted_values(source):
        y = m(x)
        if y in seen:
            return LawReport(
                law_id, len(source), FAIL, {"x": seen[y], "x2": x, "image": y}
            )
        seen[y] = x
    stray = sorted_values(m.range - target)
    if stray:
        return LawReport(law_id, len(source), FAIL, {"outside": stray[0]})
    missed = sorted_values(target - m.range)
    if missed:
        return LawReport(law_id, len(source), FAIL, {"missed": missed[0]})
    h = inverse(m)
    ok = compose_fun(h, m) == identity_fun(source) and compose_fun(
        m, h
    ) == identity_fun(target)
    return LawReport(
        law_id, len(source), PASS if ok else FAIL, None if ok else {"h": h}, detail=h
    )


def check_product_candidate(gamma: Fun, C: frozenset, T: Fun) -> LawReport:
    """Given ``gamma_i : C -> T_i``, confirm ``transpose(gamma)`` is a bijection
    from C onto the product of T and recover its inverse h."""
    idx = sorted_values(T.domain)
    if not idx:
        raise EmptyIndex()
    if gamma.domain != T.domain:
        raise CarrierMismatch(sorted_values(gamma.domain ^ T.domain)[0])
    for i in idx:
        g = gamma(i)
        if not isinstance(g, Fun) or not is_fun_from(g, C, T(i)):
            raise CarrierMismatch(i, "gamma_i is not a function from C to T_i")
    return _bijection_report("product-candidate", transpose(gamma), C, product(T))


def check_sum_candidate(delta: Fun, D: frozenset, T: Fun) -> LawReport:
    """Given ``delta_i : T_i -> D``, confirm ``uncurry(delta)`` is a bijection
    from the disjoint union of T onto D and recover its inverse h."""
    idx = sorted_values(T.domain)
    if delta.domain != T.domain:
        raise CarrierMismatch(sorted_values(delta.domain ^ T.domain)[0])
    for i in idx:
        d = delta(i)
        if not isinstance(d, Fun) or not is_fun_from(d, T(i), D):
            raise CarrierMismatch(i, "delta_i is not a function from T_i to D")
    return _bijection_report("sum-candidate", uncurry(delta), disjoint_union(T), D)
