import pytest
from hypothesis import given
from hypothesis import strategies as st

from cct.dsl import (
    AssertionFailed,
    KernelFailure,
    LexError,
    ParseError,
    UnboundName,
    evaluate,
    parse,
    parse_value,
    print_script,
)
from cct.dsl.lexer import tokenize
from cct.dsl.syntax import (
    CALL_OPS,
    UNARY_OPS,
    Assert,
    Binary,
    Call,
    CheckEq,
    CheckLaw,
    Converse,
    Eval,
    FamDecl,
    FunDecl,
    Lit,
    Name,
    RelDecl,
    Script,
    SetDecl,
    Unary,
)
from cct.values import Fun, Pair, format_value


def run(text):
    return evaluate(parse(text))


def only_value(text):
    trace = run(text)
    assert trace.ok, trace.error
    return trace.entries[-1].text


# -- parsing ---------------------------------------------------------------------

def test_three_statement_script():
    s = parse("set X = {a,b}; rel R = {(a,1)}; eval dom R;")
    assert len(s.stmts) == 3
    assert s.stmts[2] == Eval(Unary("dom", Name("R")))


def test_dangling_comma_position():
    with pytest.raises(ParseError) as e:
        parse("rel R = {(a,)}")
    assert (e.value.line, e.value.col) == (1, 12)
    assert e.value.token == ","


def test_parse_error_reports_expected_tokens():
    with pytest.raises(ParseError) as e:
        parse("eval dom R")
    assert "';'" in e.value.expected
    with pytest.raises(ParseError) as e:
        parse("bogus X;")
    assert e.value.line == 1 and e.value.col == 1


def test_lex_error_position():
    with pytest.raises(LexError) as e:
        parse("set X = {a};\nset Y = {$};")
    assert (e.value.line, e.value.col) == (2, 10)


def test_unicode_aliases():
    assert [t.text for t in tokenize("R ∘ S˘ ∩ T ∪ U ⊆ V")][:-1] == [
        "R", "o", "S", "~", "&", "T", "|", "U", "<=", "V",
    ]
    assert parse_value("{a ↦ 1}") == Fun({"a": 1})


def test_precedence_and_semicolon():
    s = parse("rel R = {}; rel S = {}; rel Q = {}; eval R | S & Q o R~; eval R ; S;")
    e1, e2 = s.stmts[3].expr, s.stmts[4].expr
    assert e1 == Binary(
        "|", Name("R"), Binary("&", Name("S"), Binary("o", Name("Q"), Converse(Name("R"))))
    )
    assert e2 == Binary("o", Name("S"), Name("R"))


def test_name_atom_collision_is_parse_error():
    with pytest.raises(ParseError):
        parse("set X = {a}; set a = {1};")
    with pytest.raises(ParseError):
        parse("set X = {a}; set Y = {X};")
    with pytest.raises(ParseError):
        parse("set X = {a}; set X = {b};")


def test_law_ids_and_equations():
    s = parse("set X = {a}; check rel.compose-assoc; check X = X;")
    assert s.stmts[1] == CheckLaw("rel.compose-assoc")
    assert s.stmts[2] == CheckEq(Name("X"), Name("X"))


def test_literal_forms():
    assert parse_value("{}") == frozenset()
    assert parse_value("{->}") == Fun()
    assert parse_value("{(a, 1), (a, 1)}") == frozenset({Pair("a", 1)})
    assert parse_value("((a, b), {c})") == Pair(Pair("a", "b"), frozenset({"c"}))
    with pytest.raises(ParseError):
        parse_value("{a -> 1, a -> 2}")


# -- evaluation ------------------------------------------------------------------

def test_curry_example():
    assert only_value("fun f = {(0,5)->p,(3,1)->q,(3,2)->r}; eval dom(cur f);") == "{0, 3}"


def test_fun_of_non_functional_relation_reports_position():
    trace = run("rel R = {(a,1),(a,2)};\neval fun R;")
    err = trace.error
    assert isinstance(err, KernelFailure) and err.kind == "NotFunctional"
    assert (err.line, err.col) == (2, 1)


def test_cur_of_non_pair_domain():
    trace = run("fun f = {a -> 1}; eval cur f;")
    assert trace.error.kind == "DomainNotPairs"


def test_undeclared_identifier_is_an_atom():
    assert parse("eval a;").stmts[0] == Eval(Lit("a"))
    trace = run("eval dom R;")
    assert trace.error.kind == "TypeError"
    assert "atom" in trace.error.message


def test_unbound_name_in_constructed_syntax():
    trace = evaluate(Script((Eval(Name("R")),)))
    assert isinstance(trace.error, UnboundName)


def test_space_count_check():
    trace = run("set X = {a}; set Y = {1, 2}; eval space(X, Y); check space(X, Y) = {{a -> 1}, {a -> 2}};")
    assert trace.ok
    assert trace.entries[0].value == frozenset({Fun({"a": 1}), Fun({"a": 2})})


def test_false_assert_halts_with_witness():
    trace = run("rel R = {(a,1),(b,2)}; assert R <= {(a,1)}; eval R;")
    assert isinstance(trace.error, AssertionFailed)
    assert trace.error.witness == Pair("b", 2)
    assert trace.entries == []


def test_failing_check_continues():
    trace = run("set X = {a}; check X = {}; eval X;")
    assert not trace.ok and trace.error is None
    assert [e.ok for e in trace.entries] == [False, True]


def test_check_law_statement():
    trace = run("check rel.codomain-not-attribute;")
    assert trace.ok
    assert "FAIL (expected)" in trace.entries[0].text


def test_printing_examples():
    assert format_value(frozenset({"b", "a"})) == "{a, b}"
    assert only_value("fun f = {a -> 1}; eval graph f;") == "{(a, 1)}"


def test_evaluation_is_deterministic():
    text = "rel R = {(c,1),(a,2),(b,1)}; eval R~; eval tab R; eval R o R~;"
    first = [e.text for e in run(text).entries]
    assert first == [e.text for e in run(text).entries]


# -- round trip (property based) ---------------------------------------------------

ATOMS = st.sampled_from(["a", "b", "c", "zz", 0, 1, 7, -2])


def _values():
    return st.recursive(
        ATOMS,
        lambda inner: st.one_of(
            st.builds(Pair, inner, inner),
            st.frozensets(inner, max_size=3),
            st.dictionaries(inner, inner, max_size=3).map(Fun),
        ),
        max_leaves=8,
    )


VALUES = _values()
PAIRS = st.frozensets(st.builds(Pair, VALUES, VALUES), max_size=3)
NAMES = ("X", "R", "f", "T")


def _exprs():
    leaves = st.one_of(st.sampled_from(NAMES).map(Name), VALUES.map(Lit))

    def extend(inner):
        calls = [
            st.tuples(*[inner if k == "e" else VALUES.map(Lit) for k in shape]).map(
                lambda args, op=op: Call(op, args)
            )
            for op, shape in CALL_OPS.items()
        ]
        return st.one_of(
            st.builds(Unary, st.sampled_from(UNARY_OPS), inner),
            st.builds(Converse, inner),
            st.builds(Binary, st.sampled_from(["|", "&", "o"]), inner, inner),
            *calls,
        )

    return st.recursive(leaves, extend, max_leaves=6)


EXPRS = _exprs()
BODY = st.one_of(
    st.builds(Eval, EXPRS),
    st.builds(CheckEq, EXPRS, EXPRS),
    st.builds(Assert, EXPRS, EXPRS),
    st.sampled_from(["rel.compose-assoc", "fam.alpha-curry"]).map(CheckLaw),
)


@st.composite
def scripts(draw):
    decls = [
        SetDecl("X", draw(st.frozensets(VALUES, max_size=3))),
        RelDecl("R", draw(PAIRS)),
        FunDecl("f", Fun(draw(st.dictionaries(VALUES, VALUES, max_size=3)))),
        FamDecl("T", Fun(draw(st.dictionaries(ATOMS, VALUES, max_size=2)))),
    ]
    return Script(tuple(decls + draw(st.lists(BODY, max_size=5))))


@given(scripts())
def test_print_parse_round_trip(script):
    text = print_script(script)
    again = parse(text)
    assert again == script
    assert print_script(again) == text


@given(VALUES)
def test_value_print_parse_round_trip(v):
    assert parse_value(format_value(v)) == v
