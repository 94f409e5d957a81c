"""Statement-by-statement evaluation against a mutable environment.

Every operator delegates to the kernel.  Functions are accepted wherever a
relation is expected and stand for their graph; relations are never
silently turned into functions (use ``fun R``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .. import families as fam
from .. import functions as fn
from .. import pointfree as pf
from .. import relations as rel
from ..engine import EnumConfig, get_law, run_law
from ..errors import KernelError
from ..values import Fun, Pair, format_value, sorted_values
from .errors import AssertionFailed, DslTypeError, EvalError, KernelFailure, UnboundName
from .printer import print_stmt
from .syntax import (
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
)


@dataclass
class TraceEntry:
    line: int
    col: int
    kind: str
    ok: bool
    text: str
    value: object = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "line": self.line,
            "col": self.col,
            "kind": self.kind,
            "ok": self.ok,
            "text": self.text,
        }


@dataclass
class Trace:
    entries: list = field(default_factory=list)
    error: Optional[EvalError] = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(e.ok for e in self.entries)


# -- operand coercions ----------------------------------------------------------

def _kind(v) -> str:
    if isinstance(v, Fun):
        return "function"
    if isinstance(v, frozenset):
        return "relation" if rel.is_relation(v) else "set"
    if isinstance(v, Pair):
        return "pair"
    return "atom"


def _as_rel(v, op):
    if isinstance(v, Fun):
        return fn.graph(v)
    if isinstance(v, frozenset) and rel.is_relation(v):
        return v
    raise DslTypeError(f"{op} expects a relation or function, got {_kind(v)}")


def _as_set(v, op):
    if isinstance(v, Fun):
        return fn.graph(v)
    if isinstance(v, frozenset):
        return v
    raise DslTypeError(f"{op} expects a set, got {_kind(v)}")


def _as_fun(v, op):
    if isinstance(v, Fun):
        return v
    raise DslTypeError(f"{op} expects a function, got {_kind(v)}")


def _dom(v):
    return v.domain if isinstance(v, Fun) else rel.dom(_as_rel(v, "dom"))


def _ran(v):
    return v.range if isinstance(v, Fun) else rel.ran(_as_rel(v, "ran"))


def _tab(v):
    f, g = pf.tabulate(_as_rel(v, "tab"))
    return Pair(f, g)


_UNARY = {
    "dom": _dom,
    "ran": _ran,
    "id": lambda v: rel.identity(_as_set(v, "id")),
    "prod": lambda v: fam.product(_as_fun(v, "prod")),
    "dsum": lambda v: fam.disjoint_union(_as_fun(v, "dsum")),
    "tr": lambda v: fam.transpose(_as_fun(v, "tr")),
    "unc": lambda v: fam.uncurry(_as_fun(v, "unc")),
    "cur": lambda v: fam.curry(_as_fun(v, "cur")),
    "tab": _tab,
    "inv": lambda v: fn.inverse(_as_fun(v, "inv")),
    "graph": lambda v: fn.graph(_as_fun(v, "graph")),
    "fun": lambda v: fn.fun_from_graph(_as_rel(v, "fun")),
}


def _compose(g, f):
    if isinstance(g, Fun) and isinstance(f, Fun):
        return fn.compose_fun(g, f)
    return rel.compose(_as_rel(g, "o"), _as_rel(f, "o"))


_BINARY = {
    "o": _compose,
    "&": lambda a, b: _as_set(a, "&") & _as_set(b, "&"),
    "|": lambda a, b: _as_set(a, "|") | _as_set(b, "|"),
}

_CALLS = {
    "pr": lambda T, i: fn.apply(fam.projections(_as_fun(T, "pr")), i),
    "inj": lambda T, i: fn.apply(fam.labelings(_as_fun(T, "inj")), i),
    "apply": lambda f, x: fn.apply(_as_fun(f, "apply"), x),
    "fork": lambda R, T, S: pf.fork(_as_fun(R, "fork"), _as_fun(T, "fork"), _as_set(S, "fork")),
    "par": lambda R, T, T2: pf.par(_as_fun(R, "par"), _as_fun(T, "par"), _as_fun(T2, "par")),
    "space": lambda X, Y: fam.function_space(_as_set(X, "space"), _as_set(Y, "space")),
    "pspace": lambda X, Y: fam.partial_function_space(
        _as_set(X, "pspace"), _as_set(Y, "pspace")
    ),
    "alpha": lambda Y, Z: fam.alpha(_as_set(Y, "alpha"), _as_set(Z, "alpha")),
    "proxy": lambda f, h: fn.define_by_proxy(_as_fun(f, "proxy"), _as_fun(h, "proxy")),
}


class Session:
    """One evaluation environment; not meant to be shared between threads."""

    def __init__(self, law_config: EnumConfig = EnumConfig()):
        self.env: dict = {}
        self.law_config = law_config

    def value_of(self, e):
        if isinstance(e, Name):
            if e.id not in self.env:
                raise UnboundName(f"undefined name {e.id!r}")
            return self.env[e.id]
        if isinstance(e, Lit):
            return e.value
        if isinstance(e, Converse):
            return rel.converse(_as_rel(self.value_of(e.arg), "~"))
        if isinstance(e, Binary):
            return _BINARY[e.op](self.value_of(e.left), self.value_of(e.right))
        if isinstance(e, Call):
            return _CALLS[e.op](*(self.value_of(a) for a in e.args))
        return _UNARY[e.op](self.value_of(e.arg))

    def execute(self, s) -> Optional[TraceEntry]:
        if isinstance(s, (SetDecl, RelDecl, FunDecl, FamDecl)):
            self.env[s.name] = s.value
            return None
        if isinstance(s, Eval):
            v = self.value_of(s.expr)
            return TraceEntry(s.line, s.col, "eval", True, format_value(v), v)
        if isinstance(s, CheckLaw):
            report = run_law(get_law(s.law_id), self.law_config)
            text = f"check {s.law_id}: {report.status_text()} ({report.instances} instances)"
            return TraceEntry(s.line, s.col, "check", report.as_expected, text, report)
        if isinstance(s, CheckEq):
            a, b = self.value_of(s.left), self.value_of(s.right)
            src = print_stmt(s)[:-1]
            if a == b:
                return TraceEntry(s.line, s.col, "check", True, f"{src}: PASS")
            text = f"{src}: FAIL (left {format_value(a)}, right {format_value(b)})"
            return TraceEntry(s.line, s.col, "check", False, text)
        if isinstance(s, Assert):
            a = _as_set(self.value_of(s.left), "assert")
            b = _as_set(self.value_of(s.right), "assert")
            missing = sorted_values(a - b)
            src = print_stmt(s)[:-1]
            if missing:
                w = missing[0]
                raise AssertionFailed(
                    f"{src}: inclusion fails, witness {format_value(w)}", w
                )
            return TraceEntry(s.line, s.col, "assert", True, f"{src}: ok")
        raise TypeError(f"not a statement: {s!r}")

    def run(self, script: Script) -> Trace:
        trace = Trace()
        for s in script.stmts:
            try:
                entry = self.execute(s)
            except EvalError as e:
                e.line, e.col = s.line, s.col
                e.args = (f"{s.line}:{s.col}: {e.message}",)
                trace.error = e
                break
            except KernelError as e:
                trace.error = KernelFailure(e, s.line, s.col)
                break
            if entry is not None:
                trace.entries.append(entry)
        return trace


def evaluate(script: Script, law_config: EnumConfig = EnumConfig()) -> Trace:
    return Session(law_config).run(script)
