"""Canonical printer: one statement per line, values in canonical order."""

from __future__ import annotations

from ..values import format_value
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

_BINARY_PREC = {"|": 1, "&": 2, "o": 3}
_PREFIX, _POSTFIX, _ATOM = 4, 5, 6


def _prec(e) -> int:
    if isinstance(e, Binary):
        return _BINARY_PREC[e.op]
    if isinstance(e, Converse):
        return _POSTFIX
    if isinstance(e, (Name, Lit, Call)):
        return _ATOM
    return _PREFIX


def print_expr(e, min_prec: int = 0) -> str:
    if isinstance(e, Name):
        text = e.id
    elif isinstance(e, Lit):
        text = format_value(e.value)
    elif isinstance(e, Binary):
        p = _BINARY_PREC[e.op]
        text = f"{print_expr(e.left, p)} {e.op} {print_expr(e.right, p + 1)}"
    elif isinstance(e, Converse):
        text = f"{print_expr(e.arg, _POSTFIX)}~"
    elif isinstance(e, Call):
        text = f"{e.op}({', '.join(print_expr(a) for a in e.args)})"
    else:
        text = f"{e.op} {print_expr(e.arg, _PREFIX)}"
    return f"({text})" if _prec(e) < min_prec else text


def print_stmt(s) -> str:
    if isinstance(s, SetDecl):
        return f"set {s.name} = {format_value(s.value)};"
    if isinstance(s, RelDecl):
        return f"rel {s.name} = {format_value(s.value)};"
    if isinstance(s, FunDecl):
        return f"fun {s.name} = {format_value(s.value)};"
    if isinstance(s, FamDecl):
        return f"fam {s.name} = {format_value(s.value)};"
    if isinstance(s, Eval):
        return f"eval {print_expr(s.expr)};"
    if isinstance(s, CheckLaw):
        return f"check {s.law_id};"
    if isinstance(s, CheckEq):
        return f"check {print_expr(s.left)} = {print_expr(s.right)};"
    if isinstance(s, Assert):
        return f"assert {print_expr(s.left)} <= {print_expr(s.right)};"
    raise TypeError(f"not a statement: {s!r}")


def print_script(script: Script) -> str:
    return "".join(print_stmt(s) + "\n" for s in script.stmts)
