"""Abstract syntax.  Source positions are kept out of equality so that
``parse(print(s)) == s`` compares structure only."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Tuple

UNARY_OPS = (
    "dom", "ran", "id", "prod", "dsum", "tr", "unc", "cur", "tab", "inv", "graph", "fun",
)
BINARY_OPS = ("|", "&", "o")
# call name -> argument shape: "e" expression, "v" value literal
CALL_OPS = {
    "pr": "ev",
    "inj": "ev",
    "apply": "ev",
    "fork": "eee",
    "par": "eee",
    "space": "ee",
    "pspace": "ee",
    "alpha": "ee",
    "proxy": "ee",
}


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Lit:
    value: Any


@dataclass(frozen=True)
class Unary:
    op: str
    arg: Any


@dataclass(frozen=True)
class Converse:
    arg: Any


@dataclass(frozen=True)
class Binary:
    op: str
    left: Any
    right: Any


@dataclass(frozen=True)
class Call:
    op: str
    args: Tuple


@dataclass(frozen=True)
class _Stmt:
    line: int = field(default=0, compare=False, kw_only=True)
    col: int = field(default=0, compare=False, kw_only=True)


@dataclass(frozen=True)
class SetDecl(_Stmt):
    name: str
    value: frozenset


@dataclass(frozen=True)
class RelDecl(_Stmt):
    name: str
    value: frozenset


@dataclass(frozen=True)
class FunDecl(_Stmt):
    name: str
    value: Any


@dataclass(frozen=True)
class FamDecl(_Stmt):
    name: str
    value: Any


@dataclass(frozen=True)
class Eval(_Stmt):
    expr: Any


@dataclass(frozen=True)
class CheckLaw(_Stmt):
    law_id: str


@dataclass(frozen=True)
class CheckEq(_Stmt):
    left: Any
    right: Any


@dataclass(frozen=True)
class Assert(_Stmt):
    left: Any
    right: Any


@dataclass(frozen=True)
class Script:
    stmts: Tuple = ()
