"""Front end for cct scripts."""

from .errors import (
    AssertionFailed,
    DslError,
    DslTypeError,
    EvalError,
    KernelFailure,
    LexError,
    ParseError,
    UnboundName,
)
from .evaluator import Session, Trace, TraceEntry, evaluate
from .parser import parse, parse_value
from .printer import print_expr, print_script, print_stmt

__all__ = [
    "AssertionFailed",
    "DslError",
    "DslTypeError",
    "EvalError",
    "KernelFailure",
    "LexError",
    "ParseError",
    "Session",
    "Trace",
    "TraceEntry",
    "UnboundName",
    "evaluate",
    "parse",
    "parse_value",
    "print_expr",
    "print_script",
    "print_stmt",
]
