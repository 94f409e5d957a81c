"""Finite-model kernel for relations and functions without codomains.

Relations are plain finite sets of ordered pairs.  A function is its domain
together with a value at each point, with no attached codomain; a family is
just a function read as indexed data.  Generalized products and sums, the
point-free relational constructions and an exhaustive small-scope law
checker are built on top.
"""

from .errors import KernelError
from .values import Fun, Pair, cartesian, format_value, tuple_of, value_eq

__version__ = "0.1.0"

__all__ = [
    "Fun",
    "KernelError",
    "Pair",
    "cartesian",
    "format_value",
    "tuple_of",
    "value_eq",
]
