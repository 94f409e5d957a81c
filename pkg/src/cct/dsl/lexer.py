from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LexError

STMT_KEYWORDS = frozenset({"set", "rel", "fun", "fam", "eval", "check", "assert"})
EXPR_KEYWORDS = frozenset(
    {
        "dom", "ran", "id", "o", "prod", "dsum", "pr", "inj", "tr", "unc", "cur",
        "fork", "par", "tab", "inv", "graph", "fun", "apply", "space", "pspace",
        "alpha", "proxy",
    }
)
KEYWORDS = STMT_KEYWORDS | EXPR_KEYWORDS

# Unicode spellings normalized to the ASCII tokens.
_ALIASES = {"∩": "&", "∪": "|", "⊆": "<=", "∘": "o", "˘": "~", "↦": "->", "→": "->"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<int>-?[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*(?:[.\-][A-Za-z0-9_]+)*)
  | (?P<op>->|<=|[{}(),;=~&|∩∪⊆∘˘↦→])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "kw", "op", "eof"
    text: str
    line: int
    col: int

    def describe(self) -> str:
        return "end of input" if self.kind == "eof" else repr(self.text)


def tokenize(text: str) -> list:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise LexError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = m.lastgroup
        col = pos - line_start + 1
        s = m.group()
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "int":
            tokens.append(Token("int", s, line, col))
        elif kind == "ident":
            tokens.append(Token("kw" if s in KEYWORDS else "ident", s, line, col))
        elif kind == "op":
            tokens.append(Token("op", _ALIASES.get(s, s), line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens
