"""Recursive-descent parser for cct scripts.

An identifier is a name if a declaration precedes it and an atom otherwise,
in expression and literal positions alike.  Using a declared name inside a
literal, or declaring a name already used as an atom, is a parse error.
"""

from __future__ import annotations

from ..values import Fun, Pair
from .errors import ParseError
from .lexer import EXPR_KEYWORDS, STMT_KEYWORDS, Token, tokenize
from .syntax import (
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

_EXPR_START_KW = frozenset(UNARY_OPS) | frozenset(CALL_OPS)
_VALUE_START = ("int", "ident")


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.declared: dict = {}
        self.atoms: set = set()
        self.depth = 0

    # -- token helpers ---------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.pos + k, len(self.tokens) - 1)]

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("op", "kw") and t.text == text

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "eof":
            self.pos += 1
        return t

    def error(self, message, expected=(), tok=None):
        t = tok or self.tok
        return ParseError(message, t.line, t.col, t.text, expected)

    def unexpected(self, expected):
        return self.error(f"unexpected {self.tok.describe()}", expected)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.unexpected([repr(text)])
        return self.advance()

    def expect_ident(self) -> Token:
        if self.tok.kind != "ident":
            raise self.unexpected(["identifier"])
        return self.advance()

    # -- script ------------------------------------------------------------------
    def parse_script(self) -> Script:
        stmts = []
        while self.tok.kind != "eof":
            stmts.append(self.statement())
        return Script(tuple(stmts))

    def statement(self):
        t = self.tok
        pos = {"line": t.line, "col": t.col}
        if t.kind != "kw" or t.text not in STMT_KEYWORDS:
            raise self.unexpected(sorted(repr(k) for k in STMT_KEYWORDS))
        kw = self.advance().text
        if kw in ("set", "rel", "fun", "fam"):
            name_tok = self.expect_ident()
            name = name_tok.text
            self.expect("=")
            if kw in ("set", "rel"):
                value = self.set_literal(pairs_only=(kw == "rel"))
            else:
                value = self.map_literal()
            self.declare(name, name_tok)
            stmt = {"set": SetDecl, "rel": RelDecl, "fun": FunDecl, "fam": FamDecl}[kw](
                name, value, **pos
            )
        elif kw == "eval":
            stmt = Eval(self.expr(), **pos)
        elif kw == "check":
            law = self.law_id()
            if law is not None:
                stmt = CheckLaw(law, **pos)
            else:
                left = self.expr()
                self.expect("=")
                stmt = CheckEq(left, self.expr(), **pos)
        else:
            left = self.expr()
            self.expect("<=")
            stmt = Assert(left, self.expr(), **pos)
        self.expect(";")
        return stmt

    def law_id(self):
        t = self.tok
        if t.kind != "ident":
            return None
        dotted = "." in t.text or "-" in t.text
        if dotted or (self.peek().text == ";" and t.text not in self.declared):
            self.advance()
            return t.text
        return None

    def declare(self, name: str, tok: Token):
        if "." in name or "-" in name:
            raise self.error(f"invalid name {name!r}", tok=tok)
        if name in self.declared:
            raise self.error(f"name {name!r} is already declared", tok=tok)
        if name in self.atoms:
            raise self.error(f"name {name!r} collides with an atom used earlier", tok=tok)
        self.declared[name] = True

    # -- literals ------------------------------------------------------------------
    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.advance()
            return int(t.text)
        if t.kind == "ident":
            if "." in t.text or "-" in t.text:
                raise self.error(f"invalid atom {t.text!r}")
            if t.text in self.declared:
                raise self.error(f"identifier {t.text!r} is a declared name, not an atom")
            self.advance()
            self.atoms.add(t.text)
            return t.text
        raise self.unexpected(["integer", "identifier", "'('", "'{'"])

    def value(self):
        if self.at("("):
            return self.pair_literal()
        if self.at("{"):
            return self.brace_literal()
        return self.atom()

    def _after_comma(self, comma: Token, closers):
        if self.tok.kind == "op" and self.tok.text in closers:
            raise self.error("dangling ','", tok=comma)

    def pair_literal(self) -> Pair:
        self.expect("(")
        a = self.value()
        comma = self.expect(",")
        self._after_comma(comma, (")",))
        b = self.value()
        self.expect(")")
        return Pair(a, b)

    def brace_literal(self):
        """``{}`` set, ``{->}`` empty function, ``{v, ...}`` set, ``{k -> v, ...}`` function."""
        self.expect("{")
        if self.at("}"):
            self.advance()
            return frozenset()
        if self.at("->"):
            self.advance()
            self.expect("}")
            return Fun()
        first = self.value()
        if self.at("->"):
            self.advance()
            table = {first: self.value()}
            while self.at(","):
                comma = self.advance()
                self._after_comma(comma, ("}",))
                ktok = self.tok
                k = self.value()
                self.expect("->")
                v = self.value()
                if k in table and table[k] != v:
                    raise self.error(f"key {k!r} mapped twice", tok=ktok)
                table[k] = v
            self.expect("}")
            return Fun(table)
        elems = [first]
        while self.at(","):
            comma = self.advance()
            self._after_comma(comma, ("}",))
            elems.append(self.value())
        self.expect("}")
        return frozenset(elems)

    def set_literal(self, pairs_only=False) -> frozenset:
        t = self.tok
        if not self.at("{"):
            raise self.unexpected(["'{'"])
        v = self.brace_literal()
        if not isinstance(v, frozenset):
            raise self.error("expected a set literal", tok=t)
        if pairs_only:
            for e in v:
                if not isinstance(e, Pair):
                    raise self.error("relation elements must be pairs", tok=t)
        return v

    def map_literal(self) -> Fun:
        t = self.tok
        if not self.at("{"):
            raise self.unexpected(["'{'"])
        v = self.brace_literal()
        if v == frozenset():
            return Fun()
        if not isinstance(v, Fun):
            raise self.error("expected a map literal {k -> v, ...}", tok=t)
        return v

    # -- expressions -----------------------------------------------------------------
    def expr(self):
        left = self.inter()
        while self.at("|"):
            self.advance()
            left = Binary("|", left, self.inter())
        return left

    def inter(self):
        left = self.comp()
        while self.at("&"):
            self.advance()
            left = Binary("&", left, self.comp())
        return left

    def _semicolon_composes(self) -> bool:
        if not self.at(";"):
            return False
        if self.depth > 0:
            return True
        nxt = self.peek()
        if nxt.kind in _VALUE_START:
            return not ("." in nxt.text or "-" in nxt.text)
        if nxt.kind == "kw":
            return nxt.text in _EXPR_START_KW and nxt.text not in STMT_KEYWORDS
        return nxt.kind == "op" and nxt.text in ("(", "{")

    def comp(self):
        left = self.prefix()
        while True:
            if self.at("o"):
                self.advance()
                left = Binary("o", left, self.prefix())
            elif self._semicolon_composes():
                self.advance()
                left = Binary("o", self.prefix(), left)
            else:
                return left

    def prefix(self):
        t = self.tok
        if t.kind == "kw" and t.text in UNARY_OPS:
            self.advance()
            return Unary(t.text, self.prefix())
        return self.postfix()

    def postfix(self):
        e = self.primary()
        while self.at("~"):
            self.advance()
            e = Converse(e)
        return e

    def primary(self):
        t = self.tok
        if t.kind == "ident":
            if t.text in self.declared:
                self.advance()
                return Name(t.text)
            return Lit(self.atom())
        if t.kind == "int":
            self.advance()
            return Lit(int(t.text))
        if self.at("{"):
            return Lit(self.brace_literal())
        if self.at("("):
            return self.paren()
        if t.kind == "kw" and t.text in CALL_OPS:
            return self.call()
        raise self.unexpected(
            ["identifier", "integer", "'('", "'{'"]
            + sorted(repr(k) for k in EXPR_KEYWORDS if k in _EXPR_START_KW)
        )

    def _paren_is_pair(self) -> bool:
        """True when the parenthesis at the cursor holds a top-level comma."""
        level = 0
        for t in self.tokens[self.pos:]:
            if t.kind == "op" and t.text in ("(", "{"):
                level += 1
            elif t.kind == "op" and t.text in (")", "}"):
                level -= 1
                if level == 0:
                    return False
            elif level == 1 and t.kind == "op" and t.text == ",":
                return True
            elif t.kind == "eof" or (level == 1 and t.text == ";"):
                return False
        return False

    def paren(self):
        if self._paren_is_pair():
            return Lit(self.pair_literal())
        self.expect("(")
        self.depth += 1
        e = self.expr()
        self.expect(")")
        self.depth -= 1
        return e

    def call(self):
        op = self.advance().text
        shape = CALL_OPS[op]
        self.expect("(")
        self.depth += 1
        args = []
        for n, kind in enumerate(shape):
            if n:
                comma = self.expect(",")
                self._after_comma(comma, (")",))
            args.append(self.expr() if kind == "e" else Lit(self.value()))
        self.expect(")")
        self.depth -= 1
        return Call(op, tuple(args))


def parse(text: str) -> Script:
    return Parser(text).parse_script()


def parse_value(text: str):
    """Parse a standalone value literal, such as a serialized counterexample."""
    p = Parser(text)
    v = p.value()
    if p.tok.kind != "eof":
        raise p.unexpected(["end of input"])
    return v
