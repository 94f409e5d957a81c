from __future__ import annotations


class DslError(Exception):
    """A diagnostic tied to a 1-based source position."""

    kind = "error"

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "message": self.message, "line": self.line, "col": self.col}


class LexError(DslError):
    kind = "LexError"


class ParseError(DslError):
    kind = "ParseError"

    def __init__(self, message, line=0, col=0, token=None, expected=()):
        self.token = token
        self.expected = tuple(sorted(expected))
        if expected:
            message = f"{message} (expected one of: {', '.join(self.expected)})"
        super().__init__(message, line, col)

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["token"] = self.token
        d["expected"] = list(self.expected)
        return d


class EvalError(DslError):
    """Raised while evaluating a statement; halts the script."""

    kind = "EvalError"


class UnboundName(EvalError):
    kind = "NameError"


class DslTypeError(EvalError):
    kind = "TypeError"


class KernelFailure(EvalError):
    """A kernel exception surfaced at the statement that triggered it."""

    def __init__(self, cause, line=0, col=0):
        self.cause = cause
        self.kind = type(cause).__name__
        super().__init__(str(cause), line, col)


class AssertionFailed(EvalError):
    kind = "AssertionFailed"

    def __init__(self, message, witness, line=0, col=0):
        self.witness = witness
        super().__init__(message, line, col)
