"""A tiny expression language for frequency-dependent fractional orders.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := number | 'w' | '(' expr ')' | func '(' expr ')' | '-' factor
    func   := 'abs' | 'sin' | 'cos' | 'exp'

``w`` is the angular frequency in rad/s. There is no implicit multiplication,
so ``1.89abs(sin(w))`` is rejected; write ``1.89*abs(sin(w))``.

>>> e = parse("1.10 + 1.89*abs(sin(w))")
>>> e(0.0)
1.1
>>> to_string(e)
'(1.1 + (1.89 * abs(sin(w))))'
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import NonFiniteResult, ProfileSyntaxError, UnknownIdentifier

VARIABLE = "w"

FUNCTIONS = {
    "abs": np.abs,
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
}

_BINARY = {
    "+": np.add,
    "-": np.subtract,
    "*": np.multiply,
    "/": np.divide,
}


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Unary:
    op: str  # 'neg' or a FUNCTIONS key
    operand: "Node"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Node"
    right: "Node"


Node = Union[Const, Var, Unary, Binary]


@dataclass(frozen=True)
class ProfileExpr:
    """A parsed order profile; call it with omega to evaluate."""

    root: Node
    source: str = ""

    def __call__(self, omega):
        return evaluate(self, omega)

    def __str__(self):
        return to_string(self)


# ---------------------------------------------------------------------------
# Lexing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # 'number', 'name', 'op', 'end'
    text: str
    pos: int


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ProfileSyntaxError(
                f"unexpected character {text[pos]!r}", pos,
                ("number", VARIABLE, "function", "operator", "parenthesis"),
            )
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_FACTOR_START = ("number", VARIABLE, "(", "-", *FUNCTIONS)


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        tok = self.tok
        if tok.kind != "op" or tok.text != text:
            raise ProfileSyntaxError(
                f"unexpected {_describe(tok)}", tok.pos, (repr(text),)
            )
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            raise ProfileSyntaxError(
                f"unexpected {_describe(self.tok)}", self.tok.pos,
                ("'+'", "'-'", "'*'", "'/'", "end of input"),
            )
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            node = Binary(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance().text
            node = Binary(op, node, self.factor())
        return node

    def factor(self):
        tok = self.tok
        if tok.kind == "number":
            self.advance()
            value = float(tok.text)
            if not math.isfinite(value):
                raise ProfileSyntaxError(f"literal {tok.text} overflows", tok.pos)
            return Const(value)
        if tok.kind == "name":
            self.advance()
            if tok.text == VARIABLE:
                return Var()
            if tok.text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Unary(tok.text, arg)
            raise UnknownIdentifier(tok.text, tok.pos)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Unary("neg", self.factor())
        raise ProfileSyntaxError(
            f"unexpected {_describe(tok)}", tok.pos, _FACTOR_START
        )


def _describe(tok):
    return "end of input" if tok.kind == "end" else repr(tok.text)


def parse(text: str) -> ProfileExpr:
    """Parse ``text`` into an immutable expression tree."""
    if not text or not text.strip():
        raise ProfileSyntaxError("empty expression", 0, _FACTOR_START)
    return ProfileExpr(_Parser(text).parse(), text)


# ---------------------------------------------------------------------------
# Evaluation and printing
# ---------------------------------------------------------------------------

def _eval(node, w):
    if isinstance(node, Const):
        return np.full_like(w, node.value)
    if isinstance(node, Var):
        return w
    if isinstance(node, Unary):
        x = _eval(node.operand, w)
        return np.negative(x) if node.op == "neg" else FUNCTIONS[node.op](x)
    return _BINARY[node.op](_eval(node.left, w), _eval(node.right, w))


def evaluate(expr: ProfileExpr, omega):
    """Evaluate ``expr`` at ``omega`` (scalar or array).

    Raises NonFiniteResult if any value is inf or nan.
    """
    w = np.asarray(omega, dtype=float)
    with np.errstate(all="ignore"):
        out = _eval(expr.root, w)
    if not np.all(np.isfinite(out)):
        raise NonFiniteResult(
            f"{to_string(expr)} is not finite at omega={omega!r}"
        )
    return out.item() if out.ndim == 0 else out


def _print(node):
    if isinstance(node, Const):
        return repr(node.value)
    if isinstance(node, Var):
        return VARIABLE
    if isinstance(node, Unary):
        if node.op == "neg":
            return f"(-{_print(node.operand)})"
        return f"{node.op}({_print(node.operand)})"
    return f"({_print(node.left)} {node.op} {_print(node.right)})"


def to_string(expr) -> str:
    """Canonical, fully parenthesised text; ``parse(to_string(e))`` is equivalent to ``e``."""
    root = expr.root if isinstance(expr, ProfileExpr) else expr
    return _print(root)
