"""Polynomial text syntax: parser and canonical printer.

Grammar: integer literals, declared variable names, ``+ - * ^ ( )``.
Multiplication must be written explicitly (``x*y``, never ``xy``), ``^``
takes a non-negative integer exponent, and a single leading sign is allowed.
Whitespace is insignificant.  The printer emits terms in descending ring
order with canonical coefficients, and printing then re-parsing is the
identity.
"""

from __future__ import annotations

from .arith import Polynomial, Ring


class ParseError(ValueError):
    """Syntax or semantic error, carrying a 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


_OPS = frozenset("+-*^()")


def _tokenize(text: str, line: int, start_col: int):
    """Yield (kind, value, column) with kind in INT, NAME, OP, END."""
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        col = start_col + i
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield ("INT", int(text[i:j]), col)
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            yield ("NAME", text[i:j], col)
            i = j
        elif ch in _OPS:
            yield ("OP", ch, col)
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    yield ("END", None, start_col + n)


class _ExprParser:
    def __init__(self, ring: Ring, text: str, line: int = 1, column: int = 1):
        self.ring = ring
        self.line = line
        self.tokens = list(_tokenize(text, line, column))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.line, tok[2])

    def parse(self) -> Polynomial:
        poly = self.expr()
        kind, val, _ = self.peek()
        if kind != "END":
            self.fail(f"unexpected {val!r} after expression")
        return poly

    def expr(self) -> Polynomial:
        kind, val, _ = self.peek()
        negate = False
        if kind == "OP" and val in "+-":
            self.advance()
            negate = val == "-"
        poly = self.term()
        if negate:
            poly = -poly
        while True:
            kind, val, _ = self.peek()
            if kind == "OP" and val in "+-":
                self.advance()
                rhs = self.term()
                poly = poly - rhs if val == "-" else poly + rhs
            else:
                return poly

    def term(self) -> Polynomial:
        poly = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "OP" and val == "*":
                self.advance()
                poly = poly * self.factor()
            elif kind in ("INT", "NAME") or (kind == "OP" and val == "("):
                self.fail("missing '*' (implicit multiplication is not allowed)")
            else:
                return poly

    def factor(self) -> Polynomial:
        base = self.base()
        kind, val, _ = self.peek()
        if kind == "OP" and val == "^":
            self.advance()
            kind, exp, _ = self.peek()
            if kind != "INT":
                self.fail("exponent must be an integer literal")
            self.advance()
            return base**exp
        return base

    def base(self) -> Polynomial:
        kind, val, tok_col = self.advance()
        if kind == "INT":
            return self.ring.constant(val)
        if kind == "NAME":
            if val not in self.ring.context.names:
                raise ParseError(f"unknown variable {val!r}", self.line, tok_col)
            return self.ring.var(val)
        if kind == "OP" and val == "(":
            poly = self.expr()
            kind, val, _ = self.peek()
            if not (kind == "OP" and val == ")"):
                self.fail("expected ')'")
            self.advance()
            return poly
        raise ParseError(
            "expected a number, variable or '('", self.line, tok_col)


def parse_polynomial(ring: Ring, text: str, line: int = 1,
                     column: int = 1) -> Polynomial:
    """Parse one polynomial expression in the given ring."""
    return _ExprParser(ring, text, line, column).parse()


def format_polynomial(poly: Polynomial) -> str:
    """Canonical text form: descending terms, coefficients in [1, p)."""
    if not poly.terms:
        return "0"
    names = poly.ring.context.names
    parts = []
    for exps, c in poly.terms:
        factors = []
        if c != 1 or not any(exps):
            factors.append(str(c))
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts)
