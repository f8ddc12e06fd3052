"""Parser for nil Hecke element expressions.

Grammar, in decreasing precedence:

    atom   := NUM ('/' NUM)? | NAME | 'sqrt5' | 'd' '[' NAME ']'
              | 'w' '[' NAME ']' | '(' expr ')'
    power  := atom ('^' NUM)?
    signed := '-' signed | power
    term   := signed ('*' signed)*
    expr   := term (('+' | '-') term)*

NAME is a declared ring variable; `d[s]` and `w[s]` are the nil Coxeter
generator and the group generator for s.  `sqrt5` is the quadratic
irrationality, legal only over that field.  All values are nil Hecke
elements; a bare polynomial parses to its multiplication operator.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .coxeter import CoxeterSystem
from .nilhecke import NilHeckeElement, gen_d, gen_w, gen_weight
from .poly import Polynomial
from .scalars import quad

__all__ = ["ExprError", "parse_element", "parse_polynomial"]


class ExprError(Exception):
    """A parse error, carrying the 1-based column where it happened."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


_TOKEN = re.compile(r"\d+|[A-Za-z][A-Za-z0-9_]*|[][()+\-*/^]")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExprError(f"unexpected character {text[pos]!r}", pos + 1)
        tokens.append((m.group(), pos + 1))
        pos = m.end()
    tokens.append(("", n + 1))
    return tokens


class _Parser:
    def __init__(self, system: CoxeterSystem, text: str):
        self.system = system
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, want: str):
        tok, col = self.next()
        if tok != want:
            shown = repr(tok) if tok else "end of input"
            raise ExprError(f"expected {want!r}, found {shown}", col)
        return col

    def parse(self) -> NilHeckeElement:
        value = self.expr()
        tok, col = self.next()
        if tok:
            raise ExprError(f"unexpected {tok!r} after the expression", col)
        return value

    def expr(self) -> NilHeckeElement:
        value = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> NilHeckeElement:
        value = self.signed()
        while self.peek() == "*":
            self.next()
            value = value * self.signed()
        return value

    def signed(self) -> NilHeckeElement:
        if self.peek() == "-":
            self.next()
            return -self.signed()
        return self.power()

    def power(self) -> NilHeckeElement:
        value = self.atom()
        if self.peek() == "^":
            self.next()
            tok, col = self.next()
            if not tok.isdigit():
                raise ExprError("exponent must be a nonnegative integer",
                                col)
            value = value ** int(tok)
        return value

    def atom(self) -> NilHeckeElement:
        system = self.system
        tok, col = self.next()
        if not tok:
            raise ExprError("unexpected end of input", col)
        if tok.isdigit():
            num = int(tok)
            if self.peek() == "/":
                self.next()
                den, dcol = self.next()
                if not den.isdigit() or int(den) == 0:
                    raise ExprError("denominator must be a positive "
                                    "integer", dcol)
                return gen_weight(system, Fraction(num, int(den)))
            return gen_weight(system, Fraction(num))
        if tok == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok in ("d", "w") and self.peek() == "[":
            self.next()
            name, ncol = self.next()
            if name not in system.generators:
                raise ExprError(f"unknown generator {name!r}; have "
                                f"{', '.join(system.generators)}", ncol)
            self.expect("]")
            return (gen_d if tok == "d" else gen_w)(system, name)
        if tok == "sqrt5":
            if system.ring.field.d != 5:
                raise ExprError("sqrt5 needs the quadratic:5 field", col)
            return gen_weight(system, quad(0, 1, 5))
        if re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", tok):
            if tok in system.ring.variables:
                return gen_weight(system, system.ring.var(tok))
            raise ExprError(f"unknown name {tok!r}; variables are "
                            f"{', '.join(system.ring.variables)}", col)
        raise ExprError(f"unexpected {tok!r}", col)


def parse_element(system: CoxeterSystem, text: str) -> NilHeckeElement:
    """Parse an expression to a nil Hecke element."""
    if not text.strip():
        raise ExprError("empty expression", 1)
    return _Parser(system, text).parse()


def parse_polynomial(system: CoxeterSystem, text: str) -> Polynomial:
    """Parse an expression that must be a plain polynomial."""
    h = parse_element(system, text)
    if not h.support:
        return system.ring.zero
    if set(h.support) == {system.one}:
        return h.support[system.one]
    raise ExprError("expected a polynomial, got an operator with "
                    "nontrivial support", 1)
