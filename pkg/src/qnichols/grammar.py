"""Parser for the element expression grammar used by the CLI, relation files
and the presentation catalog.

Grammar (LL(1), recursive descent):

    expr    := term (('+' | '-') term)*
    term    := power (('*' | '/') power | power)*      # juxtaposition = '*'
    power   := unary ('^' ('-')? INT)?
    unary   := '-' unary | atom
    atom    := GEN                          # x1, x2, ...
             | 'xw' '(' INT (',' INT)* ')'  # iterated bracket x_{i1...ik}
             | 'xint' '(' INT ',' INT ')'   # interval x_{(i j)}
             | 'ad' '(' INT ',' expr ')'    # adjoint action of a generator
             | 'q' '(' INT ',' INT ')'      # braiding entry q_ij
             | 'z'                          # primitive root of the ambient order
             | INT
             | '(' expr ')'
             | '[' expr ',' expr ']'        # braided commutator

Division requires a scalar divisor (degree-0 element); negative powers are
only defined for scalars.  Errors carry the offset into the source text.
"""

from __future__ import annotations

import re

from .braiding import BraidingMatrix
from .cyclo import CycScalar
from .freealg import (FreeElement, adjoint, braided_commutator, generator,
                      interval_bracket, iterated_bracket, one)

__all__ = ["parse_element", "GrammarError"]


class GrammarError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.pos = pos
        self.line = line
        self.col = col


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<gen>x(?P<genidx>\d+))
  | (?P<name>xw|xint|ad|q|z)
  | (?P<int>\d+)
  | (?P<sym>[+\-*/^()\[\],])
""", re.VERBOSE)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise GrammarError(f"unexpected character {text[pos]!r}", pos, text)
        if m.lastgroup != "ws":
            if m.group("gen"):
                tokens.append(("gen", int(m.group("genidx")), pos))
            elif m.group("name"):
                tokens.append(("name", m.group("name"), pos))
            elif m.group("int"):
                tokens.append(("int", int(m.group("int")), pos))
            else:
                tokens.append(("sym", m.group("sym"), pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, matrix: BraidingMatrix):
        self.text = text
        self.matrix = matrix
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, sym):
        kind, val, pos = self.next()
        if kind != "sym" or val != sym:
            raise GrammarError(f"expected {sym!r}", pos, self.text)

    def expect_int(self) -> int:
        kind, val, pos = self.next()
        if kind != "int":
            raise GrammarError("expected an integer", pos, self.text)
        return val

    def fail(self, message):
        raise GrammarError(message, self.peek()[2], self.text)

    # ---- grammar ----------------------------------------------------------

    def parse(self) -> FreeElement:
        el = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise GrammarError(f"trailing input {val!r}", pos, self.text)
        return el

    def expr(self) -> FreeElement:
        el = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "+-":
                self.next()
                rhs = self.term()
                el = el + rhs if val == "+" else el - rhs
            else:
                return el

    _ATOM_START = {("sym", "("), ("sym", "[")}

    def _starts_atom(self) -> bool:
        kind, val, _ = self.peek()
        return (kind in ("gen", "name", "int")
                or (kind, val) in self._ATOM_START)

    def term(self) -> FreeElement:
        el = self.power()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "*/":
                self.next()
                rhs = self.power()
                if val == "*":
                    el = el * rhs
                else:
                    el = el * self._scalar_inverse(rhs)
            elif self._starts_atom():
                el = el * self.power()
            else:
                return el

    def _scalar_inverse(self, el: FreeElement) -> CycScalar:
        try:
            c = el.scalar_part()
        except ValueError:
            self.fail("division is only defined by scalar expressions")
        if c.is_zero():
            self.fail("division by zero")
        return c.inverse()

    def power(self) -> FreeElement:
        el = self.unary()
        kind, val, _ = self.peek()
        if kind == "sym" and val == "^":
            self.next()
            neg = False
            kind, val, _ = self.peek()
            if kind == "sym" and val == "-":
                self.next()
                neg = True
            k = self.expect_int()
            if neg:
                try:
                    c = el.scalar_part()
                except ValueError:
                    c = None
                if c is None or c.is_zero():
                    self.fail("negative power of a non-invertible element")
                return one(self.matrix).scale(c.inverse() ** k)
            return el ** k
        return el

    def unary(self) -> FreeElement:
        kind, val, _ = self.peek()
        if kind == "sym" and val == "-":
            self.next()
            return -self.unary()
        return self.atom()

    def atom(self) -> FreeElement:
        kind, val, pos = self.next()
        m = self.matrix
        if kind == "gen":
            if not 1 <= val <= m.theta:
                raise GrammarError(f"generator x{val} out of range 1..{m.theta}",
                                   pos, self.text)
            return generator(m, val)
        if kind == "int":
            return one(m).scale(val)
        if kind == "name":
            if val == "z":
                return one(m).scale(m.zeta_power(1))
            if val == "xw":
                self.expect_sym("(")
                letters = [self.expect_int()]
                while self.peek()[:2] == ("sym", ","):
                    self.next()
                    letters.append(self.expect_int())
                self.expect_sym(")")
                self._check_letters(letters, pos)
                return iterated_bracket(m, letters)
            if val == "xint":
                self.expect_sym("(")
                i = self.expect_int()
                self.expect_sym(",")
                j = self.expect_int()
                self.expect_sym(")")
                self._check_letters([i, j], pos)
                if i > j:
                    raise GrammarError("xint needs i <= j", pos, self.text)
                return interval_bracket(m, i, j)
            if val == "ad":
                self.expect_sym("(")
                i = self.expect_int()
                self.expect_sym(",")
                inner = self.expr()
                self.expect_sym(")")
                self._check_letters([i], pos)
                return adjoint(m, i, inner)
            if val == "q":
                self.expect_sym("(")
                i = self.expect_int()
                self.expect_sym(",")
                j = self.expect_int()
                self.expect_sym(")")
                self._check_letters([i, j], pos)
                return one(m).scale(m.entry(i - 1, j - 1))
        if kind == "sym" and val == "(":
            el = self.expr()
            self.expect_sym(")")
            return el
        if kind == "sym" and val == "[":
            a = self.expr()
            self.expect_sym(",")
            b = self.expr()
            self.expect_sym("]")
            return braided_commutator(a, b)
        raise GrammarError(f"unexpected token {val!r}", pos, self.text)

    def _check_letters(self, letters, pos):
        for l in letters:
            if not 1 <= l <= self.matrix.theta:
                raise GrammarError(
                    f"generator index {l} out of range 1..{self.matrix.theta}",
                    pos, self.text)


def parse_element(text: str, matrix: BraidingMatrix) -> FreeElement:
    """Parse an element expression over the given braiding matrix."""
    return _Parser(text, matrix).parse()
