"""Small arithmetic expression parser shared by tower building and the CLI.

Grammar (noncommutative * binds left; ^ only takes integer literals):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-'* atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

The parser is value-agnostic: names are resolved through a lookup
callable and integer literals through a from_int callable, so the same
grammar serves field elements and Ore polynomials.
"""

from __future__ import annotations

from .errors import SessionSyntaxError

_OPS = "+-*/^()"


def tokenize(text, line=1):
    """Yield (kind, value, line, col) tuples; kind in INT/NAME/OP/EOF."""
    tokens = []
    i = 0
    col = 1
    cur_line = line
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            cur_line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), cur_line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], cur_line, col))
            col += j - i
            i = j
            continue
        if ch in _OPS:
            tokens.append(("OP", ch, cur_line, col))
            i += 1
            col += 1
            continue
        raise SessionSyntaxError(cur_line, col, f"valid token (got {ch!r})")
    tokens.append(("EOF", None, cur_line, col))
    return tokens


class _Parser:
    def __init__(self, tokens, lookup, from_int):
        self.tokens = tokens
        self.pos = 0
        self.lookup = lookup
        self.from_int = from_int

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        kind, value, line, col = self.peek()
        got = "end of input" if kind == "EOF" else repr(value)
        raise SessionSyntaxError(line, col, f"{expected} (got {got})")

    def expect_op(self, op):
        kind, value, line, col = self.peek()
        if kind != "OP" or value != op:
            self.fail(f"'{op}'")
        return self.advance()

    def expr(self):
        value = self.term()
        while True:
            kind, op, _, _ = self.peek()
            if kind == "OP" and op in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if op == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, op, _, _ = self.peek()
            if kind == "OP" and op in "*/":
                self.advance()
                rhs = self.factor()
                value = value * rhs if op == "*" else value / rhs
            else:
                return value

    def factor(self):
        negate = False
        while True:
            kind, op, _, _ = self.peek()
            if kind == "OP" and op == "-":
                self.advance()
                negate = not negate
            else:
                break
        value = self.atom()
        kind, op, _, _ = self.peek()
        if kind == "OP" and op == "^":
            self.advance()
            kind, exp, line, col = self.peek()
            if kind != "INT":
                self.fail("integer exponent")
            self.advance()
            value = value ** exp
        return -value if negate else value

    def atom(self):
        kind, value, line, col = self.peek()
        if kind == "INT":
            self.advance()
            return self.from_int(value)
        if kind == "NAME":
            self.advance()
            return self.lookup(value, line, col)
        if kind == "OP" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        self.fail("number, name or '('")


def parse_expr(text, lookup, from_int, line=1):
    """Parse text into a value built from lookup/from_int results."""
    parser = _Parser(tokenize(text, line=line), lookup, from_int)
    value = parser.expr()
    kind, _, l, c = parser.peek()
    if kind != "EOF":
        parser.fail("end of expression")
    return value
