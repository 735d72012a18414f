# apps/reports/parsing.py
"""
Polynomial expressions as typed on the command line:

    expr := term (('+' | '-') term)*
    term := integer | integer? 'x' ('^' unsigned-integer)?

Whitespace is ignored and 'X' reads as 'x'. The first term takes no sign,
so '-x + 1' is rejected. Monomials of equal degree are summed.
"""

import re
from collections import defaultdict
from pathlib import Path

import attrs

from apps.exact_poly.models import IntPoly

from .exceptions import ParseError
from .tables import parse_table_line

_TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<sym>[-+^xX])|(?P<bad>\S))')


@attrs.frozen
class Token:
    kind: str
    value: str
    position: int


def tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        kind = match.lastgroup
        value = match.group(kind)
        if kind == 'bad':
            raise ParseError(match.start(kind), f"unexpected character {value!r}")
        tokens.append(Token(kind, value.lower() if kind == 'sym' else value, match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:

    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self, expected):
        token = self.peek()
        if token is None:
            raise ParseError(len(self.text), f"expected {expected}, found end of input")
        self.index += 1
        return token

    def parse(self):
        terms = defaultdict(int)
        sign = 1
        while True:
            degree, coefficient = self.term()
            terms[degree] += sign * coefficient
            token = self.peek()
            if token is None:
                break
            if token.value not in ('+', '-'):
                raise ParseError(token.position, f"expected '+' or '-', found {token.value!r}")
            self.index += 1
            sign = -1 if token.value == '-' else 1
        size = max(terms) + 1
        return IntPoly(terms.get(k, 0) for k in range(size))

    def term(self):
        token = self.take('a term')
        if token.kind == 'int':
            coefficient = int(token.value)
            following = self.peek()
            if following is None or following.value != 'x':
                return 0, coefficient
            self.index += 1
        elif token.value == 'x':
            coefficient = 1
        else:
            raise ParseError(token.position, f"expected a term, found {token.value!r}")

        following = self.peek()
        if following is None or following.value != '^':
            return 1, coefficient
        self.index += 1
        exponent = self.take('an exponent')
        if exponent.kind != 'int':
            raise ParseError(exponent.position, f"expected an exponent, found {exponent.value!r}")
        return int(exponent.value), coefficient


def parse_poly(text):
    return _Parser(text).parse()


def read_poly_argument(argument):
    """
    A command-line polynomial: an expression, or ``@path`` naming a file
    that holds one expression or one line of descending coefficients.
    """
    if not argument.startswith('@'):
        return parse_poly(argument)
    text = Path(argument[1:]).read_text().strip()
    if ',' in text:
        return parse_table_line(text, 1)
    return parse_poly(text)
