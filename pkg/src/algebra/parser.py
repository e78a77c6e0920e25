import re
from dataclasses import dataclass
from typing import List, Optional

from .poly import Polynomial
from .ring import RingSpec
from ..utils.errors import (
    ExponentOverflowError,
    PolynomialParseError,
    UnknownVariableError,
)
from ..utils.limits import get_limits


TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = TOKEN_RE.match(text, pos)
        if match.group(1) is not None:
            tokens.append(Token("int", match.group(1), match.start(1)))
        elif match.group(2) is not None:
            tokens.append(Token("name", match.group(2), match.start(2)))
        elif match.group(3) is not None:
            char = match.group(3)
            if char not in "+-*^()":
                raise PolynomialParseError(f"unexpected character {char!r}", match.start(3))
            tokens.append(Token("op", char, match.start(3)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class PolynomialParser:
    """Recursive-descent parser for polynomial text.

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"
    """

    def __init__(self, ring: RingSpec, max_exponent: Optional[int] = None):
        self.ring = ring
        self.max_exponent = max_exponent or get_limits().max_exponent
        self.tokens: List[Token] = []
        self.index = 0

    def parse(self, text: str) -> Polynomial:
        self.tokens = tokenize(text)
        self.index = 0
        if self._peek().kind == "end":
            raise PolynomialParseError("empty polynomial", 0)
        result = self._expr()
        token = self._peek()
        if token.kind != "end":
            raise PolynomialParseError(f"unexpected {token.text!r}", token.position)
        return result

    def _peek(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _is_op(self, chars: str) -> bool:
        token = self._peek()
        return token.kind == "op" and token.text in chars

    def _expr(self) -> Polynomial:
        result = self._term()
        while self._is_op("+-"):
            op = self._advance().text
            right = self._term()
            result = result + right if op == "+" else result - right
        return result

    def _term(self) -> Polynomial:
        result = self._unary()
        while self._is_op("*"):
            self._advance()
            result = result * self._unary()
        return result

    def _unary(self) -> Polynomial:
        if self._is_op("+-"):
            op = self._advance().text
            operand = self._unary()
            return operand if op == "+" else -operand
        return self._power()

    def _power(self) -> Polynomial:
        base = self._atom()
        if not self._is_op("^"):
            return base
        self._advance()
        token = self._advance()
        if token.kind != "int":
            raise PolynomialParseError("exponent must be a nonnegative integer", token.position)
        exponent = int(token.text)
        if exponent > self.max_exponent:
            raise ExponentOverflowError(
                f"exponent {exponent} at position {token.position} exceeds "
                f"bound {self.max_exponent}"
            )
        return base ** exponent

    def _atom(self) -> Polynomial:
        token = self._advance()
        if token.kind == "int":
            return Polynomial.constant(self.ring, int(token.text))
        if token.kind == "name":
            if token.text not in self.ring.variables:
                raise UnknownVariableError(
                    f"unknown variable {token.text!r} at position {token.position}"
                )
            return Polynomial.variable(self.ring, token.text)
        if token.kind == "op" and token.text == "(":
            inner = self._expr()
            closing = self._advance()
            if closing.kind != "op" or closing.text != ")":
                raise PolynomialParseError("expected ')'", closing.position)
            return inner
        if token.kind == "end":
            raise PolynomialParseError("unexpected end of input", token.position)
        raise PolynomialParseError(f"unexpected {token.text!r}", token.position)


def parse_polynomial(text: str, ring: RingSpec) -> Polynomial:
    """Parse polynomial text into canonical form over the ring."""
    return PolynomialParser(ring).parse(text)
