# src/chuk_closure_lab/terms/parser.py
"""
Parser for the term syntax.

    term     := factor*
    factor   := atom ('^' exponent)*
    atom     := LETTER | '(' term ')'
    exponent := 'w' | INT | '(' 'w' ('+' | '-') INT ')' | '(' INT ')'

Example: (a^w b)^(w-1). Whitespace is ignored.
"""

from typing import List

from ..errors import ExponentRangeError, TermSyntaxError
from .exponent import Exponent
from .kappa import KappaTerm, RawTerm, canonicalize, concat, power


class _TermParser:
    """Recursive-descent parser over a whitespace-free string"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise TermSyntaxError(f"expected {char!r}, found {found!r}", self.pos)
        self.pos += 1

    def parse(self) -> KappaTerm:
        result = self.term()
        if self.pos != len(self.text):
            raise TermSyntaxError(f"unexpected {self.peek()!r}", self.pos)
        return canonicalize(result)

    def term(self) -> KappaTerm:
        parts: List[RawTerm] = []
        while self.peek() and self.peek() not in ")^":
            parts.append(self.factor())
        return concat(*parts)

    def factor(self) -> KappaTerm:
        start = self.pos
        char = self.peek()
        if char == "(":
            self.pos += 1
            inner = self.term()
            self.expect(")")
            if inner.is_empty:
                raise TermSyntaxError("empty parentheses", start)
            result = inner
        elif char.isalpha():
            self.pos += 1
            result = concat(char)
        else:
            raise TermSyntaxError(f"unexpected {char!r}", self.pos)
        while self.peek() == "^":
            self.pos += 1
            result = power(result, self.exponent())
        return result

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise TermSyntaxError("expected an integer", self.pos)
        return int(self.text[start : self.pos])

    def exponent(self) -> Exponent:
        start = self.pos
        char = self.peek()
        if char == "w":
            self.pos += 1
            return Exponent.omega_plus(0)
        if char.isdigit():
            k = self.integer()
            if k < 1:
                raise TermSyntaxError("finite exponents must be positive", start)
            return Exponent.finite(k)
        if char == "(":
            self.pos += 1
            if self.peek() == "w":
                self.pos += 1
                sign = self.peek()
                if sign == ")":
                    self.pos += 1
                    return Exponent.omega_plus(0)
                if sign not in "+-" or not sign:
                    raise TermSyntaxError("expected '+' or '-' after w", self.pos)
                self.pos += 1
                k = self.integer()
                self.expect(")")
                try:
                    return Exponent.omega_plus(k if sign == "+" else -k)
                except ExponentRangeError as e:
                    raise TermSyntaxError(str(e), start) from e
            k = self.integer()
            self.expect(")")
            if k < 1:
                raise TermSyntaxError("finite exponents must be positive", start)
            return Exponent.finite(k)
        raise TermSyntaxError("expected an exponent", self.pos)


def parse_term(text: str) -> KappaTerm:
    """Parse term syntax into a canonical term"""
    compact = "".join(text.split())
    if not compact:
        raise TermSyntaxError("empty term", 0)
    return _TermParser(compact).parse()


def parse_exponent(text: str) -> Exponent:
    """Parse an exponent: w, w+2, (w-1) or a positive integer"""
    compact = "".join(text.split())
    if not compact:
        raise TermSyntaxError("empty exponent", 0)
    if compact[0] == "w" and len(compact) > 1:
        compact = f"({compact})"
    parser = _TermParser(compact)
    result = parser.exponent()
    if parser.pos != len(compact):
        raise TermSyntaxError(f"unexpected {parser.peek()!r}", parser.pos)
    return result
