# src/chuk_closure_lab/languages/regex.py
"""
Regular expressions over X+.

Grammar (whitespace ignored):

    expr    := concat ('+' concat)*
    concat  := postfix+
    postfix := atom ('^+')*
    atom    := SYMBOL | '(' expr ')' | '0' | '∅'

'+' is union, juxtaposition is concatenation and '^+' is iteration. There is
no star and no empty word. A symbol is a letter, optionally followed by a
prime for its formal inverse (a'); in capital style an upper-case letter is
the inverse of its lower-case form.
"""

from typing import List, Literal, Optional, Sequence, Set, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..errors import RegexSyntaxError

InverseStyle = Literal["prime", "capital"]


class RegexEmpty(BaseModel):
    """The empty language"""

    model_config = ConfigDict(frozen=True)

    def to_text(self) -> str:
        return "0"


class RegexLetter(BaseModel):
    """A single symbol"""

    model_config = ConfigDict(frozen=True)

    symbol: str = Field(..., min_length=1)

    def to_text(self) -> str:
        return self.symbol


class RegexUnion(BaseModel):
    model_config = ConfigDict(frozen=True)

    left: "RegexAst"
    right: "RegexAst"

    def to_text(self) -> str:
        return f"{self.left.to_text()} + {self.right.to_text()}"


class RegexConcat(BaseModel):
    model_config = ConfigDict(frozen=True)

    left: "RegexAst"
    right: "RegexAst"

    def to_text(self) -> str:
        return f"{_wrap(self.left, RegexUnion)}{_wrap(self.right, RegexUnion)}"


class RegexPlus(BaseModel):
    """Iteration Y -> Y+"""

    model_config = ConfigDict(frozen=True)

    inner: "RegexAst"

    def to_text(self) -> str:
        inner = self.inner.to_text()
        if not isinstance(self.inner, RegexLetter):
            inner = f"({inner})"
        return f"{inner}^+"


RegexAst = Union[RegexEmpty, RegexLetter, RegexUnion, RegexConcat, RegexPlus]

RegexUnion.model_rebuild()
RegexConcat.model_rebuild()
RegexPlus.model_rebuild()


def _wrap(node: RegexAst, kind: type) -> str:
    text = node.to_text()
    return f"({text})" if isinstance(node, kind) else text


def regex_to_text(node: RegexAst) -> str:
    return node.to_text()


def regex_symbols(node: RegexAst) -> Set[str]:
    """Symbols occurring in the expression"""
    if isinstance(node, RegexLetter):
        return {node.symbol}
    if isinstance(node, (RegexUnion, RegexConcat)):
        return regex_symbols(node.left) | regex_symbols(node.right)
    if isinstance(node, RegexPlus):
        return regex_symbols(node.inner)
    return set()


def regex_from_words(words: Sequence[Sequence[str]]) -> RegexAst:
    """Union of the given nonempty words (the empty language for no words)"""
    result: Optional[RegexAst] = None
    for w in words:
        if len(w) == 0:
            raise ValueError("regular expressions over X+ cannot contain the empty word")
        node: RegexAst = RegexLetter(symbol=w[0])
        for symbol in w[1:]:
            node = RegexConcat(left=node, right=RegexLetter(symbol=symbol))
        result = node if result is None else RegexUnion(left=result, right=node)
    return result if result is not None else RegexEmpty()


def tokenize_symbols(text: str, style: InverseStyle = "prime") -> List[Tuple[str, int]]:
    """Split a word into (symbol, position) pairs"""
    symbols: List[Tuple[str, int]] = []
    i = 0
    while i < len(text):
        char = text[i]
        if char.isspace():
            i += 1
            continue
        if not char.isalpha():
            raise RegexSyntaxError(f"unexpected {char!r}", i)
        if style == "capital" and char.isupper():
            symbols.append((char.lower() + "'", i))
            i += 1
        elif i + 1 < len(text) and text[i + 1] == "'":
            symbols.append((char + "'", i))
            i += 2
        else:
            symbols.append((char, i))
            i += 1
    return symbols


class _RegexParser:
    def __init__(self, text: str, alphabet: Optional[Set[str]], style: InverseStyle):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet
        self.style = style

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> RegexAst:
        node = self.expr()
        if self.peek():
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.pos)
        return node

    def expr(self) -> RegexAst:
        node = self.concat()
        while self.peek() == "+":
            self.pos += 1
            node = RegexUnion(left=node, right=self.concat())
        return node

    def concat(self) -> RegexAst:
        parts: List[RegexAst] = []
        while self.peek() and self.peek() not in "+)^":
            parts.append(self.postfix())
        if not parts:
            found = self.peek() or "end of input"
            raise RegexSyntaxError(f"expected an expression, found {found!r}", self.pos)
        node = parts[0]
        for part in parts[1:]:
            node = RegexConcat(left=node, right=part)
        return node

    def postfix(self) -> RegexAst:
        node = self.atom()
        while self.peek() == "^":
            if self.text[self.pos : self.pos + 2] != "^+":
                raise RegexSyntaxError("expected '^+'", self.pos)
            self.pos += 2
            node = RegexPlus(inner=node)
        return node

    def atom(self) -> RegexAst:
        char = self.peek()
        start = self.pos
        if char == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise RegexSyntaxError("missing ')'", self.pos)
            self.pos += 1
            return node
        if char in ("0", "∅"):
            self.pos += 1
            return RegexEmpty()
        if char.isalpha():
            if self.style == "capital" and char.isupper():
                symbol = char.lower() + "'"
                self.pos += 1
            elif self.text[self.pos + 1 : self.pos + 2] == "'":
                symbol = char + "'"
                self.pos += 2
            else:
                symbol = char
                self.pos += 1
            if self.alphabet is not None and symbol not in self.alphabet:
                raise RegexSyntaxError(f"symbol {symbol!r} is not in the alphabet", start)
            return RegexLetter(symbol=symbol)
        raise RegexSyntaxError(f"unexpected {char!r}", start)


def parse_regex(
    text: str, alphabet: Optional[Sequence[str]] = None, style: InverseStyle = "prime"
) -> RegexAst:
    """Parse a regular expression; symbols are checked against the alphabet when given"""
    allowed = set(alphabet) if alphabet is not None else None
    return _RegexParser(text, allowed, style).parse()
