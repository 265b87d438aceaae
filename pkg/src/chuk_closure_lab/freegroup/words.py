# src/chuk_closure_lab/freegroup/words.py
"""
Words over X and the formal inverses X^-1.

A symbol is a letter "a" or its inverse "a'". Text forms use either the prime
style (ab'a) or the capital style (aBa); the empty word prints as 1.
"""

from typing import List, Literal, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..errors import AlphabetError

InverseStyle = Literal["prime", "capital"]


def invert_symbol(symbol: str) -> str:
    return symbol[:-1] if symbol.endswith("'") else symbol + "'"


def letter_of(symbol: str) -> str:
    return symbol.rstrip("'")


def is_inverse(symbol: str) -> bool:
    return symbol.endswith("'")


def doubled_alphabet(letters: Sequence[str]) -> Tuple[str, ...]:
    """a, a', b, b', ... in letter order"""
    result: List[str] = []
    for x in sorted(set(letters)):
        result.extend((x, x + "'"))
    return tuple(result)


def free_reduce_symbols(symbols: Sequence[str]) -> Tuple[str, ...]:
    stack: List[str] = []
    for symbol in symbols:
        if stack and stack[-1] == invert_symbol(symbol):
            stack.pop()
        else:
            stack.append(symbol)
    return tuple(stack)


class GroupWord(BaseModel):
    """A word over X and X^-1, not necessarily reduced"""

    model_config = ConfigDict(frozen=True)

    symbols: Tuple[str, ...] = Field(default=(), description="Symbols such as a or a'")

    @field_validator("symbols")
    @classmethod
    def check_symbols(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        for symbol in v:
            letter = letter_of(symbol)
            if len(letter) != 1 or not letter.isalpha() or len(symbol) > 2:
                raise ValueError(f"invalid symbol {symbol!r}")
        return v

    @classmethod
    def parse(cls, text: str, style: InverseStyle = "prime") -> "GroupWord":
        """Parse a word; "1" and "" are the empty word"""
        compact = "".join(text.split())
        if compact in ("", "1", "ε"):
            return cls()
        symbols: List[str] = []
        i = 0
        while i < len(compact):
            char = compact[i]
            if not char.isalpha():
                raise AlphabetError(f"unexpected {char!r} at position {i} in {text!r}")
            if style == "capital" and char.isupper():
                symbols.append(char.lower() + "'")
                i += 1
            elif compact[i + 1 : i + 2] == "'":
                symbols.append(char + "'")
                i += 2
            else:
                symbols.append(char)
                i += 1
        return cls(symbols=tuple(symbols))

    @classmethod
    def from_power(cls, letter: str, n: int) -> "GroupWord":
        symbol = letter if n >= 0 else letter + "'"
        return cls(symbols=(symbol,) * abs(n))

    def to_text(self, style: InverseStyle = "prime") -> str:
        if not self.symbols:
            return "1"
        if style == "capital":
            return "".join(letter_of(s).upper() if is_inverse(s) else s for s in self.symbols)
        return "".join(self.symbols)

    @property
    def is_reduced(self) -> bool:
        return all(invert_symbol(x) != y for x, y in zip(self.symbols, self.symbols[1:]))

    def reduced(self) -> "GroupWord":
        return GroupWord(symbols=free_reduce_symbols(self.symbols))

    def inverse(self) -> "GroupWord":
        return GroupWord(symbols=tuple(invert_symbol(s) for s in reversed(self.symbols)))

    def power(self, n: int) -> "GroupWord":
        """Reduced n-th power, n in Z"""
        base = self if n >= 0 else self.inverse()
        return GroupWord(symbols=base.symbols * abs(n)).reduced()

    def letters(self) -> List[str]:
        return sorted({letter_of(s) for s in self.symbols})

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(symbols=free_reduce_symbols(self.symbols + other.symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.to_text()


IDENTITY = GroupWord()


def free_reduce(word: GroupWord) -> GroupWord:
    """The unique reduced word equal to the input in the free group"""
    return word.reduced()
