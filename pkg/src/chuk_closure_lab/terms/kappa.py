# src/chuk_closure_lab/terms/kappa.py
"""
Kappa-bar terms in layered canonical form.

A term is a flat sequence of factors, each a nonempty Word or a Power whose base
is itself a canonical term and whose exponent is omega + n. Adjacent words are
always merged and finite powers are expanded, so the top layer reads

    t = t0 s1^a1 t1 ... sm^am tm

where the blocks s_j^a_j are the powers of maximal nesting depth and the fillers
t_i are the runs of lower-rank material between them (possibly empty).
"""

from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import EmptyTermError
from .exponent import Exponent, sum_exponents


class Word(BaseModel):
    """A nonempty word over the alphabet"""

    model_config = ConfigDict(frozen=True)

    letters: str = Field(..., min_length=1, description="Letters, one character each")

    def to_text(self) -> str:
        return self.letters


class Power(BaseModel):
    """base^(w+n) with a nonempty canonical base"""

    model_config = ConfigDict(frozen=True)

    base: "KappaTerm" = Field(..., description="Canonical nonempty base term")
    exponent: Exponent = Field(..., description="An omega + n exponent")

    @field_validator("exponent")
    @classmethod
    def exponent_is_infinite(cls, v: Exponent) -> Exponent:
        if v.is_finite:
            raise ValueError("finite powers are expanded during canonicalization")
        return v

    @field_validator("base")
    @classmethod
    def base_is_nonempty(cls, v: "KappaTerm") -> "KappaTerm":
        if v.is_empty:
            raise ValueError("power of an empty term")
        return v

    @property
    def rank(self) -> int:
        return self.base.rank + 1

    def to_text(self) -> str:
        base = self.base.to_text()
        if not (self.base.is_word and len(base) == 1):
            base = f"({base})"
        return f"{base}^{self.exponent.to_text()}"


Factor = Union[Word, Power]


class Layout(BaseModel):
    """The top layer t0 s1^a1 t1 ... sm^am tm of a term"""

    model_config = ConfigDict(frozen=True)

    fillers: Tuple["KappaTerm", ...] = Field(..., description="t0 .. tm, possibly empty")
    blocks: Tuple[Power, ...] = Field(..., description="s1^a1 .. sm^am")


class KappaTerm(BaseModel):
    """Canonical kappa-bar term: a flat factor sequence, empty only internally"""

    model_config = ConfigDict(frozen=True)

    factors: Tuple[Factor, ...] = Field(default=(), description="Canonical factor sequence")

    @model_validator(mode="after")
    def check_canonical(self) -> "KappaTerm":
        for left, right in zip(self.factors, self.factors[1:]):
            if isinstance(left, Word) and isinstance(right, Word):
                raise ValueError("adjacent words must be merged")
        return self

    @property
    def is_empty(self) -> bool:
        return not self.factors

    @property
    def is_word(self) -> bool:
        return all(isinstance(f, Word) for f in self.factors)

    @property
    def rank(self) -> int:
        """Maximal nesting depth of powers"""
        return max((f.rank for f in self.factors if isinstance(f, Power)), default=0)

    @property
    def nu(self) -> int:
        """Number of top-layer blocks s_j^a_j"""
        r = self.rank
        if r == 0:
            return 0
        return sum(1 for f in self.factors if isinstance(f, Power) and f.rank == r)

    def rank_nu(self) -> Tuple[int, int]:
        return self.rank, self.nu

    def layout(self) -> Layout:
        r = self.rank
        fillers: List[KappaTerm] = []
        blocks: List[Power] = []
        current: List[Factor] = []
        for f in self.factors:
            if isinstance(f, Power) and f.rank == r:
                fillers.append(KappaTerm(factors=tuple(current)))
                blocks.append(f)
                current = []
            else:
                current.append(f)
        fillers.append(KappaTerm(factors=tuple(current)))
        return Layout(fillers=tuple(fillers), blocks=tuple(blocks))

    def letters(self) -> Set[str]:
        result: Set[str] = set()
        for f in self.factors:
            if isinstance(f, Word):
                result.update(f.letters)
            else:
                result |= f.base.letters()
        return result

    def node_count(self) -> int:
        """Letters plus powers"""
        return sum(
            len(f.letters) if isinstance(f, Word) else 1 + f.base.node_count()
            for f in self.factors
        )

    def word(self) -> str:
        """The letters of a rank-0 term"""
        if not self.is_word:
            raise ValueError(f"{self.to_text()} is not a word")
        return "".join(f.letters for f in self.factors if isinstance(f, Word))

    def to_text(self) -> str:
        return " ".join(f.to_text() for f in self.factors)

    def __str__(self) -> str:
        return self.to_text()


Power.model_rebuild()
Layout.model_rebuild()

EMPTY = KappaTerm()

RawTerm = Union[str, Word, Power, KappaTerm, Sequence["RawTerm"]]


def _flatten(raw: RawTerm, out: List[Factor]) -> None:
    if isinstance(raw, str):
        if raw:
            out.append(Word(letters=raw))
    elif isinstance(raw, Word):
        out.append(raw)
    elif isinstance(raw, Power):
        out.append(raw)
    elif isinstance(raw, KappaTerm):
        out.extend(raw.factors)
    else:
        for part in raw:
            _flatten(part, out)


def _merge(factors: Iterable[Factor]) -> Tuple[Factor, ...]:
    merged: List[Factor] = []
    for f in factors:
        if merged and isinstance(f, Word) and isinstance(merged[-1], Word):
            merged[-1] = Word(letters=merged[-1].letters + f.letters)
        else:
            merged.append(f)
    return tuple(merged)


def canonicalize(raw: RawTerm, allow_empty: bool = False) -> KappaTerm:
    """Flatten nested concatenations and merge adjacent words"""
    factors: List[Factor] = []
    _flatten(raw, factors)
    term = KappaTerm(factors=_merge(factors))
    if term.is_empty and not allow_empty:
        raise EmptyTermError("the empty term is not a kappa-term")
    return term


def word(letters: str) -> KappaTerm:
    return canonicalize(letters)


def concat(*parts: RawTerm) -> KappaTerm:
    """Canonical concatenation, empty parts allowed"""
    return canonicalize(list(parts), allow_empty=True)


def power(base: RawTerm, exponent: Exponent) -> KappaTerm:
    """base^exponent; finite exponents are expanded into copies"""
    b = canonicalize(base, allow_empty=True)
    if b.is_empty:
        return EMPTY
    if exponent.is_finite:
        return canonicalize([b] * exponent.value)
    return KappaTerm(factors=(Power(base=b, exponent=exponent),))


def omega_power(base: RawTerm, n: int = 0) -> KappaTerm:
    return power(base, Exponent.omega_plus(n))


def rank_nu(term: KappaTerm) -> Tuple[int, int]:
    return term.rank_nu()


def _primitive_root(letters: str) -> Tuple[str, int]:
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and letters[:d] * (n // d) == letters:
            return letters[:d], n // d
    return letters, 1


def _grow(p: Power, d: int = 1) -> Power:
    return Power(base=p.base, exponent=sum_exponents(p.exponent, Exponent.finite(d)))


def _absorb_step(factors: List[Factor]) -> bool:
    """One absorption u^a u -> u^(a+1), u u^a -> u^(a+1) or u^a u^b -> u^(a+b)"""
    for i, f in enumerate(factors):
        if not isinstance(f, Power):
            continue
        u = f.base.word() if f.base.is_word else None
        if i + 1 < len(factors):
            nxt = factors[i + 1]
            if isinstance(nxt, Power) and nxt.base == f.base:
                merged = Power(base=f.base, exponent=sum_exponents(f.exponent, nxt.exponent))
                factors[i : i + 2] = [merged]
                return True
            if u is not None and isinstance(nxt, Word) and nxt.letters.startswith(u):
                rest = nxt.letters[len(u) :]
                factors[i : i + 2] = [_grow(f)] + ([Word(letters=rest)] if rest else [])
                return True
        if i > 0:
            prev = factors[i - 1]
            if u is not None and isinstance(prev, Word) and prev.letters.endswith(u):
                rest = prev.letters[: -len(u)]
                factors[i - 1 : i + 1] = ([Word(letters=rest)] if rest else []) + [_grow(f)]
                return True
    return False


def _normalize(term: KappaTerm, modulus: Optional[int]) -> KappaTerm:
    factors: List[Factor] = []
    for f in term.factors:
        if isinstance(f, Word):
            factors.append(f)
            continue
        base = _normalize(f.base, modulus)
        exponent = f.exponent
        if base.is_word:
            root, k = _primitive_root(base.word())
            if k > 1:
                base = word(root)
                offset = exponent.value if modulus is None else exponent.value % modulus
                exponent = Exponent.omega_plus(offset * k)
        if modulus is not None:
            exponent = Exponent.omega_plus(exponent.value % modulus)
        factors.append(Power(base=base, exponent=exponent))
    factors = list(_merge(factors))
    while _absorb_step(factors):
        factors = list(_merge(factors))
    if modulus is not None:
        factors = [
            Power(base=f.base, exponent=Exponent.omega_plus(f.exponent.value % modulus))
            if isinstance(f, Power)
            else f
            for f in factors
        ]
    return KappaTerm(factors=tuple(factors))


def normalize_term(term: KappaTerm, modulus: Optional[int] = None) -> KappaTerm:
    """
    Rewrite a term with identities that hold in every finite semigroup.

    (u^k)^(w+n) becomes u^(w+kn) for a primitive word u, and a power absorbs
    neighbouring copies of its base. With a modulus n, every exponent w+k is
    further reduced to w+(k mod n), the normal form over x^(w+n) = x^w.
    Equal results imply equal values; the converse does not hold.
    """
    previous = None
    current = term
    while current != previous:
        previous = current
        current = _normalize(current, modulus)
    return current


def simplify_over_s(term: KappaTerm) -> KappaTerm:
    return normalize_term(term, None)
