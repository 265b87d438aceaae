# src/chuk_closure_lab/semigroups/pseudovarieties.py
"""
Pseudovariety membership predicates.

Built-in predicates: S (all finite semigroups), A (aperiodic), G (groups) and
Bn, defined by x^(w+n) = x^w. Custom predicates are finite lists of term
identities checked over every substitution of elements for letters.
"""

import itertools
import logging
from typing import Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import config
from ..errors import BudgetExceededError
from ..terms.kappa import KappaTerm
from .finite import FiniteSemigroup, max_index_period

logger = logging.getLogger(__name__)

PseudovarietyName = Literal["S", "A", "G", "Bn", "Custom"]


class PseudovarietyPredicate(BaseModel):
    """A decidable class of finite semigroups"""

    model_config = ConfigDict(frozen=True)

    name: PseudovarietyName = Field(..., description="S, A, G, Bn or Custom")
    n: Optional[int] = Field(default=None, ge=1, description="Parameter of Bn")
    identities: Tuple[Tuple[KappaTerm, KappaTerm], ...] = Field(
        default=(), description="Identity pairs of a Custom predicate"
    )

    @model_validator(mode="after")
    def check_parameters(self) -> "PseudovarietyPredicate":
        if self.name == "Bn" and self.n is None:
            raise ValueError("Bn needs its parameter n")
        if self.name == "Custom" and not self.identities:
            raise ValueError("Custom needs at least one identity")
        return self

    @classmethod
    def parse(cls, text: str) -> "PseudovarietyPredicate":
        """S, A, G, Bn:<n>, or Custom:<term>=<term>;..."""
        text = text.strip()
        if text in ("S", "A", "G"):
            return cls(name=text)  # type: ignore[arg-type]
        if text.startswith("Bn:"):
            try:
                n = int(text[3:])
            except ValueError as e:
                raise ValueError(f"invalid Bn parameter in {text!r}") from e
            return cls(name="Bn", n=n)
        if text.startswith("Custom:"):
            from ..terms.parser import parse_term

            pairs = []
            for item in text[len("Custom:") :].split(";"):
                if item.count("=") != 1:
                    raise ValueError(f"identity {item!r} must have the form <term>=<term>")
                left, right = item.split("=")
                pairs.append((parse_term(left), parse_term(right)))
            return cls(name="Custom", identities=tuple(pairs))
        raise ValueError(f"unknown pseudovariety {text!r}; expected S, A, G, Bn:<n> or Custom:...")

    @property
    def modulus(self) -> Optional[int]:
        """n with x^(w+n) = x^w holding throughout the class, when there is one"""
        if self.name == "A":
            return 1
        if self.name == "Bn":
            return self.n
        return None

    def label(self) -> str:
        if self.name == "Bn":
            return f"Bn:{self.n}"
        if self.name == "Custom":
            pairs = (f"{left.to_text()}={right.to_text()}" for left, right in self.identities)
            return "Custom:" + ";".join(pairs)
        return self.name

    def contains(self, semigroup: FiniteSemigroup) -> bool:
        return pseudovariety_member(semigroup, self)


def is_group(semigroup: FiniteSemigroup) -> bool:
    """A finite semigroup is a group iff every row and column is a permutation"""
    t = semigroup.to_array()
    expected = np.arange(semigroup.size)
    rows = np.all(np.sort(t, axis=1) == expected)
    columns = np.all(np.sort(t, axis=0) == expected[:, None])
    return bool(rows and columns)


def _satisfies(semigroup: FiniteSemigroup, left: KappaTerm, right: KappaTerm) -> bool:
    from ..terms.evaluation import eval_term_in

    variables = sorted(left.letters() | right.letters())
    if (
        len(variables) > config.custom_identity_max_vars
        and semigroup.size > config.custom_identity_max_size
    ):
        raise BudgetExceededError(
            f"{len(variables)} variables over a semigroup of size {semigroup.size} "
            f"exceed the custom identity budget"
        )
    for values in itertools.product(range(semigroup.size), repeat=len(variables)):
        images = dict(zip(variables, values))
        if eval_term_in(semigroup, images, left) != eval_term_in(semigroup, images, right):
            logger.debug(f"{left} = {right} fails at {images}")
            return False
    return True


def pseudovariety_member(semigroup: FiniteSemigroup, predicate: PseudovarietyPredicate) -> bool:
    if predicate.name == "S":
        return True
    if predicate.name == "G":
        return is_group(semigroup)
    if predicate.name in ("A", "Bn"):
        _, period = max_index_period(semigroup)
        modulus = predicate.modulus or 1
        return modulus % period == 0
    return all(_satisfies(semigroup, left, right) for left, right in predicate.identities)
