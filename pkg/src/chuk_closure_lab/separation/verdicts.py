# src/chuk_closure_lab/separation/verdicts.py
"""
Separation verdicts and their JSON form.
"""

from typing import Any, Dict, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from ..freegroup.words import GroupWord, InverseStyle
from ..languages.automata import Dfa
from ..terms.kappa import KappaTerm

VERDICT_SCHEMA = 1


class SeparationBudgets(BaseModel):
    """Search bounds of the separation semi-algorithms"""

    model_config = ConfigDict(frozen=True)

    max_states: int = Field(default=3, ge=1, description="Largest candidate automaton")
    max_terms: int = Field(default=500, ge=1, description="Closure terms per side")

    def to_json(self) -> Dict[str, int]:
        return {"max_states": self.max_states, "max_terms": self.max_terms}


def _witness_json(witness: Union[GroupWord, KappaTerm], style: InverseStyle) -> Dict[str, str]:
    if isinstance(witness, GroupWord):
        return {"kind": "group_word", "text": witness.to_text(style)}
    return {"kind": "term", "text": witness.to_text()}


class Separable(BaseModel):
    """A separator exists; the recognizer accepts it"""

    model_config = ConfigDict(frozen=True)

    verdict: Literal["separable"] = "separable"
    pseudovariety: str = Field(..., description="Label of the class")
    recognizer: Optional[Dfa] = Field(
        default=None, description="Automaton of the separator, when one was built"
    )
    separator: str = Field(..., description="How the separator was obtained")
    budgets: Optional[SeparationBudgets] = None

    @property
    def is_positive(self) -> bool:
        return True

    def to_json(self, style: InverseStyle = "prime") -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema": VERDICT_SCHEMA,
            "verdict": self.verdict,
            "class": self.pseudovariety,
            "separator": self.separator,
        }
        if self.recognizer is not None:
            data["recognizer"] = self.recognizer.to_json()
        if self.budgets is not None:
            data["budgets"] = self.budgets.to_json()
        return data


class NotSeparable(BaseModel):
    """A common point of both closures"""

    model_config = ConfigDict(frozen=True)

    verdict: Literal["not_separable"] = "not_separable"
    pseudovariety: str
    witness: Union[GroupWord, KappaTerm] = Field(..., description="Point of both closures")
    partner: Optional[KappaTerm] = Field(
        default=None, description="The L-side term equal to the witness over the class"
    )
    budgets: Optional[SeparationBudgets] = None

    @property
    def is_positive(self) -> bool:
        return False

    def to_json(self, style: InverseStyle = "prime") -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema": VERDICT_SCHEMA,
            "verdict": self.verdict,
            "class": self.pseudovariety,
            "witness": _witness_json(self.witness, style),
        }
        if self.partner is not None:
            data["partner"] = _witness_json(self.partner, style)
        if self.budgets is not None:
            data["budgets"] = self.budgets.to_json()
        return data


class Unknown(BaseModel):
    """Budgets ran out before either search succeeded"""

    model_config = ConfigDict(frozen=True)

    verdict: Literal["unknown"] = "unknown"
    pseudovariety: str
    budgets: SeparationBudgets

    @property
    def is_positive(self) -> bool:
        return False

    def to_json(self, style: InverseStyle = "prime") -> Dict[str, Any]:
        return {
            "schema": VERDICT_SCHEMA,
            "verdict": self.verdict,
            "class": self.pseudovariety,
            "budgets": self.budgets.to_json(),
        }


SeparationVerdict = Union[Separable, NotSeparable, Unknown]
