# src/chuk_closure_lab/config.py
"""
Configuration management for the closure lab.

Budgets and defaults are read from environment variables prefixed with
CLOSURE_LAB_ (or a .env file); command-line flags override them.
"""

from typing import TYPE_CHECKING, Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

if TYPE_CHECKING:
    from .separation.verdicts import SeparationBudgets


class ClosureLabConfig(BaseSettings):
    """Closure lab configuration from environment variables"""

    model_config = SettingsConfigDict(
        env_prefix="CLOSURE_LAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Separation budgets
    max_states: int = Field(
        default=3,
        ge=1,
        description="Largest Dfa size enumerated by the separator search",
    )

    max_terms: int = Field(
        default=500,
        ge=1,
        description="Closure terms enumerated per language for the normal-form match",
    )

    group_search_states: int = Field(
        default=4,
        ge=1,
        description="Largest permutation automaton tried when attaching a group recognizer",
    )

    group_cyclic_order: int = Field(
        default=16,
        ge=2,
        description="Largest cyclic group tried when the permutation search finds no separator",
    )

    workers: int = Field(
        default=1,
        ge=1,
        description="Process pool width for separator search (1 = sequential)",
    )

    # Expansion and graph budgets
    expansion_n: int = Field(
        default=4,
        ge=4,
        description="Default n of the approximants, with omega read as n!",
    )

    max_expansion_length: int = Field(
        default=100_000,
        ge=1,
        description="Largest word materialised by an expansion",
    )

    path_limit: int = Field(
        default=10_000,
        ge=1,
        description="Largest number of factorization-graph paths enumerated",
    )

    refute_budget: int = Field(
        default=5_000,
        ge=1,
        description="Morphisms examined by a refutation search",
    )

    # Custom pseudoidentities
    custom_identity_max_vars: int = Field(
        default=3,
        ge=1,
        description="Variables allowed in a custom pseudoidentity on larger semigroups",
    )

    custom_identity_max_size: int = Field(
        default=6,
        ge=1,
        description="Semigroup size above which the variable limit applies",
    )

    # Text formats
    inverse_style: Literal["prime", "capital"] = Field(
        default="prime",
        description="How inverse letters are written: a' (prime) or A (capital)",
    )

    def budgets(self) -> "SeparationBudgets":
        """Default separation budgets"""
        from .separation.verdicts import SeparationBudgets

        return SeparationBudgets(max_states=self.max_states, max_terms=self.max_terms)


# Global config instance
config = ClosureLabConfig()
