# src/chuk_closure_lab/registry.py
"""
Command registry for discovery of the workbench verbs.

Lists every verb with its description, the pipeline of library operations it
runs and the output formats it supports.
"""

from typing import Any, Dict, List, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

Verb = Literal[
    "closure-g",
    "separate",
    "expand",
    "histories",
    "graph",
    "syntactic",
    "eval-term",
    "wordproblem-g",
    "enumerate",
    "normalize-bn",
    "thue-morse",
]
OutputFormat = Literal["text", "json", "dot"]

_COMMANDS: Dict[str, Dict[str, Any]] = {
    "closure-g": {
        "description": "Closure of a rational language in the profinite free group",
        "pipeline": ["parse_regex", "closure_g", "rational_member"],
        "formats": ["text", "json", "dot"],
    },
    "separate": {
        "description": "Separate two rational languages by a pseudovariety",
        "pipeline": ["parse_regex", "separate_by_v", "check_separator"],
        "formats": ["text", "json"],
    },
    "expand": {
        "description": "The word epsilon_n(t) of a kappa-term",
        "pipeline": ["parse_term", "epsilon_expand"],
        "formats": ["text", "json"],
    },
    "histories": {
        "description": "Histories of the splits of epsilon_n(t)",
        "pipeline": ["parse_term", "history_at", "enumerate_factorizations"],
        "formats": ["text", "json"],
    },
    "graph": {
        "description": "Multigraph of the factorizations of epsilon_k(t) over L",
        "pipeline": ["parse_term", "compile_regex", "build_factorization_graph"],
        "formats": ["text", "json", "dot"],
    },
    "syntactic": {
        "description": "Minimal automaton and syntactic semigroup of a language",
        "pipeline": ["parse_regex", "compile_regex", "syntactic_semigroup"],
        "formats": ["text", "json", "dot"],
    },
    "eval-term": {
        "description": "Value of a kappa-term in a finite semigroup",
        "pipeline": ["load_table", "parse_term", "eval_term"],
        "formats": ["text", "json"],
    },
    "wordproblem-g": {
        "description": "Whether two kappa-terms are equal over finite groups",
        "pipeline": ["parse_term", "equal_over_g"],
        "formats": ["text", "json"],
    },
    "enumerate": {
        "description": "Kappa-terms of the closure of a rational language",
        "pipeline": ["parse_regex", "closure_expr", "enumerate_closure_terms"],
        "formats": ["text", "json"],
    },
    "normalize-bn": {
        "description": "Normal form of an exponent over x^(w+n) = x^w",
        "pipeline": ["parse_exponent", "normalize_unary_bn"],
        "formats": ["text", "json"],
    },
    "thue-morse": {
        "description": "Thue-Morse iterate and its cube-freeness",
        "pipeline": ["thue_morse_iterate", "is_cube_free"],
        "formats": ["text", "json"],
    },
}


class Command(BaseModel):
    """A verb with the output format it was asked for"""

    model_config = ConfigDict(frozen=True)

    verb: Verb = Field(..., description="Workbench verb")
    format: OutputFormat = Field(default="text", description="text, json or dot")

    @model_validator(mode="after")
    def check_format(self) -> "Command":
        formats = _COMMANDS[self.verb]["formats"]
        if self.format not in formats:
            raise ValueError(f"{self.verb} supports {', '.join(formats)}, not {self.format}")
        return self


class CommandRegistry:
    """Registry of all workbench verbs"""

    @staticmethod
    def list_commands() -> Dict[str, Any]:
        """All verbs with description, pipeline and formats"""
        return {verb: dict(info) for verb, info in _COMMANDS.items()}

    @staticmethod
    def get_command_info(verb: str) -> Dict[str, Any]:
        """Detailed information about one verb"""
        if verb not in _COMMANDS:
            return {"error": f"Unknown verb: {verb}"}
        return {"verb": verb, **_COMMANDS[verb]}

    @staticmethod
    def search_commands(query: str) -> List[Dict[str, Any]]:
        """Verbs whose name, description or pipeline mentions the query"""
        query = query.lower()
        results = []
        for verb, info in _COMMANDS.items():
            haystack = " ".join([verb, info["description"], *info["pipeline"]]).lower()
            if query in haystack:
                results.append({"verb": verb, "description": info["description"]})
        return results
