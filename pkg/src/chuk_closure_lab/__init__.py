"""
chuk-closure-lab - Profinite closures of rational languages.

Kappa-terms and their expansions, finite semigroups, closures in the profinite
free group, factorization histories and graphs, and separation of rational
languages by pseudovarieties.

## Quick Start

```python
from chuk_closure_lab import (
    PseudovarietyPredicate,
    epsilon_expand,
    history_at,
    parse_regex,
    parse_term,
    separate_by_v,
)

# Expand a term with omega read as 4!
word = epsilon_expand(parse_term("(a^w b)^w"), 4)

# History of the split of a^w b a^w before position 24
history = history_at(parse_term("a^w b a^w"), 4, 24)
history.to_json()  # [[1, 1], ["", "b"]]

# Separation by group languages
verdict = separate_by_v(
    parse_regex("(aa)^+"), parse_regex("a(aa)^+ + a"), PseudovarietyPredicate.parse("G")
)
verdict.to_json()["verdict"]  # "separable"
```

## Features

- **Kappa-terms**: exponents w+n, canonical terms, epsilon_n expansions, normal forms
- **Finite semigroups**: tables, omega powers, a catalog, pseudovariety predicates
- **Rational languages**: automata, syntactic semigroups, closure-term enumeration
- **Free group**: Stallings graphs, rational subsets and their closures
- **Factorizations**: histories, splitting balancer, factorization graphs and paths
- **Separation**: exact over groups, budgeted search for any other class
"""

from .config import ClosureLabConfig, config
from .errors import ClosureLabError
from .factorization import (
    FactorizationGraph,
    History,
    balance_splitting,
    build_factorization_graph,
    enumerate_factorizations,
    filter_samples,
    history_at,
    limit_terms,
    reconstruct,
    transform_path,
)
from .freegroup import GroupWord, StallingsGraph, closure_g, common_element, fold_stallings
from .languages import Dfa, compile_regex, lang_op, parse_regex, syntactic_semigroup
from .preview import export_dot
from .registry import Command, CommandRegistry
from .semigroups import FiniteSemigroup, PseudovarietyPredicate, SemigroupMorphism
from .separation import (
    check_separator,
    closure_expr,
    enumerate_closure_terms,
    separate_by_g,
    separate_by_v,
)
from .terms import Exponent, KappaTerm, parse_term
from .terms.evaluation import epsilon_expand, eval_term, in_closure_s

__version__ = "0.1.0"

__all__ = [
    # Configuration and errors
    "ClosureLabConfig",
    "config",
    "ClosureLabError",
    # Terms
    "Exponent",
    "KappaTerm",
    "parse_term",
    "epsilon_expand",
    "eval_term",
    "in_closure_s",
    # Semigroups
    "FiniteSemigroup",
    "SemigroupMorphism",
    "PseudovarietyPredicate",
    # Languages
    "Dfa",
    "parse_regex",
    "compile_regex",
    "lang_op",
    "syntactic_semigroup",
    # Free group
    "GroupWord",
    "StallingsGraph",
    "fold_stallings",
    "closure_g",
    "common_element",
    # Factorizations
    "History",
    "history_at",
    "reconstruct",
    "enumerate_factorizations",
    "filter_samples",
    "limit_terms",
    "balance_splitting",
    "FactorizationGraph",
    "build_factorization_graph",
    "transform_path",
    # Separation
    "closure_expr",
    "enumerate_closure_terms",
    "separate_by_g",
    "separate_by_v",
    "check_separator",
    # Workbench
    "Command",
    "CommandRegistry",
    "export_dot",
]
