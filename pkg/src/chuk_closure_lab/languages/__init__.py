"""
Rational languages over X+: regular expressions, automata, syntactic semigroups
and word combinatorics.
"""

from .automata import (
    Dfa,
    Nfa,
    align,
    compile_regex,
    empty_language,
    includes,
    intersection_is_empty,
    iter_factorizations,
    iter_words,
    lang_op,
    plus_language,
)
from .regex import (
    RegexAst,
    RegexConcat,
    RegexEmpty,
    RegexLetter,
    RegexPlus,
    RegexUnion,
    parse_regex,
    regex_from_words,
    regex_to_text,
)
from .syntactic import (
    syntactic_image,
    syntactic_monoid,
    syntactic_semigroup,
    transition_semigroup,
)
from .words import find_cube, is_cube_free, thue_morse_iterate

__all__ = [
    # Expressions
    "RegexAst",
    "RegexEmpty",
    "RegexLetter",
    "RegexUnion",
    "RegexConcat",
    "RegexPlus",
    "parse_regex",
    "regex_to_text",
    "regex_from_words",
    # Automata
    "Dfa",
    "Nfa",
    "compile_regex",
    "lang_op",
    "align",
    "includes",
    "intersection_is_empty",
    "empty_language",
    "plus_language",
    "iter_factorizations",
    "iter_words",
    # Syntactic semigroups
    "transition_semigroup",
    "syntactic_semigroup",
    "syntactic_monoid",
    "syntactic_image",
    # Words
    "thue_morse_iterate",
    "is_cube_free",
    "find_cube",
]
