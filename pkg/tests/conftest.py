"""
Pytest configuration and shared fixtures.
"""

import math
import random
import sys
from pathlib import Path

import pytest

# Add src to path
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))


def make_random_term(rng, n=None, max_rank=3, max_nodes=10, alphabet="ab"):
    """
    A random canonical term of at most max_nodes nodes.

    With n, every omega offset is chosen so that the exponent expands to 1..3
    copies at that n, which keeps epsilon_n(t) short even at rank 3.
    Without n, offsets are drawn from -2..2.
    """
    from chuk_closure_lab.terms import concat, omega_power

    def build(depth):
        parts = []
        for _ in range(rng.randint(1, 3)):
            if depth > 0 and rng.random() < 0.6:
                if n is not None:
                    offset = rng.randint(1, 3) - math.factorial(n)
                else:
                    offset = rng.randint(-2, 2)
                parts.append(omega_power(build(depth - 1), offset))
            else:
                parts.append("".join(rng.choice(alphabet) for _ in range(rng.randint(1, 2))))
        return concat(*parts)

    while True:
        term = build(rng.randint(0, max_rank))
        if term.node_count() <= max_nodes:
            return term


@pytest.fixture
def rng():
    """Seeded generator for property tests"""
    return random.Random(20240611)


@pytest.fixture
def random_term():
    """Factory for random terms, see make_random_term"""
    return make_random_term


@pytest.fixture
def catalog():
    """Monogenic semigroups with index * period <= 24 and the named small semigroups"""
    from chuk_closure_lab.semigroups import default_catalog

    return default_catalog()


@pytest.fixture
def small_groups():
    """Every group of order <= 6"""
    from chuk_closure_lab.semigroups import groups_up_to_order

    return groups_up_to_order(6)


@pytest.fixture
def compile_text():
    """Compile an expression into its minimal automaton"""
    from chuk_closure_lab.languages import compile_regex, parse_regex

    def compile_(text, alphabet=None):
        return compile_regex(parse_regex(text), alphabet)

    return compile_


@pytest.fixture
def even_a(compile_text):
    """(aa)+"""
    return compile_text("(aa)^+")


@pytest.fixture
def odd_a(compile_text):
    """a(aa)+ + a, the odd powers of a"""
    return compile_text("a(aa)^+ + a")


@pytest.fixture
def two_blocks():
    """a^w b a^w"""
    from chuk_closure_lab.terms import parse_term

    return parse_term("a^w b a^w")


@pytest.fixture
def c2_table_file(tmp_path):
    """Table file of the cyclic group of order 2"""
    path = tmp_path / "c2.tbl"
    path.write_text("2\n0 1\n1 0\nidentity 0\n", encoding="utf-8")
    return path
