"""
Finite semigroups: multiplication tables, morphisms from X+, omega powers,
a catalog of small semigroups and pseudovariety predicates.
"""

from .finite import (
    FiniteSemigroup,
    SemigroupMorphism,
    check_associative,
    direct_product,
    eval_word,
    image_of_rational,
    index_period,
    max_index_period,
    power,
    power_int,
    transformation_semigroup,
)
from .catalog import (
    brandt_b2,
    catalog_morphisms,
    cyclic_group,
    default_catalog,
    flip_flop,
    groups_up_to_order,
    klein_four,
    left_zero,
    load_table,
    monogenic,
    null_semigroup,
    read_table,
    right_zero,
    symmetric_group_s3,
    write_table,
)
from .pseudovarieties import PseudovarietyPredicate, is_group, pseudovariety_member

__all__ = [
    # Tables and morphisms
    "FiniteSemigroup",
    "SemigroupMorphism",
    "check_associative",
    "index_period",
    "max_index_period",
    "power",
    "power_int",
    "eval_word",
    "image_of_rational",
    "direct_product",
    "transformation_semigroup",
    # Catalog
    "cyclic_group",
    "monogenic",
    "left_zero",
    "right_zero",
    "null_semigroup",
    "brandt_b2",
    "flip_flop",
    "klein_four",
    "symmetric_group_s3",
    "groups_up_to_order",
    "default_catalog",
    "catalog_morphisms",
    "read_table",
    "write_table",
    "load_table",
    # Pseudovarieties
    "PseudovarietyPredicate",
    "pseudovariety_member",
    "is_group",
]
