"""Exact computations in wreath products G wr Z.

Element arithmetic and word metrics for lamplighter-type groups, the
Diestel-Leader graph model, compatible-pair automorphisms, twisted-conjugacy
and Reidemeister counts, and the certificate-producing R-infinity classifier.
"""

from wreathlab._core import (
    CapacityError,
    FiniteGroup,
    LampAutSpec,
    ValidationError,
    WreathElement,
    WreathGroup,
    abelianization,
    apply_aut,
    automorphism_group,
    block_class_count,
    block_fixed_points,
    build_group,
    center,
    check_cayley_isomorphism,
    classify,
    commutator_subgroup,
    conjugacy_classes,
    cross_validate_cyclic,
    group_from_table,
    is_simple,
    make_autospec,
    normal_form,
    outer_automorphisms_trivial,
    parse_word,
    reidemeister_abelian,
    reidemeister_fh,
    reidemeister_wreath,
    sylow,
    twisted_classes,
    unit_autospec,
    vertex_of_element,
    window_class_count,
    window_direct_count,
    word_length_ct,
)

__all__ = [
    "CapacityError",
    "FiniteGroup",
    "LampAutSpec",
    "ValidationError",
    "WreathElement",
    "WreathGroup",
    "abelianization",
    "apply_aut",
    "automorphism_group",
    "block_class_count",
    "block_fixed_points",
    "build_group",
    "center",
    "check_cayley_isomorphism",
    "classify",
    "commutator_subgroup",
    "conjugacy_classes",
    "cross_validate_cyclic",
    "group_from_table",
    "is_simple",
    "make_autospec",
    "normal_form",
    "outer_automorphisms_trivial",
    "parse_word",
    "reidemeister_abelian",
    "reidemeister_fh",
    "reidemeister_wreath",
    "sylow",
    "twisted_classes",
    "unit_autospec",
    "vertex_of_element",
    "window_class_count",
    "window_direct_count",
    "word_length_ct",
]

__version__ = "0.1.0"
