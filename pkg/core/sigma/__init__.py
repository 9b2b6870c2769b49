"""
Sigma Module
σ-set calculus – Sets, Antisets & Annihilating Fusion

This package provides the algebra: the base operations, associativity
analysis, group verification, the fusion-equation solver and the
brute-force oracle used to validate all of it.
"""

from .fusion import (
    make_sigma_set,
    hat_intersect,
    star_diff,
    fuse,
    antiset,
    is_antielement_free_family,
    find_af_violation,
    parse_atom,
    parse_sigma_set
)

from .assoc import (
    ORDERINGS,
    chain_value,
    reversed_chain,
    starred_chain,
    direct_associative,
    eval_chain,
    is_assoc_order,
    triad_system,
    is_locally_associative,
    first_non_local_triple,
    is_locally_associative_family,
    check_reversal,
    check_chain_antiset
)

from .group import (
    check_group,
    replay_witness,
    brute_force_solve,
    cancellation_applies,
    solve_fusion_equation
)

from .oracle import (
    enumerate_sigma_sets,
    iter_sigma_sets,
    reference_fuse,
    random_sigma_set
)

__all__ = [
    # Fusion
    'make_sigma_set',
    'hat_intersect',
    'star_diff',
    'fuse',
    'antiset',
    'is_antielement_free_family',
    'find_af_violation',
    'parse_atom',
    'parse_sigma_set',
    # Associativity
    'ORDERINGS',
    'chain_value',
    'reversed_chain',
    'starred_chain',
    'direct_associative',
    'eval_chain',
    'is_assoc_order',
    'triad_system',
    'is_locally_associative',
    'first_non_local_triple',
    'is_locally_associative_family',
    'check_reversal',
    'check_chain_antiset',
    # Groups & equations
    'check_group',
    'replay_witness',
    'brute_force_solve',
    'cancellation_applies',
    'solve_fusion_equation',
    # Oracle
    'enumerate_sigma_sets',
    'iter_sigma_sets',
    'reference_fuse',
    'random_sigma_set',
]
