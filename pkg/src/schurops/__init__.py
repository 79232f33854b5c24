"""Generalized Schur operators on graded lattices, over exact rationals."""

from .polyring import MultiPoly, poly_add, poly_mul, coeff_of, is_symmetric, truncate_total_degree
from .gmodule import (
    ASequence,
    BasisElement,
    FormalVector,
    LatticeInstance,
    adjoint_component,
    adjoint_instance,
    apply_down_series,
    apply_up_series,
    monomial_elem,
    pairing,
    parse_element,
    partition_elem,
    schur_D,
    schur_U,
    strict_elem,
    tree_elem,
)
from .instances import INSTANCE_NAMES, SEQUENCES, get_instance, level_enumerate
from .identities import (
    CheckReport,
    IDENTITY_NAMES,
    b_from_a,
    check_cauchy,
    check_commutation,
    check_duality,
    check_heisenberg,
    check_pieri,
    check_pieri_minimum,
    check_pieri_variants,
    dual_a,
    partition_stats,
    run_all,
    run_identity,
    weighted_complete,
)
from .oracle import count_level, ssyt_polynomial, tree_labeling_polynomial

__version__ = "0.1.0"
