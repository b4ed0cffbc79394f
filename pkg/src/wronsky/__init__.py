"""Exact Wronskian maps, Plücker coordinates, Schur functions and tau-functions."""

from .cells import (
    CellIndex,
    Partition,
    SemiInfiniteCell,
    admissible_moves,
    all_cells,
    complement,
    hook_factor,
    hook_lemma_check,
    length,
    level_sets,
    partition_of,
    path_count,
    semi_infinite,
    transpose,
)
from .errors import *  # noqa: F401,F403
from .exact import (
    Matrix,
    MultiPoly,
    Permutation,
    Rat,
    RatFn,
    UniPoly,
    as_rat,
    column_reversal,
    det,
    h_from_t,
    minor,
    poly_derivative,
    poly_reciprocal,
)
from .identities import (
    IdentityReport,
    desnanot_jacobi_check,
    mutation_check,
    mutation_solve,
    pluecker_relation_check,
    w5_check,
)
from .maps import (
    WronskyImage,
    bruhat_cell,
    contraction,
    degree_vector,
    generalized_wronskian,
    permutation_degrees,
    pluecker,
    row_polys,
    unit_wronskian,
    unit_wronskian_minor,
    wronskian,
    wronsky_map,
)
from .reconstruct import LexCoordinates, lex_coordinates, reconstruct_unitriangular
from .tau import (
    TauFunction,
    kdv_residual,
    schur_h,
    schur_initial,
    schur_t,
    tau,
    tau_initial,
    toeplitz_schur_check,
    wronskian_tau_check,
)

__version__ = "0.1.0"
