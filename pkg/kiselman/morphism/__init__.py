from .maps import (
    phi, endo_from_sequence, apply, is_endomorphism, compose, compose_by_substitution, psi, psi_inv,
    endomorphism_to_matrix, matrix_to_endomorphism
)
from .search import brute_force_enumerate_end, monotone_enumerate_end, DEFAULT_MAX_END_N
