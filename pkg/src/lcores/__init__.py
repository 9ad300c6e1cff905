"""Combinatorics of l-core partitions: abaci, the bijection between l-cores with
first part k and (l-1)-cores with first part at most k, the affine symmetric
group action, and the Lapointe-Morse correspondence."""

from .abacus import (
    Abacus,
    BetaNumbers,
    abacus_from_beta,
    balance_number,
    balanced_flush_abacus,
    beta_of,
    is_flush,
    partition_of,
    shift,
)
from .affine import (
    GeneratorEffect,
    RootVector,
    Word,
    apply_s_core,
    apply_s_vector,
    canonical_word,
    classify,
    coxeter_length,
    first_part_from_vector,
    first_part_gap_count,
    n_vector,
    on_hyperplane,
    phi_on_lattice,
    phi_subexpression,
    pi,
    pi_inv,
    psi,
)
from .corebij import count_cores, enumerate_cores, phi, phi_inv, phi_rows, phi_tilde
from .lmcorr import rho, skew_removed_count, upsilon, verify_commute
from .partition import (
    Box,
    DomainError,
    Partition,
    hook_length,
    is_core,
    is_core_rimhook,
    region,
    residue,
    row_exposed_boxes,
    transpose,
)

__version__ = "0.1.0"
