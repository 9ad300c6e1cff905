"""The bijection from l-cores with first part k to (l-1)-cores with first part at most k."""

from __future__ import annotations

from functools import lru_cache
from itertools import islice
from math import comb

from .abacus import Abacus, abacus_from_beta, beta_of, partition_of
from .partition import DomainError, Partition, first_column_hooks, is_core, transpose


def _require_core(lam: Partition, ell: int) -> None:
    if not is_core(lam, ell):
        raise DomainError(f"{lam} is not a {ell}-core")


def _require_ell(ell: int) -> None:
    if ell < 3:
        raise DomainError(f"the bijection needs ell >= 3, got {ell}")


def phi_abacus(abacus: Abacus) -> Abacus:
    """Delete the runner holding the last bead in reading order."""
    return abacus.delete_runner(abacus.runner_of(abacus.last_bead))


def phi(ell: int, lam: Partition) -> Partition:
    _require_ell(ell)
    lam = Partition(lam)
    _require_core(lam, ell)
    return partition_of(phi_abacus(abacus_from_beta(beta_of(lam), ell)))


def phi_inv_abacus(abacus: Abacus, k: int) -> Abacus:
    """Insert a flush runner so that its top bead has exactly ``k`` gaps before it.

    The new bead goes immediately before the (k+1)-th gap, which is the same as
    right after the k-th gap whenever the last bead precedes the k-th gap.
    """
    gap = next(islice(abacus.gaps(), k, None))
    level, runner = divmod(gap, abacus.ell)
    return abacus.insert_runner(runner, level)


def phi_inv(ell: int, k: int, mu: Partition) -> Partition:
    _require_ell(ell)
    mu = Partition(mu)
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    _require_core(mu, ell - 1)
    if mu.first > k:
        raise DomainError(f"first part of {mu} exceeds k={k}")
    return partition_of(phi_inv_abacus(abacus_from_beta(beta_of(mu), ell - 1), k))


def phi_rows(ell: int, lam: Partition) -> Partition:
    """Delete every row whose first-column hook is congruent to the corner hook mod ``ell``."""
    _require_ell(ell)
    lam = Partition(lam)
    _require_core(lam, ell)
    if not lam:
        return lam
    h = first_column_hooks(lam)
    return Partition(p for p, hk in zip(lam, h) if (hk - h[0]) % ell)


def phi_tilde(ell: int, lam: Partition) -> Partition:
    """Conjugate of :func:`phi` by transposition; deletes whole columns."""
    _require_ell(ell)
    lam = Partition(lam)
    _require_core(lam, ell)
    return transpose(phi(ell, transpose(lam)))


@lru_cache(maxsize=None)
def _cores_exact(ell: int, k: int) -> tuple[Partition, ...]:
    if k == 0:
        return (Partition(),)
    if ell == 2:
        return (Partition(range(k, 0, -1)),)
    return tuple(sorted(phi_inv(ell, k, mu) for mu in _cores_at_most(ell - 1, k)))


@lru_cache(maxsize=None)
def _cores_at_most(ell: int, k: int) -> tuple[Partition, ...]:
    return tuple(sorted(lam for j in range(k + 1) for lam in _cores_exact(ell, j)))


def enumerate_cores(ell: int, k: int, mode: str = "exact") -> list[Partition]:
    """All ``ell``-cores with first part ``k`` (``mode="exact"``) or at most ``k``.

    Built by chaining :func:`phi_inv` down to the 2-cores, which are staircases.
    Sorted lexicographically by parts.
    """
    if ell < 2:
        raise DomainError(f"ell must be at least 2, got {ell}")
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if mode == "exact":
        return list(_cores_exact(ell, k))
    if mode == "at_most":
        return list(_cores_at_most(ell, k))
    raise DomainError(f"unknown mode {mode!r}")


def count_cores(ell: int, k: int) -> int:
    return len(enumerate_cores(ell, k, "exact"))


def expected_count(ell: int, k: int) -> int:
    return comb(k + ell - 2, k)
