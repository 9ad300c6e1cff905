"""The Lapointe-Morse map from l-cores to (l-1)-bounded partitions, and column deletion."""

from __future__ import annotations

from .corebij import phi, phi_tilde
from .partition import DomainError, Partition, hooks, is_core, transpose


def _require_core(lam: Partition, ell: int) -> Partition:
    lam = Partition(lam)
    if not is_core(lam, ell):
        raise DomainError(f"{lam} is not a {ell}-core")
    return lam


def skew_boxes(ell: int, lam: Partition) -> list[list[bool]]:
    """Row-by-row flags: True for boxes with hook length below ``ell``."""
    lam = _require_core(lam, ell)
    return [[h < ell for h in row] for row in hooks(lam)]


def rho(ell: int, lam: Partition) -> Partition:
    """Left-justify the boxes whose hook length is less than ``ell``."""
    return Partition(sum(row) for row in skew_boxes(ell, lam))


def upsilon(nu: Partition) -> Partition:
    """Delete the first column."""
    return Partition(p - 1 for p in Partition(nu))


def verify_commute(ell: int, lam: Partition) -> bool:
    """Check ``upsilon . rho_ell . tr == rho_(ell-1) . tr . phi`` at ``lam``."""
    lam = _require_core(lam, ell)
    return upsilon(rho(ell, transpose(lam))) == rho(ell - 1, transpose(phi(ell, lam)))


def deleted_boxes(ell: int, lam: Partition) -> list[list[int]]:
    """Columns deleted from each row, described row by row through hook lengths.

    In row ``i`` the leftmost box goes, together with every box of that row
    whose hook length is congruent to it mod ``ell``.
    """
    lam = _require_core(lam, ell)
    return [
        [j for j, h in enumerate(row, start=1) if (h - row[0]) % ell == 0]
        for row in hooks(lam)
    ]


def skew_removed_count(ell: int, lam: Partition) -> tuple[int, ...]:
    """Per row, how many skew boxes the column deletion removes."""
    lam = _require_core(lam, ell)
    skew = skew_boxes(ell, lam)
    return tuple(
        sum(skew[i][j - 1] for j in cols) for i, cols in enumerate(deleted_boxes(ell, lam))
    )


def column_deletion_map(ell: int, lam: Partition) -> dict[tuple[int, int], tuple[int, int]]:
    """Where each surviving box of ``lam`` lands in ``phi_tilde(ell, lam)``.

    A surviving box keeps its row and moves to its rank among the surviving
    columns of that row.
    """
    lam = _require_core(lam, ell)
    top = hooks(lam)[0] if lam else []
    gone = {j for j, h in enumerate(top, start=1) if (h - top[0]) % ell == 0}
    out = {}
    for i, part in enumerate(lam, start=1):
        rank = 0
        for j in range(1, part + 1):
            if j not in gone:
                rank += 1
                out[(i, j)] = (i, rank)
    return out


def skew_status_preserved(ell: int, lam: Partition) -> bool:
    """Surviving boxes are skew for ``ell`` exactly when their images are skew for ``ell - 1``."""
    lam = _require_core(lam, ell)
    if ell < 3:
        raise DomainError("column deletion needs ell >= 3")
    before = skew_boxes(ell, lam)
    image = phi_tilde(ell, lam)
    after = skew_boxes(ell - 1, image)
    return all(
        before[i - 1][j - 1] == after[r - 1][c - 1]
        for (i, j), (r, c) in column_deletion_map(ell, lam).items()
    )
