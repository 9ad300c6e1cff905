"""Beta-numbers and abacus diagrams.

An abacus with ``ell`` runners places position ``level * ell + runner`` on
level ``level`` of runner ``runner``; reading order is increasing position.
Every abacus here has cofinitely many beads below and cofinitely many gaps
above, so it is stored as a *floor* (all positions below it are beads, the
floor itself is the first gap) plus the finite set of beads at or above the
floor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .partition import DomainError, Partition, first_column_hooks, is_core


@dataclass(frozen=True)
class BetaNumbers:
    """The sequence ``head..., tail_start, tail_start - 1, ...``.

    Two instances are *equivalent* when they differ by a constant; use
    :meth:`equivalent` or compare :meth:`normalized` forms.
    """

    head: tuple[int, ...]
    tail_start: int

    def __post_init__(self):
        head = tuple(self.head)
        object.__setattr__(self, "head", head)
        if any(head[i] <= head[i + 1] for i in range(len(head) - 1)):
            raise DomainError(f"beta-numbers must strictly decrease: {head}")
        if head and head[-1] <= self.tail_start:
            raise DomainError("every head entry must exceed tail_start")

    def entries(self, n: int) -> list[int]:
        """The first ``n`` terms of the infinite sequence."""
        out = list(self.head[:n])
        t = self.tail_start
        while len(out) < n:
            out.append(t)
            t -= 1
        return out

    def shift(self, n: int) -> "BetaNumbers":
        return BetaNumbers(tuple(b + n for b in self.head), self.tail_start + n)

    def normalized(self) -> "BetaNumbers":
        """The representative whose tail is exactly -1, -2, -3, ..."""
        head, t = list(self.head), self.tail_start
        while head and head[-1] == t + 1:
            head.pop()
            t += 1
        return BetaNumbers(tuple(b - t - 1 for b in head), -1)

    def equivalent(self, other: "BetaNumbers") -> bool:
        return self.normalized() == other.normalized()

    def to_partition(self) -> Partition:
        t = self.tail_start
        n = len(self.head)
        # gaps below head[i] = positions in (t, head[i]) minus the head entries there
        return Partition(b - t - 1 - (n - 1 - i) for i, b in enumerate(self.head))

    def __str__(self) -> str:
        return ",".join(map(str, self.entries(len(self.head) + 2))) + ",..."


def beta_of(lam: Partition) -> BetaNumbers:
    """First-column hook lengths followed by -1, -2, -3, ..."""
    return BetaNumbers(tuple(first_column_hooks(lam)), -1)


@dataclass(frozen=True)
class Abacus:
    ell: int
    floor: int
    beads: frozenset[int]

    def __post_init__(self):
        if self.ell < 2:
            raise DomainError(f"an abacus needs at least 2 runners, got {self.ell}")
        beads = frozenset(self.beads)
        if any(b < self.floor for b in beads):
            raise DomainError("explicit beads must lie at or above the floor")
        floor = self.floor
        while floor in beads:
            beads = beads - {floor}
            floor += 1
        object.__setattr__(self, "floor", floor)
        object.__setattr__(self, "beads", beads)

    @classmethod
    def from_positions(cls, ell: int, positions: Iterable[int], floor: int) -> "Abacus":
        """Beads at every position below ``floor`` and at each of ``positions``."""
        return cls(ell, floor, frozenset(p for p in positions if p >= floor))

    @classmethod
    def from_levels(cls, levels: Iterable[int]) -> "Abacus":
        """The flush abacus whose runner ``i`` has beads at every level <= ``levels[i]``."""
        levels = list(levels)
        ell = len(levels)
        base = min(levels) + 1
        beads = {lv * ell + i for i, top in enumerate(levels) for lv in range(base, top + 1)}
        return cls(ell, base * ell, frozenset(beads))

    def is_bead(self, position: int) -> bool:
        return position < self.floor or position in self.beads

    @property
    def last_bead(self) -> int:
        return max(self.beads) if self.beads else self.floor - 1

    @property
    def levels(self) -> tuple[int, ...]:
        """Largest level holding a bead, per runner."""
        out = []
        for i in range(self.ell):
            on_runner = [b for b in self.beads if b % self.ell == i]
            top = max(on_runner) if on_runner else i + ((self.floor - 1 - i) // self.ell) * self.ell
            out.append(top // self.ell)
        return tuple(out)

    def runner_of(self, position: int) -> int:
        return position % self.ell

    def _base_level(self) -> int:
        return self.floor // self.ell

    def delete_runner(self, runner: int) -> "Abacus":
        """Drop one runner and renumber the rest, keeping every level."""
        if not 0 <= runner < self.ell:
            raise DomainError(f"no runner {runner} on a {self.ell}-abacus")
        if self.ell < 3:
            raise DomainError("cannot delete a runner from a 2-abacus")
        base = self._base_level()
        m = self.ell - 1
        beads = set()
        for p in range(base * self.ell, self.floor):
            beads.add(p)
        beads |= self.beads
        out = set()
        for p in beads:
            lv, i = divmod(p, self.ell)
            if i != runner:
                out.add(lv * m + (i if i < runner else i - 1))
        return Abacus(m, base * m, frozenset(out))

    def insert_runner(self, runner: int, top_level: int) -> "Abacus":
        """Insert a flush runner at index ``runner`` with beads at every level <= ``top_level``."""
        if not 0 <= runner <= self.ell:
            raise DomainError(f"cannot insert runner {runner} into a {self.ell}-abacus")
        base = min(self._base_level(), top_level + 1)
        n = self.ell + 1
        out = set()
        for p in set(range(base * self.ell, self.floor)) | self.beads:
            lv, i = divmod(p, self.ell)
            out.add(lv * n + (i if i < runner else i + 1))
        out |= {lv * n + runner for lv in range(base, top_level + 1)}
        return Abacus(n, base * n, frozenset(out))

    def gaps(self):
        """Gap positions in reading order (an infinite iterator)."""
        p = self.floor
        while True:
            if p not in self.beads:
                yield p
            p += 1

    def render(self, levels: tuple[int, int] | None = None) -> str:
        """ASCII picture; beads are shown as ``(n)``, gaps as ``n``."""
        if levels is None:
            lo = self.floor // self.ell - 1
            hi = max(self.last_bead, self.floor) // self.ell + 1
        else:
            lo, hi = levels
        width = max(len(str(p)) for p in (lo * self.ell, hi * self.ell + self.ell - 1)) + 2
        lines = [" ".join(f"{i:^{width}}" for i in range(self.ell))]
        for lv in range(lo, hi + 1):
            cells = []
            for i in range(self.ell):
                p = lv * self.ell + i
                cells.append(f"({p})" if self.is_bead(p) else f" {p} ")
            lines.append(" ".join(f"{c:^{width}}" for c in cells))
        return "\n".join(lines)


def abacus_from_beta(beta: BetaNumbers, ell: int) -> Abacus:
    """Circle exactly the entries of ``beta`` on an ``ell``-runner abacus."""
    if ell < 2:
        raise DomainError(f"ell must be at least 2, got {ell}")
    return Abacus(ell, beta.tail_start + 1, frozenset(beta.head))


def to_beta(abacus: Abacus) -> BetaNumbers:
    return BetaNumbers(tuple(sorted(abacus.beads, reverse=True)), abacus.floor - 1)


def partition_of(abacus: Abacus) -> Partition:
    """Count the gaps preceding each bead in reading order."""
    if not isinstance(abacus, Abacus):
        raise DomainError(f"not an abacus: {abacus!r}")
    beads = sorted(abacus.beads)
    return Partition(sorted((b - abacus.floor - k for k, b in enumerate(beads)), reverse=True))


def balance_number(abacus: Abacus) -> int:
    return sum(abacus.levels)


def shift(abacus: Abacus, n: int) -> Abacus:
    """Move every bead ``n`` steps forward in reading order."""
    return Abacus(abacus.ell, abacus.floor + n, frozenset(b + n for b in abacus.beads))


def is_flush(abacus: Abacus) -> bool:
    ell = abacus.ell
    for i in range(ell):
        first = abacus.floor + (i - abacus.floor) % ell
        on_runner = sorted(b for b in abacus.beads if b % ell == i)
        if on_runner != list(range(first, first + ell * len(on_runner), ell)):
            return False
    return True


def balanced_flush_abacus(lam: Partition, ell: int) -> Abacus:
    if not is_core(lam, ell):
        raise DomainError(f"{lam} is not a {ell}-core")
    a = abacus_from_beta(beta_of(lam), ell)
    return shift(a, -balance_number(a))
