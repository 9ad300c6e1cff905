"""l-cores as minimal length coset representatives of the affine symmetric group.

Vectors of the type A root lattice are stored 0-based, ``v[0], ..., v[ell-1]``,
which is the runner-style ``b``-coordinatization ``(b_0, ..., b_{ell-1})``.
Formulas that are naturally stated in the 1-based ``a``-coordinates
``(a_1, ..., a_ell)`` go through :meth:`RootVector.a`, with ``a_j = b_{j-1}``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import product
from math import ceil
from typing import Iterable, Iterator, Sequence

from .abacus import Abacus, balanced_flush_abacus, partition_of
from .partition import (
    Box,
    DomainError,
    Partition,
    addable_boxes,
    is_core,
    region,
    removable_boxes,
    residue,
    row_exposed_boxes,
)


class RootVector(tuple):
    """An integer vector with zero coordinate sum."""

    def __new__(cls, coords: Iterable[int]) -> "RootVector":
        coords = tuple(int(c) for c in coords)
        if len(coords) < 2:
            raise DomainError("a root lattice vector needs at least 2 coordinates")
        if sum(coords) != 0:
            raise DomainError(f"coordinates of {coords} do not sum to zero")
        return super().__new__(cls, coords)

    @property
    def ell(self) -> int:
        return len(self)

    def a(self, j: int) -> int:
        """1-based coordinate ``a_j``."""
        if not 1 <= j <= len(self):
            raise IndexError(j)
        return self[j - 1]

    def __repr__(self) -> str:
        return f"RootVector({tuple(self)!r})"

    def __str__(self) -> str:
        return format_vector(self)

    @classmethod
    def parse(cls, text: str) -> "RootVector":
        text = text.strip().strip("()")
        try:
            return cls(int(c) for c in text.split(","))
        except ValueError:
            raise DomainError(f"malformed vector: {text!r}") from None


def format_vector(v: Sequence[int]) -> str:
    return "(" + ",".join(map(str, v)) + ")"


@dataclass(frozen=True)
class Word:
    """A word ``s_{i_1} s_{i_2} ... s_{i_p}`` in the Coxeter generators."""

    letters: tuple[int, ...]
    ell: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if any(not 0 <= i < self.ell for i in self.letters):
            raise DomainError(f"letters {self.letters} out of range for ell={self.ell}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(f"s{i}" for i in self.letters)

    @classmethod
    def parse(cls, text: str, ell: int) -> "Word":
        tokens = text.split()
        if any(not t.startswith("s") for t in tokens):
            raise DomainError(f"malformed word: {text!r}")
        return cls(tuple(int(t[1:]) for t in tokens), ell)


class GeneratorEffect(enum.Enum):
    ASCENT = "ascent"
    DESCENT = "descent"
    NEUTRAL = "neutral"


def _require_core(lam: Partition, ell: int) -> Partition:
    lam = Partition(lam)
    if not is_core(lam, ell):
        raise DomainError(f"{lam} is not a {ell}-core")
    return lam


def _require_generator(i: int, ell: int) -> None:
    if not 0 <= i < ell:
        raise DomainError(f"generator s{i} does not exist for ell={ell}")


def pi(v: Sequence[int]) -> Partition:
    """Core of the balanced flush abacus with runner ``j`` filled down to level ``v[j]``."""
    v = RootVector(v)
    return partition_of(Abacus.from_levels(v))


def pi_inv(lam: Partition, ell: int) -> RootVector:
    """Per-runner top bead levels of the balanced flush abacus of ``lam``."""
    return RootVector(balanced_flush_abacus(Partition(lam), ell).levels)


def n_vector(lam: Partition, ell: int) -> RootVector:
    """For each residue, the largest region holding a row-exposed box of that residue.

    The diagram is padded with ``ell`` empty rows whose virtual column-0 boxes
    count as row-exposed, so every residue occurs.
    """
    lam = _require_core(lam, ell)
    best: dict[int, int] = {}
    for box in row_exposed_boxes(lam, pad_rows=ell):
        i = residue(box, ell)
        r = region(box, ell)
        if i not in best or r > best[i]:
            best[i] = r
    return RootVector(best[i] for i in range(ell))


def apply_s_vector(i: int, v: Sequence[int]) -> RootVector:
    v = RootVector(v)
    ell = len(v)
    _require_generator(i, ell)
    out = list(v)
    if i == 0:
        out[0], out[-1] = v[-1] + 1, v[0] - 1
    else:
        out[i - 1], out[i] = v[i], v[i - 1]
    return RootVector(out)


def classify(i: int, lam: Partition, ell: int) -> GeneratorEffect:
    _require_generator(i, ell)
    b = pi_inv(_require_core(lam, ell), ell)
    left, right = b[i - 1], b[i] - (1 if i == 0 else 0)
    if left > right:
        return GeneratorEffect.ASCENT
    if left < right:
        return GeneratorEffect.DESCENT
    return GeneratorEffect.NEUTRAL


def apply_s_core(i: int, lam: Partition, ell: int) -> Partition:
    """Add every addable residue-i box, or remove every removable one.

    Works on the diagram alone. A core never has both addable and removable
    boxes of one residue; when it has neither it is returned unchanged.
    """
    _require_generator(i, ell)
    return _apply_s(i, _require_core(lam, ell), ell)


def _apply_s(i: int, lam: Partition, ell: int) -> Partition:
    add = [b for b in addable_boxes(lam) if residue(b, ell) == i]
    rem = [b for b in removable_boxes(lam) if residue(b, ell) == i]
    if add and rem:
        raise DomainError(f"{lam} has addable and removable {i}-boxes")
    parts = list(lam) + [0]
    for box in add:
        parts[box.row - 1] += 1
    for box in rem:
        parts[box.row - 1] -= 1
    return Partition(parts)


def canonical_word(lam: Partition, ell: int) -> Word:
    """Reduced word read off by repeatedly stripping the residue of the bottom row's last box."""
    lam = _require_core(lam, ell)
    letters = []
    while lam:
        i = residue(Box(len(lam), lam[-1]), ell)
        letters.append(i)
        lam = _apply_s(i, lam, ell)
    return Word(tuple(letters), ell)


def coxeter_length(lam: Partition, ell: int) -> int:
    """Sum over residues of the longest row whose last box has that residue."""
    lam = _require_core(lam, ell)
    longest: dict[int, int] = {}
    for row, part in enumerate(lam, start=1):
        i = residue(Box(row, part), ell)
        longest[i] = max(longest.get(i, 0), part)
    return sum(longest.values())


def _rightmost_max(v: Sequence[int]) -> int:
    """1-based index of the rightmost largest coordinate."""
    top = max(v)
    return max(j for j in range(1, len(v) + 1) if v[j - 1] == top)


def first_part_from_vector(v: Sequence[int]) -> int:
    """First part of ``pi(v)`` as ``(a_i - 1) * ell + i``."""
    v = RootVector(v)
    i = _rightmost_max(v)
    return (v.a(i) - 1) * v.ell + i


def first_part_gap_count(v: Sequence[int]) -> int:
    """First part of ``pi(v)`` by counting gaps before the last bead, runner by runner."""
    v = RootVector(v)
    i = _rightmost_max(v)
    top = v.a(i)
    return sum(top - v.a(j) for j in range(1, i)) + sum(
        top - v.a(j) - 1 for j in range(i + 1, v.ell + 1)
    )


def on_hyperplane(ell: int, k: int, v: Sequence[int]) -> bool:
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    v = RootVector(v)
    if v.ell != ell:
        raise DomainError(f"vector {v} does not have {ell} coordinates")
    j = k % ell or ell
    return v.a(j) == ceil(k / ell)


def psi(t: Sequence[int]) -> tuple[int, ...]:
    """``(a_1, ..., a_m) -> (a_m + 1, a_1, ..., a_{m-1})``."""
    t = tuple(t)
    return (t[-1] + 1,) + t[:-1]


def psi_inverse(t: Sequence[int]) -> tuple[int, ...]:
    t = tuple(t)
    return t[1:] + (t[0] - 1,)


def psi_power(t: Sequence[int], n: int) -> tuple[int, ...]:
    t = tuple(t)
    step = psi if n >= 0 else psi_inverse
    for _ in range(abs(n)):
        t = step(t)
    return t


def phi_on_lattice(v: Sequence[int]) -> RootVector:
    """Drop the rightmost largest coordinate ``a_i`` and apply psi ``a_i`` times.

    A negative ``a_i`` means ``|a_i|`` applications of the inverse of psi.
    """
    v = RootVector(v)
    if v.ell < 3:
        raise DomainError("the bijection needs ell >= 3")
    i = _rightmost_max(v)
    rest = v[: i - 1] + v[i:]
    return RootVector(psi_power(rest, v.a(i)))


def transpose_vector(v: Sequence[int]) -> RootVector:
    """The lattice image of transposing the core: ``(a_1..a_l) -> (-a_l..-a_1)``."""
    return RootVector(-c for c in reversed(tuple(v)))


@dataclass(frozen=True)
class Subexpression:
    word: Word
    kept: tuple[int, ...]
    image_word: Word


def phi_subexpression(lam: Partition, ell: int) -> Subexpression:
    """Split the canonical word of ``lam`` into the part surviving the bijection.

    Walking the reduction left to right, position ``j`` (0-based in ``kept``)
    is kept when the bottom row of the current core is in a different
    residue class from its first row. Kept letters are relabelled by the
    residue mod ``ell - 1`` the removed box has once the rows of the first
    row's class are deleted from ``lam``.
    """
    lam = _require_core(lam, ell)
    if not lam:
        raise DomainError("the empty partition has no subexpression")
    if ell < 3:
        raise DomainError("the bijection needs ell >= 3")
    word = canonical_word(lam, ell)

    def row_class(part: Partition, row: int) -> int:
        return residue(Box(row, part[row - 1]), ell)

    first = row_class(lam, 1)
    survivors = [r for r in range(1, len(lam) + 1) if row_class(lam, r) != first]
    new_row = {r: n for n, r in enumerate(survivors, start=1)}

    kept, image = [], []
    cur = lam
    for j, i in enumerate(word):
        m = len(cur)
        if row_class(cur, m) != row_class(cur, 1):
            if m not in new_row:
                raise DomainError(f"row {m} changed class while reducing {lam}")
            kept.append(j)
            image.append((cur[m - 1] - new_row[m]) % (ell - 1))
        cur = _apply_s(i, cur, ell)
    return Subexpression(word, tuple(kept), Word(tuple(image), ell - 1))


def lattice_vectors(ell: int, bound: int) -> Iterator[RootVector]:
    """Zero-sum vectors with every coordinate in ``[-bound, bound]``."""
    for head in product(range(-bound, bound + 1), repeat=ell - 1):
        last = -sum(head)
        if -bound <= last <= bound:
            yield RootVector(head + (last,))


def cores_up_to(ell: int, max_size: int) -> list[Partition]:
    """Every ``ell``-core with at most ``max_size`` boxes, by growing from the empty core."""
    start = Partition()
    seen = {start}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        for i in range(ell):
            nxt = _apply_s(i, lam, ell)
            if nxt.size > lam.size and nxt.size <= max_size and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda p: (p.size, tuple(p)))

