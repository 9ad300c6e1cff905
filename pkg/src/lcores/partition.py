"""Partitions, boxes, hooks and residues, and the two l-core predicates."""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple


class DomainError(ValueError):
    """Raised when an argument is outside the domain of an operation."""


class Box(NamedTuple):
    """A cell of a Young diagram, 1-based, English notation."""

    row: int
    col: int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zero parts are dropped on construction, so ``Partition((3, 1, 0))``
    equals ``Partition((3, 1))``. Compares equal to the plain tuple of its parts.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise DomainError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def first(self) -> int:
        return self[0] if self else 0

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def boxes(self) -> Iterator[Box]:
        for i, part in enumerate(self, start=1):
            for j in range(1, part + 1):
                yield Box(i, j)

    def has_box(self, box: Box | tuple[int, int]) -> bool:
        row, col = box
        return 1 <= row <= len(self) and 1 <= col <= self[row - 1]

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return parse_partition(text)


def parse_partition(text: str) -> Partition:
    """Read ``"8,5,2,2,1,1,1"``; ``"-"`` (or an empty string) is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise DomainError(f"malformed partition: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise DomainError(f"malformed partition: {text!r}")
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    parts = list(lam)
    return ",".join(map(str, parts)) if parts else "-"


def _check_ell(ell: int) -> None:
    if ell < 2:
        raise DomainError(f"ell must be at least 2, got {ell}")


def column_length(lam: Partition, col: int) -> int:
    return sum(1 for p in lam if p >= col)


def hook_length(lam: Partition, box: Box | tuple[int, int]) -> int:
    row, col = box
    if not lam.has_box((row, col)):
        raise DomainError(f"box {(row, col)} is not in {lam!r}")
    arm = lam[row - 1] - col
    leg = column_length(lam, col) - row
    return arm + leg + 1


def hooks(lam: Partition) -> list[list[int]]:
    """Hook lengths of every box, row by row."""
    conj = transpose(lam)
    return [
        [part - j + conj[j - 1] - i + 1 for j in range(1, part + 1)]
        for i, part in enumerate(lam, start=1)
    ]


def first_column_hooks(lam: Partition) -> list[int]:
    r = len(lam)
    return [part + r - i for i, part in enumerate(lam, start=1)]


def residue(box: Box | tuple[int, int], ell: int) -> int:
    _check_ell(ell)
    row, col = box
    return (col - row) % ell


def region(box: Box | tuple[int, int], ell: int) -> int:
    """The r with (r-1)*ell <= col - row < r*ell."""
    _check_ell(ell)
    row, col = box
    return (col - row) // ell + 1


def is_core(lam: Partition, ell: int) -> bool:
    _check_ell(ell)
    return all(h % ell for row in hooks(lam) for h in row)


def _rim(lam: Partition) -> list[Box]:
    # one rim cell per content, ordered bottom-left to top-right
    cells = []
    for c in range(1 - len(lam), lam.first):
        row = max(i for i in range(1, len(lam) + 1) if lam.has_box((i, i + c)))
        cells.append(Box(row, row + c))
    return cells


def _is_diagram(cells: set[tuple[int, int]]) -> bool:
    rows: dict[int, int] = {}
    for r, c in cells:
        rows[r] = rows.get(r, 0) + 1
    lengths = [rows.get(r, 0) for r in range(1, max(rows, default=0) + 1)]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    return all((r, c) in cells for r, n in rows.items() for c in range(1, n + 1))


def is_core_rimhook(lam: Partition, ell: int) -> bool:
    """True iff no connected rim strip of ``ell`` boxes can be peeled off.

    Slides a window of ``ell`` consecutive rim cells along the rim and checks
    whether what remains is still a Young diagram. Slow, and meant as an
    independent cross-check of :func:`is_core`.
    """
    _check_ell(ell)
    rim = _rim(lam)
    cells = set(lam.boxes())
    for start in range(len(rim) - ell + 1):
        if _is_diagram(cells - set(rim[start:start + ell])):
            return False
    return True


def transpose(lam: Iterable[int]) -> Partition:
    parts = list(lam)
    return Partition(sum(1 for p in parts if p >= j) for j in range(1, (parts[0] if parts else 0) + 1))


def row_exposed_boxes(lam: Partition, pad_rows: int = 0) -> list[Box]:
    """The last box of each row, followed by ``pad_rows`` virtual column-0 boxes."""
    out = [Box(i, part) for i, part in enumerate(lam, start=1)]
    out += [Box(len(lam) + j, 0) for j in range(1, pad_rows + 1)]
    return out


def addable_boxes(lam: Partition) -> list[Box]:
    out = []
    parts = list(lam) + [0]
    for i, part in enumerate(parts, start=1):
        if i == 1 or parts[i - 2] > part:
            out.append(Box(i, part + 1))
    return out


def removable_boxes(lam: Partition) -> list[Box]:
    out = []
    for i, part in enumerate(lam, start=1):
        below = lam[i] if i < len(lam) else 0
        if part > below:
            out.append(Box(i, part))
    return out


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def gen(n: int, m: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for first in range(min(n, m), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    for p in gen(n, max_part):
        yield Partition(p)
