"""SVG picture of the A2 root lattice plane with its hexagons of alcoves (ell = 3 only).

Each lattice point ``a`` carries the hexagon ``B + a`` made of six triangular
alcoves. The alcove needing the fewest hyperplane crossings to reach the
fundamental alcove is the one indexed by the 3-core ``pi(a)``; it is shaded in
a color picked from the first part of ``pi(a)``. Hexagons whose core has first
part ``k`` get a heavy outline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import quoteattr

from .affine import lattice_vectors, pi
from .partition import DomainError

ELL = 3
SCALE = 36.0

PALETTE = (
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
)

POSITIVE_ROOTS = ((1, -1, 0), (0, 1, -1), (1, 0, -1))

_THIRD = Fraction(1, 3)
# corners of the hexagon around the origin: the six permutations of (2/3, -1/3, -1/3) and their negatives
_CORNERS = [
    tuple(Fraction(c) for c in v)
    for v in {
        (2 * _THIRD, -_THIRD, -_THIRD), (-_THIRD, 2 * _THIRD, -_THIRD), (-_THIRD, -_THIRD, 2 * _THIRD),
        (-2 * _THIRD, _THIRD, _THIRD), (_THIRD, -2 * _THIRD, _THIRD), (_THIRD, _THIRD, -2 * _THIRD),
    }
]
_FUNDAMENTAL_CENTROID = (_THIRD, Fraction(0), -_THIRD)


def project(v) -> tuple[float, float]:
    """Orthogonal projection of the zero-sum plane onto R^2, roots of unit length."""
    x = (v[0] - v[1]) / math.sqrt(2)
    y = (v[0] + v[1] - 2 * v[2]) / math.sqrt(6)
    return x / math.sqrt(2), y / math.sqrt(2)


_CORNERS.sort(key=lambda c: math.atan2(project(c)[1], project(c)[0]))


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def crossings(point) -> int:
    """Hyperplanes separating ``point`` (off every hyperplane) from the fundamental alcove."""
    return sum(
        abs(math.floor(_dot(point, alpha)) - math.floor(_dot(_FUNDAMENTAL_CENTROID, alpha)))
        for alpha in POSITIVE_ROOTS
    )


@dataclass(frozen=True)
class Hexagon:
    center: tuple[int, int, int]
    first_part: int
    highlighted: bool
    core_alcove: int
    alcove_lengths: tuple[int, ...]

    def alcove(self, j: int) -> list[tuple[Fraction, ...]]:
        a = tuple(Fraction(c) for c in self.center)
        u, w = _CORNERS[j], _CORNERS[(j + 1) % 6]
        return [a, tuple(x + y for x, y in zip(a, u)), tuple(x + y for x, y in zip(a, w))]


def hexagons(k: int, radius: int) -> list[Hexagon]:
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")
    out = []
    for a in lattice_vectors(ELL, radius):
        lengths = []
        for j in range(6):
            u, w = _CORNERS[j], _CORNERS[(j + 1) % 6]
            centroid = tuple(c + (x + y) / 3 for c, x, y in zip(a, u, w))
            lengths.append(crossings(centroid))
        best = min(lengths)
        first = pi(a).first
        out.append(Hexagon(tuple(a), first, first == k, lengths.index(best), tuple(lengths)))
    return out


def _points(vertices) -> str:
    return " ".join(f"{SCALE * x:.3f},{-SCALE * y:.3f}" for x, y in (project(v) for v in vertices))


def alcove_svg(k: int, radius: int) -> str:
    """An SVG 1.1 document for the hexagon window of the given ``radius``."""
    hexes = hexagons(k, radius)
    extent = SCALE * (radius * math.sqrt(2) + 1.5)
    size = 2 * extent
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="{-extent:.3f} {-extent:.3f} {size:.3f} {size:.3f}">',
        f"<title>3-cores on the A2 root lattice, first part {k} highlighted</title>",
    ]
    for h in hexes:
        cls = "hexagon highlight" if h.highlighted else "hexagon"
        data = ",".join(map(str, h.center))
        lines.append(
            f'<g class="{cls}" data-a={quoteattr(data)} data-first-part="{h.first_part}" '
            f'data-length="{h.alcove_lengths[h.core_alcove]}">'
        )
        for j in range(6):
            if j == h.core_alcove:
                fill = PALETTE[h.first_part % len(PALETTE)]
                lines.append(f'<polygon class="alcove core-alcove" points="{_points(h.alcove(j))}" '
                             f'fill="{fill}" stroke="#444" stroke-width="0.5"/>')
            else:
                lines.append(f'<polygon class="alcove" points="{_points(h.alcove(j))}" '
                             f'fill="none" stroke="#bbb" stroke-width="0.5"/>')
        outline = [tuple(c + x for c, x in zip(h.center, u)) for u in _CORNERS]
        width = 2.5 if h.highlighted else 1
        lines.append(f'<polygon class="hexagon-outline" points="{_points(outline)}" '
                     f'fill="none" stroke="#000" stroke-width="{width}"/>')
        x, y = project(h.center)
        lines.append(f'<circle class="lattice-point" cx="{SCALE * x:.3f}" cy="{-SCALE * y:.3f}" r="2.5" fill="#000"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
