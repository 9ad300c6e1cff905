import itertools
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from lcores.affine import coxeter_length, on_hyperplane, pi
from lcores.alcoves import SCALE, alcove_svg, hexagons, project
from lcores.partition import DomainError

NS = {"svg": "http://www.w3.org/2000/svg"}


def parse(svg):
    return ET.fromstring(svg.encode())


def groups(root):
    return root.findall("svg:g", NS)


def center(g):
    return tuple(int(c) for c in g.get("data-a").split(","))


def points(polygon):
    return sorted(tuple(float(c) for c in p.split(",")) for p in polygon.get("points").split())


def test_one_hexagon_per_lattice_point():
    root = parse(alcove_svg(6, 3))
    want = sum(1 for a in itertools.product(range(-3, 4), repeat=3) if sum(a) == 0)
    assert len(groups(root)) == want == 37
    for g in groups(root):
        assert len(g.findall("svg:polygon[@class='alcove']", NS)) == 5
        assert len(g.findall("svg:polygon[@class='alcove core-alcove']", NS)) == 1
        assert len(g.findall("svg:circle", NS)) == 1


def test_highlighted_hexagons_on_hyperplane():
    root = parse(alcove_svg(6, 3))
    lit = {center(g) for g in groups(root) if "highlight" in g.get("class").split()}
    window = {a for a in itertools.product(range(-3, 4), repeat=3) if sum(a) == 0}
    assert lit == {a for a in window if on_hyperplane(3, 6, a)}
    assert lit


def test_origin_shades_fundamental_alcove():
    root = parse(alcove_svg(6, 3))
    origin = next(g for g in groups(root) if center(g) == (0, 0, 0))
    assert origin.get("data-first-part") == "0"
    shaded = origin.find("svg:polygon[@class='alcove core-alcove']", NS)
    third = Fraction(1, 3)
    corners = [(0, 0, 0), (2 * third, -third, -third), (third, third, -2 * third)]
    want = sorted((SCALE * x, -SCALE * y) for x, y in map(project, corners))
    got = points(shaded)
    assert len(got) == 3
    for p, q in zip(got, want):
        assert p == pytest.approx(q, abs=1e-3)


def test_core_alcove_is_unique_and_has_core_length():
    for h in hexagons(6, 3):
        best = min(h.alcove_lengths)
        assert h.alcove_lengths.count(best) == 1
        assert best == coxeter_length(pi(h.center), 3)
        assert h.first_part == pi(h.center).first


def test_deterministic():
    assert alcove_svg(4, 2) == alcove_svg(4, 2)


@pytest.mark.parametrize("radius", [0, -1])
def test_bad_radius(radius):
    with pytest.raises(DomainError):
        alcove_svg(6, radius)
