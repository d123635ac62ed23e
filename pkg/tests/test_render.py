import xml.etree.ElementTree as ET

from torusmoves.braid import BraidWord, closure, torus_diagram
from torusmoves.diagram import Diagram
from torusmoves.render import chord_ascii, chord_svg

SVG = "{http://www.w3.org/2000/svg}"


def test_svg_is_well_formed_with_one_dot_per_pair():
    d = torus_diagram(2, 3)
    root = ET.fromstring(chord_svg(d))
    assert root.tag == SVG + "svg"
    lines = root.findall(SVG + "line")
    assert len(lines) == 3
    dots = [c for c in root.findall(SVG + "circle") if c.get("r") == "3.5"]
    assert len(dots) == 3
    assert all(c.get("fill") == "black" for c in dots)
    assert "x = 3" in chord_svg(d)


def test_svg_marks_negative_pairs_white():
    d = closure(BraidWord(3, (1, -1, 1, 2)))
    root = ET.fromstring(chord_svg(d))
    fills = {c.get("fill") for c in root.findall(SVG + "circle") if c.get("r") == "3.5"}
    assert "white" in fills


def test_ascii_matrix():
    text = chord_ascii(torus_diagram(2, 3))
    lines = text.splitlines()
    assert lines[0].startswith("gauss: 0")
    assert len(lines) == 2 + 3
    assert chord_ascii(Diagram.unknot()) == "gauss: (empty)\n"
