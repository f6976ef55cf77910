from outerdom.dot import ht_to_dot, mop_to_dot, to_dot
from outerdom.hamiltonian import HamTriangulation
from outerdom.mop import MopGraph

TRIANGLE_DOT = """\
graph mop_3 {
  layout=circo;
  node [shape=circle, fontname="Helvetica"];
  1 [style=filled, fillcolor=lightgrey, peripheries=2];
  2 [style=filled, fillcolor=lightgrey];
  3 [style=filled, fillcolor=lightgrey];
  1 -- 2;
  2 -- 3;
  3 -- 1;
}
"""


def test_mop_to_dot_triangle(triangle: MopGraph) -> None:
    """Verify the full diagram of the triangle."""
    assert mop_to_dot(triangle, [1]) == TRIANGLE_DOT


def test_mop_to_dot_marks(fan6: MopGraph) -> None:
    """Verify chords are dashed and the bad vertex is outlined."""
    lines = mop_to_dot(fan6).splitlines()

    assert lines[0] == "graph mop_6 {"
    assert "  2 [style=filled, fillcolor=lightgrey, color=red];" in lines
    assert "  6 [style=filled, fillcolor=lightgrey];" in lines
    assert "  3;" in lines
    assert "  1 -- 4 [style=dashed];" in lines
    assert "  6 -- 1;" in lines


def test_ht_to_dot(octa: HamTriangulation) -> None:
    """Verify inner chords are blue and outer chords green."""
    lines = ht_to_dot(octa, [1, 4]).splitlines()

    assert lines[0] == "graph ht_6 {"
    assert "  1 [style=filled, fillcolor=lightgrey, peripheries=2];" in lines
    assert "  1 -- 3 [color=blue];" in lines
    assert "  2 -- 4 [color=green, style=dashed];" in lines
    assert lines[-1] == "}"


def test_to_dot_dispatches(fan6: MopGraph, octa: HamTriangulation) -> None:
    """Verify both graph types are accepted."""
    assert to_dot(fan6) == mop_to_dot(fan6)
    assert to_dot(octa) == ht_to_dot(octa)
