import pytest

from evencircuits import parse_digraph, parse_graph

# 5-vertex graph: two triangles glued at x3; T1..T6 in input order
TWO_TRIANGLES = "x1 x2\nx2 x3\nx1 x3\nx3 x4\nx4 x5\nx3 x5\n"

# two triangles joined by the bridge edge T4
BRIDGED_TRIANGLES = "x1 x2\nx2 x3\nx1 x3\nx3 x4\nx4 x5\nx5 x6\nx4 x6\n"

# two squares sharing the edge T4, plus the isolated edge T8
TWO_SQUARES = "x1 x2\nx2 x3\nx3 x4\nx1 x4\nx4 x5\nx5 x6\nx6 x1\nx7 x8\n"

# 5-vertex digraph with the single directed cycle z2->z3->z5->z4->z2
FIVE_VERTEX_DIGRAPH = "z1 z2\nz2 z3\nz1 z3\nz4 z2\nz5 z4\nz3 z5\n"


@pytest.fixture
def two_triangles():
    return parse_graph(TWO_TRIANGLES)


@pytest.fixture
def bridged_triangles():
    return parse_graph(BRIDGED_TRIANGLES)


@pytest.fixture
def two_squares():
    return parse_graph(TWO_SQUARES)


@pytest.fixture
def five_vertex_digraph():
    return parse_digraph(FIVE_VERTEX_DIGRAPH)
