"""Shared fixture graphs, golden matrices, and hypothesis strategies."""

from itertools import combinations

from hypothesis import strategies as st

from chromacert import EdgeLabeling, Graph

# 5-edge tree on 6 vertices whose orientation away from {0, 4, 5} has the
# golden uniform matrix below.
TREE6 = Graph.build(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])
TREE6_PAIRS = ((0, 1), (0, 2), (0, 3), (4, 3), (5, 3))
TREE6_MATRIX = (
    (0, 1, 1, 1, 0, 0),
    (-1, 0, 0, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0),
    (-1, 0, 0, 0, -1, -1),
    (0, 0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0, 0),
)

TRIANGLE = Graph.build(3, [(0, 1), (0, 2), (1, 2)])
# Orientation 0->1, 0->2, 2->1: one source, one sink, one mixed vertex.
TRIANGLE_PAIRS = ((0, 1), (0, 2), (2, 1))
TRIANGLE_MATRIX = (
    (0, 1, 1),
    (-1, 0, -1),
    (-1, 1, 0),
)

# Triangular prism: triangles {0, 3, 4} and {1, 2, 5} joined by the perfect
# matching (0,1), (2,3), (4,5). Every vertex has degree 3.
PRISM6 = Graph.build(6, [(0, 1), (0, 3), (0, 4), (1, 2), (1, 5),
                         (2, 3), (2, 5), (3, 4), (4, 5)])
PRISM6_PAIRS = ((0, 1), (0, 3), (0, 4), (2, 1), (5, 1), (2, 3), (2, 5), (3, 4), (5, 4))
PRISM6_MATRIX = (
    (0, 1, 0, 1, 1, 0),
    (-1, 0, -1, 0, 0, -1),
    (0, 1, 0, 1, 0, 1),
    (-1, 0, -1, 0, 1, 0),
    (-1, 0, 0, -1, 0, -1),
    (0, 1, -1, 0, 1, 0),
)


def tree6_labeling() -> EdgeLabeling:
    return EdgeLabeling.build(TREE6, TREE6_PAIRS)


def triangle_labeling() -> EdgeLabeling:
    return EdgeLabeling.build(TRIANGLE, TRIANGLE_PAIRS)


def prism6_labeling() -> EdgeLabeling:
    return EdgeLabeling.build(PRISM6, PRISM6_PAIRS)


def all_graphs(n: int):
    """Every labeled graph on n vertices, in edge-mask order."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.build(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


@st.composite
def graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.build(n, [e for e, keep in zip(pairs, picks) if keep])


@st.composite
def labeled_graphs(draw, max_n: int = 7):
    g = draw(graphs(max_n))
    flips = draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))
    pairs = [(v, u) if flip else (u, v) for (u, v), flip in zip(g.edges, flips)]
    return g, EdgeLabeling.build(g, pairs)


@st.composite
def bipartite_graphs(draw, max_n: int = 8):
    """Random graph together with a planted two-sided split it respects."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v]]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.build(n, [e for e, keep in zip(pairs, picks) if keep])
