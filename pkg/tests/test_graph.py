import pytest
from hypothesis import given

from chromacert import (
    DuplicateEdgeError,
    Graph,
    GraphFormatError,
    InvalidParamsError,
    SelfLoopError,
    VertexRangeError,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    format_from_path,
    generate,
    gnp,
    parse_graph,
    petersen,
    planted_three_partition,
    serialize_graph,
)
from helpers import PRISM6, TREE6, graphs

K3_DIMACS = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
PRISM_EDGELIST = "1 2\n1 4\n1 5\n2 3\n2 6\n3 4\n3 6\n4 5\n5 6\n"


def test_build_normalizes_and_sorts():
    g = Graph.build(4, [(3, 1), (2, 0), (0, 1)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))
    assert g.m == 3


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        Graph.build(3, [(1, 1)])


def test_build_rejects_duplicate_even_reversed():
    with pytest.raises(DuplicateEdgeError):
        Graph.build(3, [(0, 1), (1, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(VertexRangeError):
        Graph.build(2, [(0, 2)])
    with pytest.raises(VertexRangeError):
        Graph.build(2, [(-1, 0)])
    with pytest.raises(VertexRangeError):
        Graph.build(-1, [])


def test_adjacency_is_symmetric_and_sorted():
    g = Graph.build(5, [(0, 4), (0, 2), (2, 4), (1, 2)])
    assert g.adjacency == ((2, 4), (2,), (0, 1, 4), (), (0, 2))
    for u in range(g.n):
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)


def test_parse_dimacs_triangle():
    g = parse_graph(K3_DIMACS, "dimacs")
    assert g == Graph.build(3, [(0, 1), (0, 2), (1, 2)])


def test_parse_dimacs_no_edges():
    g = parse_graph("p edge 2 0", "dimacs")
    assert g.n == 2 and g.edges == ()


def test_parse_dimacs_skips_comments():
    g = parse_graph("c hello\np edge 2 1\nc mid\ne 1 2\n", "dimacs")
    assert g.edges == ((0, 1),)


@pytest.mark.parametrize("text", [
    "",                                # no problem line
    "e 1 2\np edge 2 1\n",             # edge before problem line
    "p edge 2 1\np edge 2 1\ne 1 2\n", # duplicate problem line
    "p edge 2\ne 1 2\n",               # short problem line
    "p arc 2 1\ne 1 2\n",              # wrong family
    "p edge 2 2\ne 1 2\n",             # count mismatch
    "p edge 2 1\ne 1\n",               # short edge line
    "p edge 2 1\ne 1 x\n",             # non-integer
    "x 1 2\n",                         # unknown record
])
def test_parse_dimacs_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text, "dimacs")


def test_parse_dimacs_vertex_out_of_range():
    with pytest.raises(VertexRangeError):
        parse_graph("p edge 2 1\ne 1 3\n", "dimacs")
    with pytest.raises(VertexRangeError):
        parse_graph("p edge 2 1\ne 0 1\n", "dimacs")


def test_parse_dimacs_self_loop_and_duplicate():
    with pytest.raises(SelfLoopError):
        parse_graph("p edge 2 1\ne 1 1\n", "dimacs")
    with pytest.raises(DuplicateEdgeError):
        parse_graph("p edge 2 2\ne 1 2\ne 2 1\n", "dimacs")


def test_parse_edgelist_prism():
    g = parse_graph(PRISM_EDGELIST, "edgelist")
    assert g == PRISM6
    assert all(g.degree(v) == 3 for v in range(6))


def test_parse_edgelist_declared_isolates():
    g = parse_graph("n=4\n1 2\n", "edgelist")
    assert g.n == 4 and g.edges == ((0, 1),)
    with pytest.raises(VertexRangeError):
        parse_graph("n=2\n1 3\n", "edgelist")


def test_parse_edgelist_empty_and_zero_based_rejected():
    assert parse_graph("", "edgelist") == Graph.build(0, [])
    assert parse_graph("n=3\n", "edgelist").n == 3
    with pytest.raises(VertexRangeError):
        parse_graph("0 1\n", "edgelist")


def test_parse_json():
    g = parse_graph('{"n": 3, "edges": [[0, 1], [1, 2]]}', "json")
    assert g == Graph.build(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize("text", [
    "not json",
    '{"edges": []}',
    '{"n": "3", "edges": []}',
    '{"n": 3, "edges": [[0, 1, 2]]}',
    '{"n": 3, "edges": [[0, "1"]]}',
    '{"n": 3, "edges": 5}',
])
def test_parse_json_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text, "json")


def test_serialize_examples():
    k3 = complete_graph(3)
    assert serialize_graph(k3, "dimacs") == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
    assert serialize_graph(Graph.build(0, []), "dimacs") == "p edge 0 0\n"
    assert serialize_graph(PRISM6, "edgelist") == PRISM_EDGELIST
    assert serialize_graph(Graph.build(2, []), "edgelist") == "n=2\n"
    assert serialize_graph(Graph.build(0, []), "edgelist") == ""


def test_format_from_path():
    assert format_from_path("a/b.col") == "dimacs"
    assert format_from_path("c.edges") == "edgelist"
    assert format_from_path("d.json") == "json"
    with pytest.raises(GraphFormatError):
        format_from_path("odd.txt")


def test_unknown_format_rejected():
    with pytest.raises(GraphFormatError):
        parse_graph("", "yaml")
    with pytest.raises(GraphFormatError):
        serialize_graph(Graph.build(0, []), "yaml")


@pytest.mark.parametrize("fmt", ["dimacs", "edgelist", "json"])
@pytest.mark.parametrize("g", [
    Graph.build(0, []),
    Graph.build(3, []),
    complete_graph(3),
    TREE6,
    PRISM6,
    petersen(),
    Graph.build(7, [(0, 6), (2, 5)]),  # isolated vertices inside the range
])
def test_round_trip_fixed(fmt, g):
    assert parse_graph(serialize_graph(g, fmt), fmt) == g


@given(graphs())
def test_round_trip_property(g):
    for fmt in ("dimacs", "edgelist", "json"):
        assert parse_graph(serialize_graph(g, fmt), fmt) == g


def test_cycle_and_complete():
    assert cycle_graph(5).edges == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))
    assert complete_graph(3).edges == ((0, 1), (0, 2), (1, 2))
    assert complete_graph(0) == Graph.build(0, [])
    with pytest.raises(InvalidParamsError):
        cycle_graph(2)


def test_complete_multipartite():
    g = complete_multipartite((2, 2, 2))
    assert g.n == 6 and g.m == 12
    assert not g.has_edge(0, 1) and not g.has_edge(2, 3) and not g.has_edge(4, 5)
    with pytest.raises(InvalidParamsError):
        complete_multipartite(())
    with pytest.raises(InvalidParamsError):
        complete_multipartite((2, 0))


def test_gnp_bounds_and_determinism():
    assert gnp(5, 0.0, seed=1).m == 0
    assert gnp(5, 1.0, seed=1) == complete_graph(5)
    assert gnp(8, 0.4, seed=9) == gnp(8, 0.4, seed=9)
    assert gnp(8, 0.4, seed=9) != gnp(8, 0.4, seed=10)
    with pytest.raises(InvalidParamsError):
        gnp(3, 1.5, seed=0)
    with pytest.raises(InvalidParamsError):
        gnp(-1, 0.5, seed=0)


def test_planted_three_partition_structure():
    for seed in (0, 7):
        assert planted_three_partition((2, 2, 2), 1.0, seed) == complete_multipartite((2, 2, 2))
    g = planted_three_partition((3, 2, 4), 0.6, seed=3)
    # no edge inside a part, ever
    parts = [range(0, 3), range(3, 5), range(5, 9)]
    for part in parts:
        for u in part:
            for v in part:
                assert u == v or not g.has_edge(u, v)
    with pytest.raises(InvalidParamsError):
        planted_three_partition((2, 2), 0.5, seed=0)


def test_planted_complete_tripartite_is_three_chromatic():
    from chromacert import oracle_k_colorable

    g = planted_three_partition((2, 2, 2), 1.0, seed=0)
    assert oracle_k_colorable(g, 2).decision is False
    assert oracle_k_colorable(g, 3).decision is True


def test_petersen_shape():
    g = petersen()
    assert g.n == 10 and g.m == 15
    assert all(g.degree(v) == 3 for v in range(10))


def test_generate_dispatch():
    assert generate("cycle", {"k": 5}) == cycle_graph(5)
    assert generate("complete", {"k": 4}) == complete_graph(4)
    assert generate("complete-multipartite", {"sizes": (2, 2, 2)}) == complete_multipartite((2, 2, 2))
    assert generate("random-gnp", {"n": 6, "p": 0.5}, seed=3) == gnp(6, 0.5, seed=3)
    assert generate("random-planted-3-partition", {"sizes": (2, 2, 2), "p": 1.0}, seed=1) \
        == planted_three_partition((2, 2, 2), 1.0, seed=1)
    assert generate("petersen") == petersen()
    with pytest.raises(InvalidParamsError):
        generate("moebius", {})
    with pytest.raises(InvalidParamsError):
        generate("cycle", {})
    with pytest.raises(InvalidParamsError):
        generate("cycle", {"k": 5, "extra": 1})
    with pytest.raises(InvalidParamsError):
        generate("random-gnp", {"n": 3, "p": "high"})
