import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kegraph.errors import GraphFormatError, SizeGuardError
from kegraph.graph import (
    Graph,
    closed_neighborhood,
    complete_graph,
    cycle_graph,
    empty_graph,
    encode_graph6,
    format_edge_text,
    from_edge_list,
    from_named_edges,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_unicyclic,
    join_complete,
    neighborhood,
    parse_edge_text,
    parse_graph6,
    path_graph,
)
from kegraph.vertexset import from_members


def test_from_edge_list_k1_and_c4():
    k1 = from_edge_list(1, [])
    assert k1.n == 1 and k1.m == 0
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4 == cycle_graph(4)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 2)]])
def test_from_edge_list_rejects(edges):
    with pytest.raises(ValueError):
        from_edge_list(3, edges)


def test_graph_rejects_asymmetric_and_oversize():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(65, (0,) * 65)


def test_labels_do_not_affect_equality():
    g = from_edge_list(2, [(0, 1)])
    assert g == g.with_labels(["p", "q"])
    assert hash(g) == hash(g.with_labels(["p", "q"]))


def test_graph6_small_values():
    assert parse_graph6("@") == empty_graph(1)
    assert parse_graph6("C~") == complete_graph(4)
    # the standard encoding of two isolated vertices is "A?"; "A_" carries the one edge
    assert parse_graph6("A?") == empty_graph(2)
    assert parse_graph6("A_") == complete_graph(2)
    assert encode_graph6(empty_graph(0)) == "?"
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_graph6_known_strings():
    # reference strings from the published format description and nauty output
    assert encode_graph6(cycle_graph(5)) == "Dhc"
    assert encode_graph6(path_graph(4)) == "Ch"
    assert encode_graph6(complete_graph(6)) == "E~~w"


@pytest.mark.parametrize(
    "bad",
    ["", "C~~", "C", "A`", "B " , "~~", "D\x7f", "Ah"],
)
def test_graph6_errors(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_graph6_long_header():
    g = path_graph(63)
    s = encode_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g


graphs = st.integers(0, 12).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))), max_size=30).map(
        lambda es: from_edge_list(n, {(min(u, v), max(u, v)) for u, v in es if u != v})
    )
)


@settings(max_examples=300, deadline=None)
@given(graphs)
def test_graph6_round_trip(g):
    assert parse_graph6(encode_graph6(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs)
def test_edge_text_round_trip(g):
    assert parse_edge_text(format_edge_text(g)) == g


def test_edge_text_labels_and_comments():
    g = parse_edge_text("# triangle\n3 3\n0 1\n1 2 # inline\n2 0\nlabel 0 a\n")
    assert g == complete_graph(3)
    assert g.labels == ("a", "1", "2")


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n", "2 1\n0 1 2\n", "2 1\nx y\n", "2 1\n0 0\n"])
def test_edge_text_errors(text):
    with pytest.raises(ValueError):
        parse_edge_text(text)


def test_neighborhoods():
    c4 = cycle_graph(4)
    assert neighborhood(c4, 0b1) == 0b1010
    assert neighborhood(c4, 0) == 0
    assert neighborhood(complete_graph(4), 0b11) == 0b1111
    assert closed_neighborhood(c4, 0b1) == 0b1011


def test_induced_subgraph():
    sub, vmap = induced_subgraph(complete_graph(4), 0)
    assert sub.n == 0 and vmap == []
    sub, vmap = induced_subgraph(complete_graph(4), 0b0111)
    assert sub == complete_graph(3)
    sub, vmap = induced_subgraph(cycle_graph(5), from_members([0, 1, 3]))
    assert vmap == [0, 1, 3]
    assert sub.edges() == [(0, 1)]


def test_induced_subgraph_keeps_labels():
    g = from_named_edges(["a", "b", "c"], [("a", "b"), ("b", "c")])
    sub, _ = induced_subgraph(g, g.vset(["a", "c"]))
    assert sub.labels == ("a", "c") and sub.m == 0


def test_unicyclic():
    assert is_unicyclic(cycle_graph(5))
    assert not is_unicyclic(path_graph(4))
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_unicyclic(two_triangles)
    assert not is_connected(two_triangles)


def test_bipartite():
    assert is_bipartite(cycle_graph(6))
    assert not is_bipartite(cycle_graph(5))
    assert is_bipartite(empty_graph(3))


def test_join_complete():
    g = join_complete(path_graph(3), 4)
    assert g.n == 7
    assert g.m == 2 + 3 * 4 + 6
    with pytest.raises(SizeGuardError):
        join_complete(empty_graph(40), 41)


def test_named_lookup():
    g = from_named_edges(["u", "v"], [("u", "v")])
    assert g.vset(["v"]) == 0b10
    assert g.names(0b11) == ["u", "v"]
    with pytest.raises(KeyError):
        g.index("w")
