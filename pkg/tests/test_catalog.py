from collections import defaultdict

import pytest

from kegraph.catalog import EXPECTED_COUNTS, catalog_lines, catalog_path, iter_catalog, iter_graph6_file
from kegraph.errors import GraphFormatError
from kegraph.graph import encode_graph6

nx = pytest.importorskip("networkx")


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _classes(graphs):
    buckets = defaultdict(list)
    for h in graphs:
        buckets[(h.number_of_edges(), nx.weisfeiler_lehman_graph_hash(h))].append(h)
    return buckets


def test_counts_match_oeis():
    for n, expected in EXPECTED_COUNTS.items():
        assert len(catalog_lines(n)) == expected


def test_lines_sorted_and_canonical():
    for n in EXPECTED_COUNTS:
        lines = catalog_lines(n)
        assert lines == sorted(lines)
        assert len(set(lines)) == len(lines)


@pytest.mark.parametrize("n", range(1, 8))
def test_matches_atlas(n):
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n]
    ours = [_nx(g) for _, g in iter_catalog(n, n)]
    assert len(atlas) == len(ours)
    buckets = _classes(atlas)
    for h in ours:
        hits = [a for a in buckets[(h.number_of_edges(), nx.weisfeiler_lehman_graph_hash(h))] if nx.is_isomorphic(a, h)]
        assert len(hits) == 1


@pytest.mark.slow
def test_order_eight_pairwise_distinct():
    for bucket in _classes(_nx(g) for _, g in iter_catalog(8, 8)).values():
        for i in range(len(bucket)):
            for j in range(i + 1, len(bucket)):
                assert not nx.is_isomorphic(bucket[i], bucket[j])


def test_iter_graph6_file(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text(">>graph6<<C~\n\nDhc\n")
    got = [(line, encode_graph6(g)) for line, g in iter_graph6_file(p)]
    assert got == [("C~", "C~"), ("Dhc", "Dhc")]
    p.write_text("C~\nC\n")
    with pytest.raises(GraphFormatError, match=":2:"):
        list(iter_graph6_file(p))


def test_range_guard():
    with pytest.raises(ValueError):
        catalog_path(9)
