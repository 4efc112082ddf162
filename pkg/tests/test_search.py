import pytest

from kegraph.errors import TheoremViolation
from kegraph.graph import complete_graph, empty_graph, encode_graph6
from kegraph.fixtures import FIXTURES
from kegraph.rng import NAME
from kegraph.search import SearchSpec, erdos_renyi, run_search
import kegraph.search as search_mod


def test_erdos_renyi_extremes_and_determinism():
    assert erdos_renyi(6, 0.0, 1) == empty_graph(6)
    assert erdos_renyi(6, 1.0, 1) == complete_graph(6)
    assert encode_graph6(erdos_renyi(8, 0.5, 42)) == encode_graph6(erdos_renyi(8, 0.5, 42))
    with pytest.raises(ValueError):
        erdos_renyi(21, 0.5, 0)
    with pytest.raises(ValueError):
        erdos_renyi(5, 1.5, 0)


@pytest.mark.parametrize(
    "spec",
    [
        SearchSpec("conjecture", "er", budget=0, er_n=5),
        SearchSpec("conjecture", "er", er_n=21),
        SearchSpec("conjecture", "er", er_n=5, er_p=-0.1),
        SearchSpec("bogus", "catalog"),
        SearchSpec("theorem:nope", "catalog"),
        SearchSpec("conjecture", "catalog", n_min=3, n_max=9),
        SearchSpec("conjecture", "file"),
        SearchSpec("conjecture", "web"),
    ],
)
def test_invalid_specs(spec):
    with pytest.raises(ValueError):
        run_search(spec)


def test_problem2_includes_remark_graphs():
    res = run_search(SearchSpec("problem2", "catalog", n_min=4, n_max=7))
    hits = {h.graph6 for h in res.hits}
    assert encode_graph6(complete_graph(4)) in hits
    assert encode_graph6(complete_graph(6)) in hits
    # K5 with two pendant vertices on one vertex, relabelled to the catalog's representative
    k5p = FIXTURES["k5-two-pendants"]
    from kegraph.catalog import iter_catalog
    import networkx as nx

    def as_nx(g):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        return h

    target = as_nx(k5p)
    reps = [line for line, g in iter_catalog(7, 7) if g.m == k5p.m and nx.is_isomorphic(as_nx(g), target)]
    assert len(reps) == 1 and reps[0] in hits


def test_conjecture_small_and_skips():
    res = run_search(SearchSpec("conjecture", "catalog", n_min=1, n_max=6))
    assert res.hits == [] and res.examined == 1 + 2 + 4 + 11 + 34 + 156 and res.skipped == 0
    res = run_search(SearchSpec("conjecture", "catalog", n_min=6, n_max=6, omega_cap=2))
    assert res.skipped_omega > 0 and res.examined + res.skipped == 156


def test_filters_and_budget():
    res = run_search(SearchSpec("problem1", "catalog", n_min=5, n_max=5, connected_only=True))
    assert res.examined == 21 and res.filtered == 13
    res = run_search(SearchSpec("problem1", "catalog", n_min=1, n_max=8, budget=10))
    assert res.examined + res.filtered == 10


def test_file_source(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text("C~\nE~~w\nDhc\n")
    res = run_search(SearchSpec("problem2", "file", path=str(p), n_min=1, n_max=64))
    assert [h.graph6 for h in res.hits] == ["C~", "E~~w"]
    assert res.examined == 3


def test_theorem_mode_and_render():
    spec = SearchSpec("theorem:th9", "er", budget=30, er_n=7, seed=4)
    res = run_search(spec)
    assert res.hits == [] and res.examined == 30
    text = res.render(timing=False)
    assert text.splitlines()[0].startswith(f"# kegraph search prng={NAME}")
    assert text.splitlines()[-1] == "examined=30 skipped=0 skipped_omega=0 skipped_size=0 filtered=0 hits=0 seed=4"
    assert res.render("machine", timing=False) == run_search(spec).render("machine", timing=False)


def test_parallel_matches_serial():
    spec = SearchSpec("problem1", "er", budget=200, er_n=8, er_p=0.3, seed=11)
    a = run_search(spec).render("machine", timing=False)
    b = run_search(spec, jobs=2).render("machine", timing=False)
    assert a == b


def test_hit_lines_are_flat():
    res = run_search(SearchSpec("problem2", "catalog", n_min=3, n_max=3))
    for h in res.hits:
        assert " " not in h.graph6
        assert all("=" in tok for tok in h.line().split()[1:])


def test_stale_hits_are_caught(monkeypatch):
    real = search_mod._is_hit
    calls = {"n": 0}

    def flaky(g, mode, inv):
        calls["n"] += 1
        # the parallel path claims a hit that a fresh computation will not confirm
        return True if calls["n"] == 1 else real(g, mode, inv)

    monkeypatch.setattr(search_mod, "_is_hit", flaky)
    with pytest.raises(TheoremViolation):
        run_search(SearchSpec("conjecture", "catalog", n_min=1, n_max=1))


def test_th9_violation_aborts(monkeypatch):
    from kegraph.report import TheoremReport, Verdict

    monkeypatch.setattr(search_mod, "check_th9", lambda g: TheoremReport("th9", Verdict.FAILS))
    with pytest.raises(TheoremViolation):
        run_search(SearchSpec("conjecture", "catalog", n_min=2, n_max=2))
