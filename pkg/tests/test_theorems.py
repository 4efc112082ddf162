import pytest

from kegraph.fixtures import FIXTURES
from kegraph.graph import complete_graph, cycle_graph, empty_graph
from kegraph.report import Verdict
from kegraph.theorems import THEOREMS, SuiteOptions, run_suite

FAST = SuiteOptions(samples=200, witness_samples=40)


def test_registry_ids_unique_and_described():
    assert len(THEOREMS) == 29
    assert all(desc for _, desc in THEOREMS.values())


@pytest.mark.parametrize("g", [cycle_graph(5), complete_graph(1), empty_graph(0), empty_graph(3), complete_graph(6)])
def test_small_graphs_never_fail(g):
    reports = run_suite(g, opts=FAST)
    assert [r.theorem for r in reports] == list(THEOREMS)
    assert all(r.verdict in (Verdict.HOLDS, Verdict.HYPOTHESIS_NOT_MET) for r in reports), [r.summary() for r in reports if not r.ok]


def test_k1_all_pass():
    assert all(r.ok for r in run_suite(complete_graph(1)))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixtures_never_fail(name):
    reports = run_suite(FIXTURES[name], opts=FAST)
    assert not [r.summary() for r in reports if r.verdict is Verdict.FAILS]


def test_random_graphs_never_fail(rand_graphs):
    for g in rand_graphs:
        bad = [r.summary() for r in run_suite(g, opts=FAST) if r.verdict is Verdict.FAILS]
        assert not bad, (g, bad)


def test_seeded_determinism():
    g = FIXTURES["g1-fig2222"]
    a = [r.summary() for r in run_suite(g, opts=SuiteOptions(seed=3, samples=100))]
    b = [r.summary() for r in run_suite(g, opts=SuiteOptions(seed=3, samples=100))]
    assert a == b


def test_unknown_id():
    with pytest.raises(KeyError):
        run_suite(cycle_graph(5), ["nope"])
