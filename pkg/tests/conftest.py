import random

import pytest

from kegraph.graph import from_edge_list
from kegraph.rng import SplitMix64


def random_graph(n, p, seed):
    r = SplitMix64(seed)
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if r.random() < p])


@pytest.fixture
def rand_graphs():
    """Deterministic mixed-density graphs on 1..9 vertices."""
    out = []
    for i in range(60):
        r = random.Random(i)
        out.append(random_graph(r.randint(1, 9), r.choice([0.2, 0.35, 0.5, 0.7]), i))
    return out


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.LINES):
        terminalreporter.write_line(mod.LINES[k])
