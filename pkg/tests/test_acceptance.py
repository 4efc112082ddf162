"""Acceptance gate: one PASS/FAIL line per criterion, all at exact tolerance.

Corpus for criteria 2-4: 200 seeded random graphs on at most 10 vertices plus
every graph on at most 7 vertices from the packaged graph6 stream.

Run directly (``python3 tests/test_acceptance.py``) or under pytest; either way
the criterion lines are printed at the end.
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402

from kegraph.catalog import catalog_lines, iter_catalog  # noqa: E402
from kegraph.critical import check_zhang, compute_critical_profile, critical_profile  # noqa: E402
from kegraph.families import _mu_alpha_induced, check_simplicial_complex  # noqa: E402
from kegraph.fixtures import run_fixtures  # noqa: E402
from kegraph.graph import encode_graph6, parse_graph6  # noqa: E402
from kegraph.independence import compute_omega, omega  # noqa: E402
from kegraph.matching import compute_maximum_matching, maximum_matching  # noqa: E402
from kegraph.report import Verdict  # noqa: E402
from kegraph.rng import SplitMix64, derive_seed  # noqa: E402
from kegraph.search import SearchSpec, erdos_renyi, run_search  # noqa: E402
from kegraph.theorems import SuiteOptions, run_suite  # noqa: E402

SEED = 20240601
RANDOM_GRAPHS = 200
RANDOM_MAX_N = 10
EXHAUSTIVE_MAX_N = 7
COMPLEX_MAX_N = 8
COMPLEX_CAP = 12
FIXTURE_SECONDS = 1.0

LINES: dict[int, str] = {}


def record(k: int, ok: bool, title: str, detail: str) -> None:
    line = f"criterion {k} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    LINES[k] = line
    print(line)


def clear_caches() -> None:
    for fn in (omega, critical_profile, maximum_matching, _mu_alpha_induced):
        fn.cache_clear()


def corpus(seed: int = SEED) -> list[str]:
    r = SplitMix64(seed)
    out = []
    for i in range(RANDOM_GRAPHS):
        n = 1 + r.randbelow(RANDOM_MAX_N)
        p = (0.15, 0.3, 0.5, 0.7)[r.randbelow(4)]
        out.append(encode_graph6(erdos_renyi(n, p, derive_seed(seed, f"acceptance/{i}"))))
    out += [line for line, _ in iter_catalog(1, EXHAUSTIVE_MAX_N)]
    return out


# -- criteria 2-6, each returning (ok, detail, machine document) ---------------------------

def crit_oracle(graphs: list[str]) -> tuple[bool, str, str]:
    mismatches, docs = [], []
    for g6 in graphs:
        g = parse_graph6(g6)
        fam = compute_omega(g)
        m = len(compute_maximum_matching(g))
        d = compute_critical_profile(g).d
        a_ref, sets_ref = oracles.omega(g)
        got = (fam.alpha, list(fam.sets), m, d)
        ref = (a_ref, sets_ref, oracles.mu(g), oracles.d_all(g))
        if got != ref:
            mismatches.append(g6)
        docs.append(json.dumps({"graph6": g6, "alpha": got[0], "omega": got[1], "mu": got[2], "d": got[3]}))
    detail = f"{len(graphs)} graphs, alpha/Omega/mu/d mismatches={len(mismatches)}"
    if mismatches:
        detail += f", first={mismatches[0]}"
    return not mismatches, detail, "\n".join(docs)


def crit_zhang(graphs: list[str]) -> tuple[bool, str, str]:
    violations, docs = [], []
    for g6 in graphs:
        g = parse_graph6(g6)
        d_all, d_ind = oracles.d_all(g), oracles.d_independent(g)
        rep = check_zhang(g)
        if d_all != d_ind or rep.verdict is not Verdict.HOLDS:
            violations.append(g6)
        docs.append(f"{g6} d={d_all} id={d_ind} {rep.verdict.value}")
    return not violations, f"{len(graphs)} graphs, violations={len(violations)}", "\n".join(docs)


def crit_suite(graphs: list[str], seed: int = SEED) -> tuple[bool, str, str]:
    opts = SuiteOptions(seed=seed, samples=1000)
    tally = {v: 0 for v in Verdict}
    fails, docs = [], []
    for g6 in graphs:
        reports = run_suite(parse_graph6(g6), opts=opts)
        for r in reports:
            tally[r.verdict] += 1
            if r.verdict is Verdict.FAILS:
                fails.append(f"{g6}:{r.theorem}")
        docs.append(json.dumps({"graph6": g6, **{r.theorem: r.verdict.value for r in reports}}))
    detail = ", ".join(f"{v.value}={n}" for v, n in tally.items())
    if fails:
        detail += f", first={fails[0]}"
    return not fails, f"{len(graphs)} graphs x 29 checks: {detail}", "\n".join(docs)


def crit_complex() -> tuple[bool, str, str]:
    checked = beyond_cap = 0
    violations, docs = [], []
    for g6, g in iter_catalog(1, COMPLEX_MAX_N):
        rep = check_simplicial_complex(g, COMPLEX_CAP)
        if rep.verdict is Verdict.SKIPPED_BUDGET:
            beyond_cap += 1
        else:
            checked += 1
            if rep.verdict is not Verdict.HOLDS:
                violations.append(g6)
        docs.append(f"{g6} {rep.verdict.value} {rep.witness}")
    detail = f"{checked} graphs with |Omega|<={COMPLEX_CAP} checked, {beyond_cap} outside the cap, violations={len(violations)}"
    return not violations, detail, "\n".join(docs)


def crit_conjecture(stream: Path) -> tuple[bool, str, str]:
    expected = sum(len(catalog_lines(n)) for n in range(1, EXHAUSTIVE_MAX_N + 1))
    res = run_search(SearchSpec("conjecture", "file", path=str(stream), n_min=1, n_max=64, seed=SEED))
    ok = not res.hits and res.examined == expected and res.skipped == 0
    detail = f"examined={res.examined} of {expected}, skipped={res.skipped}, counterexamples={len(res.hits)}"
    return ok, detail, res.render("machine", timing=False)


def write_stream(path: Path) -> Path:
    lines = [line for n in range(1, EXHAUSTIVE_MAX_N + 1) for line in catalog_lines(n)]
    path.write_text("".join(line + "\n" for line in lines))
    return path


def run_criteria(stream: Path) -> dict[int, tuple[bool, str, str]]:
    clear_caches()
    graphs = corpus()
    return {
        2: crit_oracle(graphs),
        3: crit_zhang(graphs),
        4: crit_suite(graphs),
        5: crit_complex(),
        6: crit_conjecture(stream),
    }


# -- pytest ----------------------------------------------------------------------------------

@pytest.fixture(scope="module")
def stream(tmp_path_factory):
    return write_stream(tmp_path_factory.mktemp("acceptance") / f"graphs_upto{EXHAUSTIVE_MAX_N}.g6")


@pytest.fixture(scope="module")
def first_run(stream):
    return run_criteria(stream)


TITLES = {
    2: "oracle equivalence",
    3: "d(G) over all subsets equals id(G)",
    4: "theorem suite has no fails verdict",
    5: "KE collections are hereditary",
    6: f"conjecture sweep n<={EXHAUSTIVE_MAX_N}",
}


def test_criterion_1_fixture_exactness():
    clear_caches()
    start = time.perf_counter()
    outcomes = run_fixtures()
    elapsed = time.perf_counter() - start
    failed = [o.line() for o in outcomes if not o.ok]
    ok = not failed and elapsed < FIXTURE_SECONDS
    record(1, ok, "fixture exactness", f"{len(outcomes) - len(failed)}/{len(outcomes)} exact, {elapsed:.3f}s < {FIXTURE_SECONDS}s")
    assert ok, failed


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_criteria_2_to_6(first_run, k):
    ok, detail, _ = first_run[k]
    record(k, ok, TITLES[k], detail)
    assert ok, detail


def test_criterion_7_determinism(first_run, stream):
    second = run_criteria(stream)
    differing = [k for k in first_run if first_run[k][2].encode() != second[k][2].encode()]
    sizes = sum(len(first_run[k][2].encode()) for k in first_run)
    record(7, not differing, "determinism of criteria 2-6", f"{sizes} bytes compared, differing criteria={differing or 'none'}")
    assert not differing


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
