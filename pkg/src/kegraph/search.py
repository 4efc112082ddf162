"""Predicate-driven search over graph streams.

A search pulls graphs from a source (seeded Erdős–Rényi draws, a graph6 file, or
the packaged catalog), evaluates one predicate per graph and collects hits:

* ``conjecture``: |diadem|+|nucleus| = 2α but the graph is not KE (a counterexample).
* ``problem1``: core = nucleus.
* ``problem2``: |corona|+|core| = 2(|V|−μ).
* ``theorem:<id>``: the registered check returns ``fails``.

Every examined graph also runs the th9 sandwich; a violation aborts the run
since it can only mean an implementation bug.  Hits found by workers are
recomputed from scratch in the parent before they are reported.
"""

from __future__ import annotations

import json
import time
from collections.abc import Iterator
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path

from . import rng as _rng
from .catalog import CATALOG_MAX_N, iter_catalog, iter_graph6_file
from .critical import compute_critical_profile, critical_profile
from .errors import OmegaCapExceeded, SizeGuardError, TheoremViolation
from .graph import Graph, encode_graph6, format_set, is_connected, parse_graph6
from .independence import DEFAULT_OMEGA_CAP, compute_omega, omega
from .ke import check_th9
from .matching import compute_maximum_matching, mu
from .report import Verdict
from .rng import SplitMix64, derive_seed

MAX_ER_N = 20
MODES = ("conjecture", "problem1", "problem2")


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): pair (u, v), u < v, visited in lexicographic order, is an edge iff the
    next SplitMix64 float is below ``p``."""
    if not 0 <= n <= MAX_ER_N:
        raise ValueError(f"n must lie in 0..{MAX_ER_N}, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    r = SplitMix64(seed)
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if r.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@dataclass(frozen=True)
class SearchSpec:
    mode: str
    source: str  # "er", "file" or "catalog"
    budget: int = 1_000_000
    seed: int = 0
    er_n: int = 0
    er_p: float = 0.5
    path: str = ""
    n_min: int = 1
    n_max: int = CATALOG_MAX_N
    connected_only: bool = False
    omega_cap: int = DEFAULT_OMEGA_CAP

    def validate(self) -> None:
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.mode not in MODES and not self.mode.startswith("theorem:"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode.startswith("theorem:"):
            from .theorems import THEOREMS

            if self.mode[len("theorem:"):] not in THEOREMS:
                raise ValueError(f"unknown theorem id in {self.mode!r}")
        if self.source == "er":
            if not 0 <= self.er_n <= MAX_ER_N:
                raise ValueError(f"n must lie in 0..{MAX_ER_N}, got {self.er_n}")
            if not 0.0 <= self.er_p <= 1.0:
                raise ValueError(f"p must lie in [0, 1], got {self.er_p}")
        elif self.source == "file":
            if not self.path:
                raise ValueError("file source needs a path")
        elif self.source == "catalog":
            if not 1 <= self.n_min <= self.n_max <= CATALOG_MAX_N:
                raise ValueError(f"catalog range must lie in 1..{CATALOG_MAX_N}")
        else:
            raise ValueError(f"unknown source {self.source!r}")
        if self.omega_cap <= 0:
            raise ValueError("omega cap must be positive")

    def describe(self) -> str:
        if self.source == "er":
            src = f"er({self.er_n},{self.er_p})"
        elif self.source == "file":
            src = f"file({Path(self.path).name})"
        else:
            src = f"catalog({self.n_min}..{self.n_max})"
        return f"mode={self.mode} source={src} budget={self.budget} seed={self.seed}"


@dataclass(frozen=True)
class Hit:
    graph6: str
    snapshot: tuple[tuple[str, str], ...]

    def line(self) -> str:
        return " ".join([self.graph6] + [f"{k}={v}" for k, v in self.snapshot])

    def as_dict(self) -> dict[str, str]:
        return {"graph6": self.graph6, **dict(self.snapshot)}


@dataclass
class SearchResult:
    spec: SearchSpec
    examined: int = 0
    skipped_omega: int = 0
    skipped_size: int = 0
    filtered: int = 0
    hits: list[Hit] = field(default_factory=list)
    elapsed: float = 0.0
    prng: str = _rng.NAME

    @property
    def skipped(self) -> int:
        return self.skipped_omega + self.skipped_size

    def header(self) -> str:
        return f"# kegraph search prng={self.prng} {self.spec.describe()}"

    def footer(self, timing: bool = True) -> str:
        parts = [
            f"examined={self.examined}",
            f"skipped={self.skipped}",
            f"skipped_omega={self.skipped_omega}",
            f"skipped_size={self.skipped_size}",
            f"filtered={self.filtered}",
            f"hits={len(self.hits)}",
            f"seed={self.spec.seed}",
        ]
        if timing:
            parts.append(f"elapsed={self.elapsed:.3f}s")
        return " ".join(parts)

    def render(self, fmt: str = "text", timing: bool = True) -> str:
        if fmt == "machine":
            lines = [json.dumps({"prng": self.prng, "spec": self.spec.describe()}, ensure_ascii=False)]
            lines += [json.dumps(h.as_dict(), ensure_ascii=False) for h in self.hits]
            summary = {
                "examined": self.examined,
                "skipped": self.skipped,
                "skipped_omega": self.skipped_omega,
                "skipped_size": self.skipped_size,
                "filtered": self.filtered,
                "hits": len(self.hits),
                "seed": self.spec.seed,
            }
            if timing:
                summary["elapsed"] = round(self.elapsed, 3)
            lines.append(json.dumps(summary))
        else:
            lines = [self.header()] + [h.line() for h in self.hits] + [self.footer(timing)]
        return "\n".join(lines) + "\n"


# -- sources -------------------------------------------------------------------------

def iter_source(spec: SearchSpec) -> Iterator[str]:
    """graph6 strings in stream order, at most ``budget`` of them."""
    count = 0
    if spec.source == "er":
        stream: Iterator[str] = (
            encode_graph6(erdos_renyi(spec.er_n, spec.er_p, derive_seed(spec.seed, f"er/{i}")))
            for i in range(spec.budget)
        )
    elif spec.source == "file":
        stream = (line for line, _ in iter_graph6_file(spec.path))
    else:
        stream = (line for line, _ in iter_catalog(spec.n_min, spec.n_max))
    for g6 in stream:
        if count >= spec.budget:
            return
        count += 1
        yield g6


# -- predicates ------------------------------------------------------------------------

@dataclass(frozen=True)
class _Invariants:
    alpha: int
    mu: int
    core: int
    corona: int
    omega_size: int
    d: int
    ker: int
    diadem: int
    nucleus: int


def _invariants(g: Graph, cap: int, fresh: bool) -> _Invariants:
    if fresh:
        fam = compute_omega(g, cap)
        m = len(compute_maximum_matching(g))
        prof = compute_critical_profile(g)
    else:
        fam = omega(g, cap)
        m = mu(g)
        prof = critical_profile(g)
    return _Invariants(fam.alpha, m, fam.core, fam.corona, len(fam), prof.d, prof.ker, prof.diadem, prof.nucleus)


def _is_hit(g: Graph, mode: str, inv: _Invariants) -> bool:
    ke = inv.alpha + inv.mu == g.n
    if mode == "conjecture":
        return inv.diadem.bit_count() + inv.nucleus.bit_count() == 2 * inv.alpha and not ke
    if mode == "problem1":
        return inv.core == inv.nucleus
    if mode == "problem2":
        return inv.corona.bit_count() + inv.core.bit_count() == 2 * (g.n - inv.mu)
    raise ValueError(mode)


def _snapshot(g: Graph, inv: _Invariants, extra: dict[str, str] | None = None) -> tuple[tuple[str, str], ...]:
    items = [
        ("n", str(g.n)),
        ("m", str(g.m)),
        ("alpha", str(inv.alpha)),
        ("mu", str(inv.mu)),
        ("is_ke", str(inv.alpha + inv.mu == g.n).lower()),
        ("omega", str(inv.omega_size)),
        ("d", str(inv.d)),
        ("core", format_set(g, inv.core)),
        ("corona", format_set(g, inv.corona)),
        ("ker", format_set(g, inv.ker)),
        ("diadem", format_set(g, inv.diadem)),
        ("nucleus", format_set(g, inv.nucleus)),
    ]
    items += sorted((extra or {}).items())
    return tuple(items)


def _theorem_report(g: Graph, tid: str, seed: int):
    from .theorems import SuiteOptions, run_suite

    return run_suite(g, [tid], SuiteOptions(seed=seed))[0]


def _sanity(g: Graph, g6: str) -> None:
    rep = check_th9(g)
    if rep.verdict is Verdict.FAILS:
        raise TheoremViolation(f"th9 sandwich violated on {g6}: {rep.details}")


def _evaluate(job: tuple[str, SearchSpec]) -> tuple[str, str, tuple]:
    """Classify one graph: ("hit" | "miss" | "filtered" | "skip-omega" | "skip-size", g6, snapshot)."""
    g6, spec = job
    g = parse_graph6(g6)
    if not spec.n_min <= g.n <= spec.n_max and spec.source != "er":
        return "filtered", g6, ()
    if spec.connected_only and not is_connected(g):
        return "filtered", g6, ()
    try:
        inv = _invariants(g, spec.omega_cap, fresh=False)
        _sanity(g, g6)
        if spec.mode.startswith("theorem:"):
            rep = _theorem_report(g, spec.mode[len("theorem:"):], spec.seed)
            if rep.verdict is Verdict.FAILS:
                return "hit", g6, _snapshot(g, inv, {"verdict": rep.verdict.value, "witness": rep.witness or "-"})
            return "miss", g6, ()
        if _is_hit(g, spec.mode, inv):
            return "hit", g6, _snapshot(g, inv)
        return "miss", g6, ()
    except OmegaCapExceeded:
        return "skip-omega", g6, ()
    except SizeGuardError:
        return "skip-size", g6, ()


def _clear_caches() -> None:
    from .families import _mu_alpha_induced
    from .matching import maximum_matching

    for fn in (omega, critical_profile, maximum_matching, _mu_alpha_induced):
        fn.cache_clear()


def _recheck(g6: str, spec: SearchSpec, snapshot: tuple) -> Hit:
    g = parse_graph6(g6)
    inv = _invariants(g, spec.omega_cap, fresh=True)
    if spec.mode.startswith("theorem:"):
        _clear_caches()
        rep = _theorem_report(g, spec.mode[len("theorem:"):], spec.seed)
        confirmed = rep.verdict is Verdict.FAILS
        fresh = _snapshot(g, inv, {"verdict": rep.verdict.value, "witness": rep.witness or "-"})
    else:
        confirmed = _is_hit(g, spec.mode, inv)
        fresh = _snapshot(g, inv)
    if not confirmed or fresh != snapshot:
        raise TheoremViolation(f"hit on {g6} did not survive a fresh recomputation")
    return Hit(g6, fresh)


def run_search(spec: SearchSpec, jobs: int = 1) -> SearchResult:
    spec.validate()
    start = time.perf_counter()
    result = SearchResult(spec)
    pending: list[tuple[str, tuple]] = []
    work = ((g6, spec) for g6 in iter_source(spec))
    if jobs > 1:
        with Pool(jobs) as pool:
            outcomes = list(pool.imap(_evaluate, work, chunksize=64))
    else:
        outcomes = map(_evaluate, work)
    for status, g6, snap in outcomes:
        if status == "filtered":
            result.filtered += 1
            continue
        if status == "skip-omega":
            result.skipped_omega += 1
            continue
        if status == "skip-size":
            result.skipped_size += 1
            continue
        result.examined += 1
        if status == "hit":
            pending.append((g6, snap))
    # single-threaded confirmation, never trusting the fast path
    result.hits = sorted((_recheck(g6, spec, snap) for g6, snap in pending), key=lambda h: h.graph6)
    result.elapsed = time.perf_counter() - start
    return result
