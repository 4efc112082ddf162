"""Difference, critical difference, critical independent sets, ker, diadem and nucleus.

Everything here is exact and exponential: the critical independent sets are found
by scanning every independent set, and d(G) is cross-checked by scanning every
vertex subset.  Both scans live in the kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import kernels
from .errors import SizeGuardError
from .graph import Graph, format_set, neighborhood
from .independence import omega
from .report import TheoremReport, Verdict, holds_if
from .rng import SplitMix64
from .vertexset import intersection_all, is_subset, union_all

CRITICAL_LIMIT = 20
PAIR_BUDGET = 20_000


def difference(g: Graph, x: int) -> int:
    return x.bit_count() - neighborhood(g, x).bit_count()


def _guard(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise SizeGuardError(f"brute-force critical scan limited to {limit} vertices (got {g.n})")


@dataclass(frozen=True)
class CriticalProfile:
    d: int  # max over every vertex subset
    id: int  # max over independent sets only
    critical_sets: tuple[int, ...]  # every critical independent set, ascending
    ker: int
    max_crit: tuple[int, ...]
    diadem: int
    nucleus: int


def compute_critical_profile(g: Graph) -> CriticalProfile:
    _guard(g, CRITICAL_LIMIT)
    ident, crit = kernels.critical_independent_sets(g.adj)
    d_all, _ = kernels.max_difference_all_subsets(g.adj)
    top = max(s.bit_count() for s in crit)
    max_crit = tuple(s for s in crit if s.bit_count() == top)
    return CriticalProfile(
        d=d_all,
        id=ident,
        critical_sets=tuple(crit),
        ker=intersection_all(crit),
        max_crit=max_crit,
        diadem=union_all(max_crit),
        nucleus=intersection_all(max_crit),
    )


@lru_cache(maxsize=4096)
def critical_profile(g: Graph) -> CriticalProfile:
    return compute_critical_profile(g)


def critical_difference(g: Graph) -> tuple[int, int]:
    """``(d(G), witness)``; the witness is ker(G), the smallest critical independent set."""
    prof = critical_profile(g)
    return prof.id, prof.ker


def is_critical_set(g: Graph, x: int) -> bool:
    return difference(g, x) == critical_profile(g).d


def check_zhang(g: Graph) -> TheoremReport:
    prof = critical_profile(g)
    return holds_if("zhang", prof.d == prof.id, {"d": prof.d, "id": prof.id})


def check_enlargement(g: Graph) -> TheoremReport:
    if g.n > 16:
        return TheoremReport("th3", Verdict.SKIPPED_BUDGET, {"n": g.n})
    prof = critical_profile(g)
    fam = omega(g).sets
    bad = [a for a in prof.critical_sets if not any(is_subset(a, s) for s in fam)]
    return holds_if(
        "th3",
        not bad,
        {"critical_sets": len(prof.critical_sets)},
        format_set(g, bad[0]) if bad else "",
    )


def check_critical_closure(g: Graph, seed: int = 0, budget: int = PAIR_BUDGET) -> TheoremReport:
    """ker is the unique minimal critical independent set, lies in core, and the
    critical sets are closed under union and intersection."""
    if g.n > 14:
        return TheoremReport("th4", Verdict.SKIPPED_BUDGET, {"n": g.n})
    prof = critical_profile(g)
    crit = prof.critical_sets
    npairs = len(crit) * (len(crit) - 1) // 2
    if npairs <= budget:
        pairs = combinations(crit, 2)
        sampled = False
    else:
        rng = SplitMix64(seed)
        pairs = ((crit[rng.randbelow(len(crit))], crit[rng.randbelow(len(crit))]) for _ in range(budget))
        sampled = True
    target = prof.d
    for a, b in pairs:
        for x in (a | b, a & b):
            if difference(g, x) != target:
                return holds_if("th4", False, {"pairs_sampled": sampled}, f"{format_set(g, a)},{format_set(g, b)}")
    ker = prof.ker
    ker_ok = ker in crit and all(is_subset(ker, a) for a in crit) and is_subset(ker, omega(g).core)
    return holds_if("th4", ker_ok, {"critical_sets": len(crit), "pairs_sampled": sampled}, format_set(g, ker))
