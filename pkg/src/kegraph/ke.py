"""König-Egerváry recognition, bound checks, characterizations and the non-KE embedding."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .critical import critical_profile, difference
from .errors import PreconditionError, TheoremViolation
from .graph import Graph, complete_graph, format_set, is_unicyclic, join_complete
from .independence import OmegaFamily, compute_omega, omega
from .matching import Matching, compute_maximum_matching, matching_from_into, mu
from .report import TheoremReport, Verdict, holds_if, not_applicable
from .rng import SplitMix64

PAIR_CAP = 5_000


def is_ke(g: Graph) -> bool:
    return omega(g).alpha + mu(g) == g.n


@dataclass(frozen=True)
class KeDiagnosis:
    is_ke: bool
    alpha: int
    mu: int
    n: int
    bounds: tuple[int, int, int]  # 2α, |corona|+|core|, 2(n−μ)
    critical_omega: tuple[tuple[int, bool], ...]
    char1_witness: Matching | None  # pair (S1, S2) = first two sets of Ω (or S1 twice)
    char2_witness: Matching | None  # V−corona into core


def diagnose(g: Graph) -> KeDiagnosis:
    fam = omega(g)
    m = mu(g)
    d = critical_profile(g).d
    s1, s2 = fam.sets[0], fam.sets[min(1, len(fam) - 1)]
    everyone = g.vertices
    return KeDiagnosis(
        is_ke=fam.alpha + m == g.n,
        alpha=fam.alpha,
        mu=m,
        n=g.n,
        bounds=(2 * fam.alpha, fam.corona.bit_count() + fam.core.bit_count(), 2 * (g.n - m)),
        critical_omega=tuple((s, difference(g, s) == d) for s in fam.sets),
        char1_witness=matching_from_into(g, everyone & ~(s1 | s2), s1 & s2),
        char2_witness=matching_from_into(g, everyone & ~fam.corona, fam.core),
    )


def check_th5(g: Graph) -> TheoremReport:
    """KE ⇔ some maximum independent set is critical ⇔ all of them are."""
    if g.n > 16:
        return TheoremReport("th5", Verdict.SKIPPED_BUDGET, {"n": g.n})
    fam = omega(g)
    d = critical_profile(g).d
    flags = [difference(g, s) == d for s in fam.sets]
    ke = is_ke(g)
    some, every = any(flags), all(flags)
    return holds_if("th5", ke == some == every, {"ke": ke, "some_critical": some, "all_critical": every})


def check_th9(g: Graph) -> TheoremReport:
    """2α ≤ |corona|+|core| ≤ 2(n−μ), and both bounds tight ⇔ KE."""
    fam = omega(g)
    lo = 2 * fam.alpha
    mid = fam.corona.bit_count() + fam.core.bit_count()
    hi = 2 * (g.n - mu(g))
    both_tight = lo == mid == hi
    ok = lo <= mid <= hi and both_tight == is_ke(g)
    return holds_if("th9", ok, {"lower": lo, "value": mid, "upper": hi, "lower_tight": lo == mid, "upper_tight": mid == hi})


def check_th10_unicyclic(g: Graph) -> TheoremReport:
    if not is_unicyclic(g):
        return not_applicable("th10", "graph is not unicyclic")
    fam = omega(g)
    a, m = fam.alpha, mu(g)
    val = fam.corona.bit_count() + fam.core.bit_count()
    ok = 2 * a <= val <= 2 * a + 1 and g.n - 1 <= a + m <= g.n
    if a + m != g.n:
        ok = ok and val == 2 * a + 1 and a + m == g.n - 1
    return holds_if("th10", ok, {"two_alpha": 2 * a, "value": val, "alpha_plus_mu": a + m, "n": g.n})


def _pairs(fam: OmegaFamily, cap: int, seed: int) -> tuple[list[tuple[int, int]], bool]:
    k = len(fam)
    if k * (k + 1) // 2 <= cap:
        return list(combinations_with_replacement(fam.sets, 2)), False
    rng = SplitMix64(seed)
    return [(fam.sets[rng.randbelow(k)], fam.sets[rng.randbelow(k)]) for _ in range(cap)], True


def check_characterization_pairs(g: Graph, cap: int = PAIR_CAP, seed: int = 0) -> TheoremReport:
    """KE ⇔ every pair S1, S2 ∈ Ω admits a matching from V−(S1∪S2) into S1∩S2 ⇔ some pair does."""
    if g.n > 14:
        return TheoremReport("char-pairs", Verdict.SKIPPED_BUDGET, {"n": g.n})
    fam = omega(g)
    pairs, sampled = _pairs(fam, cap, seed)
    everyone = g.vertices
    found = [(s1, s2) for s1, s2 in pairs if matching_from_into(g, everyone & ~(s1 | s2), s1 & s2) is not None]
    ke = is_ke(g)
    if ke:
        ok = len(found) == len(pairs)
    else:
        ok = not found
    details = {"ke": ke, "pairs": len(pairs), "with_matching": len(found), "sampled": sampled}
    witness = ""
    if found:
        s1, s2 = found[0]
        witness = f"{format_set(g, s1)},{format_set(g, s2)}"
    return holds_if("char-pairs", ok, details, witness)


def check_characterization_core(g: Graph) -> TheoremReport:
    """KE ⇔ |corona|+|core| = 2α and V−corona matches into core; KE ⇒ |V−corona| ≤ |core|."""
    if g.n > 16:
        return TheoremReport("char-core", Verdict.SKIPPED_BUDGET, {"n": g.n})
    fam = omega(g)
    cond1 = fam.corona.bit_count() + fam.core.bit_count() == 2 * fam.alpha
    outside = g.vertices & ~fam.corona
    cond2 = matching_from_into(g, outside, fam.core) is not None
    ke = is_ke(g)
    ok = ke == (cond1 and cond2)
    if ke:
        ok = ok and outside.bit_count() <= fam.core.bit_count()
    return holds_if("char-core", ok, {"ke": ke, "sum_condition": cond1, "matching_condition": cond2})


def _excluded(g: Graph) -> bool:
    # K0 is included: joining it to K1 changes Ω
    return g.n <= 2 and g == complete_graph(g.n)


def embed_non_ke(g: Graph) -> Graph:
    """Join G to a fresh K_{n+1}; the result keeps Ω(G) but is not KE."""
    if _excluded(g):
        raise PreconditionError("the construction requires G not in {K1, K2}")
    if not is_ke(g):
        raise PreconditionError("the construction requires a König-Egerváry graph G")
    big = join_complete(g, g.n + 1)
    _verify_embedding(g, big)
    return big


def _verify_embedding(g: Graph, big: Graph) -> None:
    # recomputed without caches so the claim is checked, not assumed
    small_fam = compute_omega(g)
    big_fam = compute_omega(big)
    big_mu = len(compute_maximum_matching(big))
    problems = []
    if big_fam.sets != small_fam.sets:
        problems.append("Ω changed")
    if big_fam.alpha != small_fam.alpha:
        problems.append("α changed")
    if big_mu != g.n:
        problems.append(f"μ(G′) = {big_mu} ≠ {g.n}")
    if big.n != 2 * g.n + 1:
        problems.append("wrong order")
    if big_fam.alpha + big_mu == big.n:
        problems.append("G′ is KE")
    if problems:
        raise TheoremViolation("embedding: " + "; ".join(problems))


def check_embedding(g: Graph) -> TheoremReport:
    if _excluded(g):
        return not_applicable("embed", "G is K0, K1 or K2")
    if not is_ke(g):
        return not_applicable("embed", "G is not KE")
    if 2 * g.n + 1 > 64:
        return TheoremReport("embed", Verdict.SKIPPED_BUDGET, {"n": g.n})
    try:
        big = embed_non_ke(g)
    except TheoremViolation as exc:
        return holds_if("embed", False, {}, str(exc))
    return holds_if("embed", True, {"order": big.n})
