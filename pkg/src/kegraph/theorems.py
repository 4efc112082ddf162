"""Registry of every mechanically checked statement, run as one suite per graph."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .critical import check_critical_closure, check_enlargement, check_zhang, critical_profile, difference
from .errors import SizeGuardError, TheoremViolation
from .families import (
    check_perfect_matching_theorem,
    check_simplicial_complex,
    f_value,
    ke_collection_masks,
    random_subfamily,
    sample_preorder_pairs,
    theorem_matching_witness,
)
from .graph import Graph, encode_graph6, format_set, induced_subgraph, is_bipartite
from .independence import omega, random_maximal_independent_set
from .ke import (
    check_characterization_core,
    check_characterization_pairs,
    check_embedding,
    check_th5,
    check_th9,
    check_th10_unicyclic,
    is_ke,
)
from .matching import matching_from_into, mu
from .report import TheoremReport, Verdict, holds_if, not_applicable
from .rng import SplitMix64, derive_seed
from .vertexset import intersection_all, is_subset, union_all


@dataclass(frozen=True)
class SuiteOptions:
    samples: int = 1000  # preorder pairs per graph
    witness_samples: int = 100  # sampled families for matching-witness checks
    seed: int = 0
    complex_cap: int = 12
    pair_cap: int = 5000


Check = Callable[[Graph, SuiteOptions, SplitMix64], TheoremReport]


def _random_independent(g: Graph, rng: SplitMix64) -> int:
    s = random_maximal_independent_set(g, rng)
    if rng.next_u64() & 1:
        return s
    keep = 0
    for bit in (1 << v for v in range(g.n)):
        if s & bit and rng.next_u64() & 1:
            keep |= bit
    return keep


def _alpha_mu(g, opts, rng):
    a, m = omega(g).alpha, mu(g)
    return holds_if("alpha-mu", a + m <= g.n, {"alpha": a, "mu": m, "n": g.n})


def _matching_lemma(g, opts, rng):
    fam = omega(g).sets
    for _ in range(opts.witness_samples):
        a = _random_independent(g, rng)
        lam = random_subfamily(fam, rng)
        src = a & ~intersection_all(lam)
        dst = union_all(lam) & ~a
        if matching_from_into(g, src, dst) is None:
            return holds_if("matching-lemma", False, {}, f"A={format_set(g, a)}")
    return holds_if("matching-lemma", True, {"samples": opts.witness_samples})


def _theorem_matching(g, opts, rng, theorem="th-matching", whole_omega=False):
    fam = omega(g).sets
    for _ in range(opts.witness_samples):
        gamma = fam if whole_omega else random_subfamily(fam, rng)
        gamma_prime = tuple({_random_independent(g, rng) for _ in range(1 + rng.randbelow(3))})
        try:
            theorem_matching_witness(g, gamma, gamma_prime)
        except TheoremViolation as exc:
            return holds_if(theorem, False, {}, str(exc))
    return holds_if(theorem, True, {"samples": opts.witness_samples})


def _cor5(g, opts, rng):
    return _theorem_matching(g, opts, rng, "cor5", whole_omega=True)


def _s_core(g, opts, rng):
    fam = omega(g)
    for s in fam.sets:
        if matching_from_into(g, s & ~fam.core, fam.corona & ~s) is None:
            return holds_if("s-core", False, {}, format_set(g, s))
    return holds_if("s-core", True, {"sets": len(fam)})


def _main(g, opts, rng):
    worst = None
    for gp, gm in sample_preorder_pairs(g, rng, opts.samples):
        if f_value(gp) > f_value(gm):
            worst = (gp, gm)
            break
    witness = ""
    if worst:
        witness = "|".join(format_set(g, s) for s in worst[0]) + " vs " + "|".join(format_set(g, s) for s in worst[1])
    return holds_if("main", worst is None, {"pairs": opts.samples}, witness)


def _cor1(g, opts, rng):
    fam = omega(g).sets
    for _ in range(opts.samples // 4):
        gamma = random_subfamily(fam, rng)
        sub = random_subfamily(gamma, rng)
        if f_value(sub) > f_value(gamma):
            return holds_if("cor1", False)
    return holds_if("cor1", True, {"pairs": opts.samples // 4})


def _all_ke_flags(g, opts):
    try:
        return ke_collection_masks(g, opts.complex_cap)
    except SizeGuardError:
        return None


def _cor_iff(g, opts, rng):
    fam = omega(g)
    flags = _all_ke_flags(g, opts)
    if flags is None:
        return TheoremReport("cor-iff", Verdict.SKIPPED_BUDGET, {"omega": len(fam)})
    _, ke = flags
    left = fam.corona.bit_count() + fam.core.bit_count() == 2 * fam.alpha
    right = all(ke[1:])
    return holds_if("cor-iff", left == right, {"sum_is_2alpha": left, "all_ke": right})


def _cor8(g, opts, rng):
    fam = omega(g)
    lo, hi = 2 * fam.alpha, 2 * (g.n - mu(g))
    for _ in range(opts.witness_samples):
        gamma = random_subfamily(fam.sets, rng)
        if not lo <= f_value(gamma) <= hi:
            return holds_if("cor8", False, {}, "|".join(format_set(g, s) for s in gamma))
    return holds_if("cor8", True, {"lower": lo, "upper": hi})


def _th7(g, opts, rng):
    fam = omega(g)
    prof = critical_profile(g)
    # consequences valid for every graph
    general = is_subset(prof.ker, prof.nucleus) and is_subset(prof.diadem, fam.corona)
    if not general:
        return holds_if("th7", False, {}, "ker ⊄ nucleus or diadem ⊄ corona")
    if difference(g, fam.core) != prof.d:
        return not_applicable("th7", "core is not critical")
    p1 = is_subset(fam.core, prof.nucleus)
    p2 = is_subset(prof.diadem, fam.corona) and is_subset(fam.core, prof.nucleus)
    p3 = prof.diadem.bit_count() + prof.nucleus.bit_count() <= fam.corona.bit_count() + fam.core.bit_count()
    p4 = prof.diadem != fam.corona or fam.core == prof.nucleus
    return holds_if("th7", p1 and p2 and p3 and p4, {"i": p1, "ii": p2, "iii": p3, "iv": p4})


def _cor4(g, opts, rng):
    fam = omega(g)
    prof = critical_profile(g)
    if len(fam) > 2 or prof.diadem != fam.corona:
        return not_applicable("cor4", "needs |Ω| ≤ 2 and diadem = corona")
    return holds_if("cor4", is_ke(g))


def _bipartite(g, opts, rng):
    if not is_bipartite(g):
        return not_applicable("bipartite", "graph is not bipartite")
    fam = omega(g)
    prof = critical_profile(g)
    return holds_if("bipartite", prof.ker == fam.core == prof.nucleus)


def _ke_sum(g, opts, rng):
    if not is_ke(g):
        return not_applicable("ke-sum", "graph is not KE")
    fam = omega(g)
    return holds_if("ke-sum", fam.corona.bit_count() + fam.core.bit_count() == 2 * fam.alpha)


def _ke_diadem(g, opts, rng):
    if not is_ke(g):
        return not_applicable("ke-diadem", "graph is not KE")
    prof = critical_profile(g)
    return holds_if("ke-diadem", prof.diadem.bit_count() + prof.nucleus.bit_count() == 2 * omega(g).alpha)


def _collections_for(g, opts, rng, only_ke):
    fam = omega(g)
    flags = _all_ke_flags(g, opts)
    if flags is not None:
        sets, ke = flags
        for mask in range(1, len(ke)):
            if not only_ke or ke[mask]:
                yield tuple(s for i, s in enumerate(sets) if mask >> i & 1)
        return
    target = 2 * fam.alpha
    for _ in range(opts.witness_samples):
        gamma = random_subfamily(fam.sets, rng)
        if not only_ke or f_value(gamma) == target:
            yield gamma


def _ke_collections(g, opts, rng):
    if not is_ke(g):
        return not_applicable("ke-collections", "graph is not KE")
    target = 2 * omega(g).alpha
    for gamma in _collections_for(g, opts, rng, only_ke=False):
        if f_value(gamma) != target:
            return holds_if("ke-collections", False, {}, "|".join(format_set(g, s) for s in gamma))
    return holds_if("ke-collections", True)


def _complex(g, opts, rng):
    return check_simplicial_complex(g, opts.complex_cap)


def _perfect_matching(g, opts, rng):
    count = 0
    for gamma in _collections_for(g, opts, rng, only_ke=True):
        rep = check_perfect_matching_theorem(g, gamma)
        if rep.verdict is Verdict.FAILS:
            return rep
        count += 1
    if not count:
        return not_applicable("perfect-matching", "no KE collection examined")
    return holds_if("perfect-matching", True, {"collections": count})


def _corona_ke(g, opts, rng):
    fam = omega(g)
    if fam.corona.bit_count() + fam.core.bit_count() != 2 * fam.alpha:
        return not_applicable("corona-ke", "|corona|+|core| ≠ 2α")
    sub, _ = induced_subgraph(g, fam.corona)
    return holds_if("corona-ke", is_ke(sub))


def _ke_induced(g, opts, rng):
    if not is_ke(g):
        return not_applicable("ke-induced", "graph is not KE")
    a = omega(g).alpha
    for gamma in _collections_for(g, opts, rng, only_ke=False):
        u = union_all(gamma)
        sub, vmap = induced_subgraph(g, u)
        sub_fam = omega(sub)
        lifted = {sum(1 << vmap[v] for v in range(sub.n) if s >> v & 1) for s in sub_fam.sets}
        ok = (
            sub_fam.alpha == a
            and all(s in lifted for s in gamma)
            and union_all(lifted) == u
            and intersection_all(lifted) == intersection_all(gamma)
        )
        if not ok:
            return holds_if("ke-induced", False, {}, "|".join(format_set(g, s) for s in gamma))
    return holds_if("ke-induced", True)


def _char_pairs(g, opts, rng):
    return check_characterization_pairs(g, opts.pair_cap, rng.next_u64())


def _conjecture(g, opts, rng):
    prof = critical_profile(g)
    a = omega(g).alpha
    if prof.diadem.bit_count() + prof.nucleus.bit_count() != 2 * a:
        return not_applicable("conjecture", "|diadem|+|nucleus| ≠ 2α")
    return holds_if("conjecture", is_ke(g))


THEOREMS: dict[str, tuple[Check, str]] = {
    "alpha-mu": (_alpha_mu, "α+μ ≤ |V|"),
    "zhang": (lambda g, o, r: check_zhang(g), "d(G) over all subsets equals id(G)"),
    "th3": (lambda g, o, r: check_enlargement(g), "critical independent sets extend to maximum ones"),
    "th4": (lambda g, o, r: check_critical_closure(g, r.next_u64()), "ker ⊆ core, closure, unique minimal ker"),
    "th5": (lambda g, o, r: check_th5(g), "KE ⇔ some/all maximum independent sets critical"),
    "matching-lemma": (_matching_lemma, "matching from A−∩Λ into ∪Λ−A"),
    "th-matching": (_theorem_matching, "matching from ∩Γ′−∩Γ into ∪Γ−∪Γ′"),
    "cor5": (_cor5, "matching from ∩Γ′−core into corona−∪Γ′"),
    "s-core": (_s_core, "matching from S−core into corona−S"),
    "main": (_main, "f is ⊲-increasing"),
    "cor1": (_cor1, "Γ′ ⊆ Γ ⇒ f(Γ′) ≤ f(Γ)"),
    "cor-iff": (_cor_iff, "|corona|+|core| = 2α ⇔ every Γ is KE"),
    "cor8": (_cor8, "2α ≤ f(Γ) ≤ 2(|V|−μ)"),
    "th7": (_th7, "consequences of a critical core"),
    "cor4": (_cor4, "|Ω| ≤ 2 and diadem = corona ⇒ KE"),
    "bipartite": (_bipartite, "bipartite ⇒ ker = core = nucleus"),
    "th9": (lambda g, o, r: check_th9(g), "2α ≤ |corona|+|core| ≤ 2(|V|−μ), tight ⇔ KE"),
    "ke-sum": (_ke_sum, "KE ⇒ |corona|+|core| = 2α"),
    "th10": (lambda g, o, r: check_th10_unicyclic(g), "unicyclic bound"),
    "ke-diadem": (_ke_diadem, "KE ⇒ |diadem|+|nucleus| = 2α"),
    "ke-collections": (_ke_collections, "KE ⇒ every Γ is KE"),
    "complex": (_complex, "KE collections form a simplicial complex"),
    "perfect-matching": (_perfect_matching, "KE collections: perfect matching, μ, α, KE of G[∪Γ]"),
    "corona-ke": (_corona_ke, "|corona|+|core| = 2α ⇒ G[corona] KE"),
    "ke-induced": (_ke_induced, "KE ⇒ corona/core of G[∪Γ] are ∪Γ/∩Γ"),
    "char-pairs": (_char_pairs, "KE ⇔ pair matchings V−(S1∪S2) into S1∩S2"),
    "char-core": (lambda g, o, r: check_characterization_core(g), "KE ⇔ sum condition and V−corona into core"),
    "embed": (lambda g, o, r: check_embedding(g), "KE G embeds in non-KE G′ with Ω preserved"),
    "conjecture": (_conjecture, "open: |diadem|+|nucleus| = 2α ⇒ KE"),
}


def run_suite(g: Graph, ids: list[str] | None = None, opts: SuiteOptions = SuiteOptions()) -> list[TheoremReport]:
    """Run the selected checks (all by default) with per-check deterministic streams."""
    ids = list(THEOREMS) if ids is None else ids
    unknown = [t for t in ids if t not in THEOREMS]
    if unknown:
        raise KeyError(f"unknown theorem id(s): {', '.join(unknown)}")
    base = derive_seed(opts.seed, encode_graph6(g))
    out = []
    for tid in ids:
        fn, _ = THEOREMS[tid]
        rng = SplitMix64(derive_seed(base, tid))
        out.append(fn(g, opts, rng))
    return out
