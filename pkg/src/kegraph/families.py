"""Collections of vertex sets: the preorder, the union-plus-intersection functional,
KE collections, and the checks built on them.

A collection is a tuple of bitmasks.  ``Collection`` adds a provenance tag and
validates membership against a graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .errors import SizeGuardError, TheoremViolation
from .graph import Graph, format_set, induced_subgraph
from .independence import is_independent, omega, random_maximal_independent_set
from .matching import EMPTY_MATCHING, Matching, matching_from_into, maximum_matching, is_perfect_on
from .report import TheoremReport, Verdict, holds_if, not_applicable
from .rng import SplitMix64
from .vertexset import intersection_all, is_subset, union_all

Kind = Literal["omega", "ind"]

DEFAULT_COMPLEX_CAP = 12


@dataclass(frozen=True)
class Collection:
    sets: tuple[int, ...]
    kind: Kind

    @classmethod
    def of_omega(cls, g: Graph, sets) -> Collection:
        fam = omega(g)
        sets = _dedupe(sets)
        for s in sets:
            if s not in fam:
                raise ValueError(f"{format_set(g, s)} is not a maximum independent set")
        return cls(sets, "omega")

    @classmethod
    def of_ind(cls, g: Graph, sets) -> Collection:
        sets = _dedupe(sets)
        for s in sets:
            if not is_independent(g, s):
                raise ValueError(f"{format_set(g, s)} is not independent")
        return cls(sets, "ind")

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def _dedupe(sets) -> tuple[int, ...]:
    return tuple(sorted(set(sets)))


def _require_nonempty(gamma) -> tuple[int, ...]:
    sets = tuple(gamma)
    if not sets:
        raise ValueError("collection must be nonempty")
    return sets


def union_of(gamma) -> int:
    return union_all(gamma)


def intersection_of(gamma) -> int:
    return intersection_all(_require_nonempty(gamma))


def f_value(gamma) -> int:
    sets = _require_nonempty(gamma)
    return union_all(sets).bit_count() + intersection_all(sets).bit_count()


def preorder_lt(gamma_prime, gamma) -> bool:
    """Γ′ ⊲ Γ: ∪Γ′ ⊆ ∪Γ and ∩Γ ⊆ ∩Γ′."""
    gp, g = _require_nonempty(gamma_prime), _require_nonempty(gamma)
    return is_subset(union_all(gp), union_all(g)) and is_subset(intersection_all(g), intersection_all(gp))


def is_ke_collection(g: Graph, gamma) -> bool:
    sets = _require_nonempty(gamma)
    fam = omega(g)
    for s in sets:
        if s not in fam:
            raise ValueError(f"{format_set(g, s)} is not a maximum independent set")
    return f_value(sets) == 2 * fam.alpha


def check_main_monotonicity(g: Graph, gamma, gamma_prime) -> TheoremReport:
    """f(Γ′) ≤ f(Γ) whenever Γ ⊆ Ω(G), Γ′ ⊆ Ind(G) and Γ′ ⊲ Γ."""
    gamma = Collection.of_omega(g, gamma) if not isinstance(gamma, Collection) else gamma
    gamma_prime = Collection.of_ind(g, gamma_prime) if not isinstance(gamma_prime, Collection) else gamma_prime
    if not preorder_lt(gamma_prime, gamma):
        return not_applicable("main", "pair is not ordered by the preorder")
    fp, f = f_value(gamma_prime), f_value(gamma)
    return holds_if("main", fp <= f, {"f_prime": fp, "f": f})


def theorem_matching_witness(g: Graph, gamma, gamma_prime) -> Matching:
    """Matching from ∩Γ′ − ∩Γ into ∪Γ − ∪Γ′ for Γ ⊆ Ω(G), Γ′ ⊆ Ind(G), both nonempty."""
    src = intersection_of(gamma_prime) & ~intersection_of(gamma)
    dst = union_of(gamma) & ~union_of(gamma_prime)
    if not src:
        return EMPTY_MATCHING
    m = matching_from_into(g, src, dst)
    if m is None:
        raise TheoremViolation(
            f"no matching from {format_set(g, src)} into {format_set(g, dst)} in {g}"
        )
    return m


def ke_collection_masks(g: Graph, cap: int = DEFAULT_COMPLEX_CAP) -> tuple[tuple[int, ...], list[bool]]:
    """For every index mask over Ω(G) (bit i selects the i-th set), whether it is KE.

    Index 0 (the empty collection) is reported False.
    """
    fam = omega(g)
    k = len(fam)
    if k > cap:
        raise SizeGuardError(f"|Ω(G)| = {k} exceeds the complex cap {cap}")
    sets = fam.sets
    full_size = 1 << k
    unions = [0] * full_size
    inters = [0] * full_size
    ke = [False] * full_size
    target = 2 * fam.alpha
    for mask in range(1, full_size):
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        if rest:
            unions[mask] = unions[rest] | sets[i]
            inters[mask] = inters[rest] & sets[i]
        else:
            unions[mask] = inters[mask] = sets[i]
        ke[mask] = unions[mask].bit_count() + inters[mask].bit_count() == target
    return sets, ke


def check_simplicial_complex(g: Graph, cap: int = DEFAULT_COMPLEX_CAP) -> TheoremReport:
    """Every nonempty subcollection of a KE collection is KE; reports the facets."""
    try:
        sets, ke = ke_collection_masks(g, cap)
    except SizeGuardError:
        return TheoremReport("complex", Verdict.SKIPPED_BUDGET, {"omega": len(omega(g))})
    k = len(sets)
    # heredity reduces to single deletions by induction on size
    for mask in range(1, 1 << k):
        if not ke[mask]:
            continue
        sub = mask
        while sub:
            low = sub & -sub
            smaller = mask ^ low
            if smaller and not ke[smaller]:
                return holds_if("complex", False, {}, f"{_idx(mask)} KE but {_idx(smaller)} not")
            sub ^= low
    facets = ke_facets(ke, k)
    details = {"omega": k, "ke_collections": sum(ke), "facets": len(facets)}
    return holds_if("complex", True, details, ";".join(_idx(f) for f in facets))


def ke_facets(ke: list[bool], k: int) -> list[int]:
    """Inclusion-maximal KE index masks in canonical order (sorted member-index tuples)."""
    facets = []
    for mask in range(1, 1 << k):
        if not ke[mask]:
            continue
        if any(ke[mask | 1 << i] for i in range(k) if not mask >> i & 1):
            continue
        facets.append(mask)
    facets.sort(key=lambda m: [i for i in range(k) if m >> i & 1])
    return facets


def _idx(mask: int) -> str:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(str(i))
        mask >>= 1
        i += 1
    return "{" + ",".join(out) + "}"


@lru_cache(maxsize=65536)
def _mu_alpha_induced(g: Graph, x: int) -> tuple[Graph, int, int]:
    sub, _ = induced_subgraph(g, x)
    return sub, len(maximum_matching(sub)), omega(sub).alpha


def check_perfect_matching_theorem(g: Graph, gamma) -> TheoremReport:
    """For a KE collection Γ: perfect matching on ∪Γ−∩Γ, |∪Γ|−|∩Γ| = 2μ(G[∪Γ]),
    α(G[∪Γ]) = α(G), and G[∪Γ] is KE."""
    sets = _require_nonempty(gamma)
    fam = omega(g)
    if any(s not in fam for s in sets):
        return not_applicable("perfect-matching", "collection not inside Ω(G)")
    if f_value(sets) != 2 * fam.alpha:
        return not_applicable("perfect-matching", "not a KE collection")
    u, i = union_all(sets), intersection_all(sets)
    ring = u & ~i
    # the witness comes from one member S: a matching from S−∩Γ into ∪Γ−S
    s = sets[0]
    m = matching_from_into(g, s & ~i, u & ~s)
    part1 = m is not None and is_perfect_on(g, ring, m)
    sub, mu_sub, alpha_sub = _mu_alpha_induced(g, u)
    part2 = u.bit_count() - i.bit_count() == 2 * mu_sub
    part3 = alpha_sub == fam.alpha
    part4 = alpha_sub + mu_sub == sub.n
    details = {"i": part1, "ii": part2, "iii": part3, "iv": part4}
    witness = " ".join(f"{g.label(a)}-{g.label(b)}" for a, b in m.sorted_edges()) if m else ""
    return holds_if("perfect-matching", part1 and part2 and part3 and part4, details, witness)


# -- sampling ----------------------------------------------------------------------

def random_subfamily(fam: tuple[int, ...], rng: SplitMix64) -> tuple[int, ...]:
    if len(fam) <= 64:
        pick = rng.subset(len(fam))
        return tuple(s for i, s in enumerate(fam) if pick >> i & 1)
    k = 1 + rng.randbelow(min(len(fam), 8))
    return tuple(sorted({fam[rng.randbelow(len(fam))] for _ in range(k)}))


def sample_preorder_pairs(g: Graph, rng: SplitMix64, count: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """``count`` pairs (Γ′, Γ) with Γ ⊆ Ω(G), Γ′ ⊆ Ind(G) and Γ′ ⊲ Γ.

    Γ is a random nonempty subfamily.  Members of Γ′ are random independent sets
    grown from ∩Γ inside ∪Γ, truncated at random, so both inclusions hold.
    """
    fam = omega(g).sets
    out = []
    for t in range(count):
        gamma = random_subfamily(fam, rng)
        if t % 4 == 0:
            # plain subfamilies exercise the subset corollary too
            out.append((random_subfamily(gamma, rng), gamma))
            continue
        base = intersection_all(gamma)
        inside = union_all(gamma)
        members = []
        for _ in range(1 + rng.randbelow(3)):
            s = random_maximal_independent_set(g, rng, start=base, within=inside)
            extra = s & ~base
            keep = 0
            while extra:
                low = extra & -extra
                if rng.next_u64() & 1:
                    keep |= low
                extra ^= low
            members.append(base | keep)
        out.append((tuple(sorted(set(members))), gamma))
    return out
