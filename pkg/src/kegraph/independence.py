"""Independent sets, the family of maximum independent sets, core and corona."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import OmegaCapExceeded, SizeGuardError
from .graph import Graph, neighborhood
from .rng import SplitMix64
from .vertexset import intersection_all, union_all

DEFAULT_OMEGA_CAP = 100_000
ENUMERATION_LIMIT = 20


@dataclass(frozen=True)
class OmegaFamily:
    """All maximum independent sets, ascending by bitmask value."""

    alpha: int
    sets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s: int) -> bool:
        i = bisect_left(self.sets, s)
        return i < len(self.sets) and self.sets[i] == s

    def index(self, s: int) -> int:
        i = bisect_left(self.sets, s)
        if i == len(self.sets) or self.sets[i] != s:
            raise ValueError("not a maximum independent set")
        return i

    @property
    def core(self) -> int:
        return intersection_all(self.sets)

    @property
    def corona(self) -> int:
        return union_all(self.sets)


def is_independent(g: Graph, s: int) -> bool:
    return neighborhood(g, s) & s == 0


def compute_omega(g: Graph, cap: int = DEFAULT_OMEGA_CAP) -> OmegaFamily:
    """Uncached enumeration of Omega(G); raises OmegaCapExceeded past ``cap`` sets."""
    alpha, sets, overflow = kernels.maximum_independent_sets(g.adj, cap)
    if overflow:
        raise OmegaCapExceeded(cap)
    return OmegaFamily(alpha, tuple(sets))


@lru_cache(maxsize=4096)
def omega(g: Graph, cap: int = DEFAULT_OMEGA_CAP) -> OmegaFamily:
    return compute_omega(g, cap)


def alpha(g: Graph) -> int:
    return omega(g).alpha


def core(g: Graph) -> int:
    return omega(g).core


def corona(g: Graph) -> int:
    return omega(g).corona


def enumerate_independent_sets(g: Graph, mode: str = "all", k: int = 0, seed: int = 0) -> list[int]:
    """``mode`` is ``all``, ``maximal`` or ``sample``.

    ``sample`` draws ``k`` sets by random greedy fill: shuffle the vertices with a
    seeded SplitMix64 stream, then add each vertex that keeps the set independent.
    The result is maximal and deterministic per seed.
    """
    if mode in ("all", "maximal"):
        if g.n > ENUMERATION_LIMIT:
            raise SizeGuardError(f"full enumeration limited to {ENUMERATION_LIMIT} vertices (got {g.n})")
        return kernels.independent_sets(g.adj, mode == "maximal")
    if mode == "sample":
        rng = SplitMix64(seed)
        return [random_maximal_independent_set(g, rng) for _ in range(k)]
    raise ValueError(f"unknown enumeration mode {mode!r}")


def random_maximal_independent_set(g: Graph, rng: SplitMix64, start: int = 0, within: int | None = None) -> int:
    """Greedy fill of ``start`` in random vertex order, drawing only from ``within``."""
    order = list(range(g.n))
    rng.shuffle(order)
    allowed = g.vertices if within is None else within
    s = start
    blocked = neighborhood(g, s) | s
    for v in order:
        bit = 1 << v
        if bit & allowed and not bit & blocked:
            s |= bit
            blocked |= bit | g.adj[v]
    return s

