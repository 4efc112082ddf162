"""Maximum matchings in general graphs and Hall-type witnesses between vertex sets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph
from .vertexset import iter_members


@dataclass(frozen=True)
class Matching:
    """Pairwise non-incident edges, each stored as ``(u, v)`` with ``u < v``."""

    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        seen = 0
        for u, v in self.edges:
            if not u < v:
                raise ValueError(f"edge ({u}, {v}) is not in canonical u < v order")
            bits = 1 << u | 1 << v
            if seen & bits:
                raise ValueError("matching edges share a vertex")
            seen |= bits

    @classmethod
    def from_pairs(cls, pairs) -> Matching:
        return cls(frozenset((min(u, v), max(u, v)) for u, v in pairs))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def partner(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    @property
    def saturated(self) -> int:
        mask = 0
        for u, v in self.edges:
            mask |= 1 << u | 1 << v
        return mask

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_valid_for(self, g: Graph) -> bool:
        return all(max(u, v) < g.n and g.has_edge(u, v) for u, v in self.edges)


EMPTY_MATCHING = Matching(frozenset())


def compute_maximum_matching(g: Graph) -> Matching:
    """Edmonds' blossom algorithm (BFS form with base/parent arrays), O(n^3)."""
    n = g.n
    nbrs = [list(iter_members(g.adj[v])) for v in range(n)]
    match = [-1] * n
    for u in range(n):
        if match[u] == -1:
            for v in nbrs[u]:
                if match[v] == -1:
                    match[u], match[v] = v, u
                    break

    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = _find_augmenting_path(n, nbrs, match, root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return Matching(frozenset((u, match[u]) for u in range(n) if match[u] > u))


def _find_augmenting_path(n: int, nbrs: list[list[int]], match: list[int], root: int) -> tuple[int, list[int]]:
    base = list(range(n))
    parent = [-1] * n
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


@lru_cache(maxsize=4096)
def maximum_matching(g: Graph) -> Matching:
    return compute_maximum_matching(g)


def mu(g: Graph) -> int:
    return len(maximum_matching(g))


def matching_from_into(g: Graph, a: int, b: int) -> Matching | None:
    """A matching saturating A that uses only A-B edges, or None if Hall's condition fails.

    Kuhn's augmenting paths, visiting A and each neighbor list in ascending order,
    so the witness is deterministic.
    """
    if a & b:
        raise ValueError("source and target sets overlap")
    owner: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in iter_members(g.adj[u] & b):
            if v in seen:
                continue
            seen.add(v)
            if v not in owner or augment(owner[v], seen):
                owner[v] = u
                return True
        return False

    for u in iter_members(a):
        if not augment(u, set()):
            return None
    return Matching.from_pairs(owner.items())


def is_perfect_on(g: Graph, x: int, m: Matching) -> bool:
    """Every vertex of X saturated by M and every edge of M inside X."""
    if not m.is_valid_for(g):
        raise ValueError("not a matching of this graph")
    return m.saturated == x
