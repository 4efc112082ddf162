"""Pure-Python enumeration kernels.

Every function takes ``adj``, a sequence of neighbor bitmasks, and returns sets
as bitmasks in ascending order.  ``_ckernels.pyx`` mirrors this module exactly.
"""

from __future__ import annotations

from collections.abc import Sequence

BACKEND = "python"


def maximum_independent_sets(adj: Sequence[int], cap: int) -> tuple[int, list[int], bool]:
    """Return ``(alpha, sets, overflow)``; ``overflow`` is set when more than ``cap`` sets exist."""
    best = -1
    found: list[int] = []
    count = 0

    def rec(p: int, r: int, k: int) -> None:
        nonlocal best, found, count
        if not p:
            if k > best:
                best, found, count = k, [r], 1
            elif k == best:
                count += 1
                if count <= cap:
                    found.append(r)
            return
        if k + p.bit_count() < best:
            return
        low = p & -p
        nb = adj[low.bit_length() - 1] & p
        rec(p & ~(nb | low), r | low, k + 1)
        # a vertex with no candidate neighbor belongs to every maximum completion
        if nb:
            rec(p & ~low, r, k)

    rec((1 << len(adj)) - 1, 0, 0)
    found.sort()
    return best, found, count > cap


def independent_sets(adj: Sequence[int], maximal_only: bool) -> list[int]:
    everyone = (1 << len(adj)) - 1
    out: list[int] = []

    def rec(p: int, r: int, nr: int) -> None:
        if not p:
            if not maximal_only or (r | nr) == everyone:
                out.append(r)
            return
        low = p & -p
        nb = adj[low.bit_length() - 1]
        rec(p & ~(nb | low), r | low, nr | nb)
        rec(p & ~low, r, nr)

    rec(everyone, 0, 0)
    out.sort()
    return out


def critical_independent_sets(adj: Sequence[int]) -> tuple[int, list[int]]:
    """Return ``(id, sets)``: the largest ``|I| - |N(I)|`` over independent I and every I attaining it."""
    best = 0
    found: list[int] = []

    def rec(p: int, r: int, nr: int, k: int) -> None:
        nonlocal best, found
        if not p:
            d = k - nr.bit_count()
            if d > best:
                best, found = d, [r]
            elif d == best:
                found.append(r)
            return
        low = p & -p
        nb = adj[low.bit_length() - 1]
        rec(p & ~(nb | low), r | low, nr | nb, k + 1)
        rec(p & ~low, r, nr, k)

    rec((1 << len(adj)) - 1, 0, 0, 0)
    found.sort()
    return best, found


def max_difference_all_subsets(adj: Sequence[int]) -> tuple[int, int]:
    """Largest ``|X| - |N(X)|`` over all ``2^n`` subsets and the smallest mask attaining it."""
    n = len(adj)
    size = 1 << n
    nbr = [0] * size
    best, witness = 0, 0
    for mask in range(1, size):
        low = mask & -mask
        nb = nbr[mask ^ low] | adj[low.bit_length() - 1]
        nbr[mask] = nb
        d = mask.bit_count() - nb.bit_count()
        if d > best:
            best, witness = d, mask
    return best, witness
