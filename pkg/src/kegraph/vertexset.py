"""Vertex sets as integer bitmasks.

A vertex set over a graph with ``n <= 64`` vertices is a plain ``int`` whose bit
``v`` is set iff ``v`` belongs to the set.  Union, intersection and difference
are ``|``, ``&`` and ``& ~``; these helpers cover the rest.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

EMPTY = 0


def full(n: int) -> int:
    return (1 << n) - 1


def size(mask: int) -> int:
    return mask.bit_count()


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_members(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex index {v}")
        mask |= 1 << v
    return mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def union_all(sets: Iterable[int]) -> int:
    out = 0
    for s in sets:
        out |= s
    return out


def intersection_all(sets: Iterable[int]) -> int:
    """Intersection of a nonempty family; raises ValueError on an empty one."""
    it = iter(sets)
    try:
        out = next(it)
    except StopIteration:
        raise ValueError("intersection of an empty family is undefined") from None
    for s in it:
        out &= s
    return out
