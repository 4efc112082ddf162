"""SplitMix64, the fixed pseudo-random generator behind every seeded choice.

State advances by 0x9E3779B97F4A7C15 per draw; output is the standard
``(z ^ z>>30) * 0xBF58476D1CE4E5B9``, ``(z ^ z>>27) * 0x94D049BB133111EB``,
``z ^ z>>31`` finalizer, all mod 2^64.  Floats use the top 53 bits.  Bounded
integers use rejection so they are unbiased.  Any language with 64-bit unsigned
arithmetic reproduces the same streams.
"""

from __future__ import annotations

from collections.abc import MutableSequence

NAME = "splitmix64/v1"
_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randbelow(self, k: int) -> int:
        if k <= 0:
            raise ValueError("bound must be positive")
        threshold = ((1 << 64) - k) % k
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % k

    def shuffle(self, xs: MutableSequence) -> None:
        """Fisher-Yates from the top index down."""
        for i in range(len(xs) - 1, 0, -1):
            j = self.randbelow(i + 1)
            xs[i], xs[j] = xs[j], xs[i]

    def subset(self, count: int) -> int:
        """Uniform nonempty subset of ``range(count)`` as a bitmask (count <= 64)."""
        while True:
            mask = self.next_u64() & ((1 << count) - 1)
            if mask:
                return mask


def derive_seed(seed: int, text: str) -> int:
    """Stable per-item seed: SplitMix64 over the seed folded with the text bytes."""
    rng = SplitMix64(seed)
    h = rng.next_u64()
    for byte in text.encode():
        h = ((h ^ byte) * 0x100000001B3) & _MASK
    return h
