"""Deterministic 64-bit generator (xorshift64*) used for all match randomness.

The generator is fixed and fully specified so that saved records replay to
identical states on any implementation: dice, shuffles, and hidden setups are
pure functions of the match seed.
"""

from __future__ import annotations

from .errors import InvalidArgument

_MASK = (1 << 64) - 1
_MULT = 2685821657736338717
# Zero would lock xorshift at zero forever; remap it to a fixed odd constant.
ZERO_SEED_REMAP = 0x9E3779B97F4A7C15


class Rng:
    """xorshift64* stream; state is a nonzero 64-bit integer."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        seed &= _MASK
        self.state = seed if seed != 0 else ZERO_SEED_REMAP

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Rng) and self.state == other.state

    def __repr__(self) -> str:
        return f"Rng(state={self.state:#x})"

    def clone(self) -> "Rng":
        copy = Rng(1)
        copy.state = self.state
        return copy

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * _MULT) & _MASK

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling on the top 32 bits."""
        if n < 1 or n > (1 << 32):
            raise InvalidArgument(f"below() requires 1 <= n <= 2**32, got {n}")
        limit = (1 << 32) - ((1 << 32) % n)
        while True:
            v = self.next_u64() >> 32
            if v < limit:
                return v % n

    def roll_die(self, sides: int = 6) -> int:
        return self.below(sides) + 1

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle driven by this stream."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_distinct(self, n: int, k: int) -> list[int]:
        """k distinct integers from [0, n), in draw order."""
        if k > n:
            raise InvalidArgument(f"cannot draw {k} distinct values from {n}")
        seen: list[int] = []
        while len(seen) < k:
            v = self.below(n)
            if v not in seen:
                seen.append(v)
        return seen
