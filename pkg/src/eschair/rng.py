"""Portable deterministic random generator for seeded parameter draws.

SplitMix64: the state advances by the 64-bit constant 0x9E3779B97F4A7C15 and
each output is finalized with the multipliers 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB (shifts 30, 27, 31).  Identical output on every platform,
so seeded renders are byte-stable.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        # 53-bit mantissa draw in [0, 1)
        u = self.next_u64() >> 11
        return lo + (hi - lo) * (u / float(1 << 53))
