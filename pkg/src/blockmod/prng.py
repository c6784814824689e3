"""Deterministic pseudo-randomness for the verification sweeps.

A splitmix-style 64-bit generator: state advances by the golden-ratio
increment 0x9E3779B97F4A7C15 and each output is the standard 30/27/31
xor-shift multiply finalizer.  The generator is fixed here, rather than
taken from a library, so published reports are reproducible from the
seed alone and the sampled test points can be regenerated anywhere.
Any exact-rational sample set is equally valid for the identities being
checked; the fixed stream only pins which one a given seed denotes.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n); n up to a few thousand here, so the
        modulo bias is far below any level that could matter for sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next_u64() % n

    def int_between(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi], inclusive."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def fraction(self, num_bound: int = 9, den_bound: int = 9,
                 nonzero: bool = False) -> Fraction:
        """Random rational with |numerator| <= num_bound, denominator <= den_bound."""
        while True:
            value = Fraction(self.int_between(-num_bound, num_bound),
                             self.int_between(1, den_bound))
            if value or not nonzero:
                return value
