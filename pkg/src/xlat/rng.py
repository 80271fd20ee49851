"""Deterministic 64-bit generator (splitmix64).

Every randomized routine in the library draws from an explicitly seeded
SplitMix so results are reproducible across platforms and Python versions;
the stdlib Mersenne Twister is avoided on purpose.
"""

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], rejection sampled (no modulo bias)."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + (u % span)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]


def derive_seed(seed: int, index: int) -> int:
    """Stable per-task seed: same value whether tasks run serially or in a pool."""
    return seed ^ SplitMix64(index).next_u64()
