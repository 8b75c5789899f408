"""Counter-based splittable pseudorandom generator.

All randomness in numrad flows through this module so that fuzz campaigns are
reproducible from a single 64-bit seed, across runs and across languages that
reimplement the same definition.

Definition (all arithmetic mod 2^64):

    GOLDEN = 0x9E3779B97F4A7C15
    mix(z) = splitmix64 finalizer:
        z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
        z ^= z >> 27;  z *= 0x94D049BB133111EB
        z ^= z >> 31
    base(seed, stream) = mix(seed + mix(stream * GOLDEN + GOLDEN))
    output k (k = 0, 1, ...) of Stream(seed, stream):
        u64_k = mix(base + (k + 1) * GOLDEN)

Streams are split by hashing structured labels into the `stream` word with
`fold`, so generator kind, dimension and trial index each get disjoint
substreams of one master seed.

Derived values:
  * u01: (u64 >> 11) * 2^-53, uniform on [0, 1).
  * normals: Box-Muller pairs; u1 = ((a >> 11) + 1) * 2^-53 in (0, 1] so the
    logarithm is finite, u2 = (b >> 11) * 2^-53;
    z0 = sqrt(-2 ln u1) cos(2 pi u2), z1 = sqrt(-2 ln u1) sin(2 pi u2).
  * complex normals: z_{2j} + i z_{2j+1}.

The integer stream is exactly reproducible on any platform; floating-point
outputs are reproducible up to libm rounding of log/cos/sin (bitwise identical
across runs on one platform). Frozen test vectors live in tests/test_prng.py.
"""

import math

import numpy as np

_MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 finalizer: a 64-bit avalanche permutation."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def fold(*labels: int) -> int:
    """Hash a tuple of integer labels into a single stream id."""
    h = 0
    for x in labels:
        h = mix64(h ^ mix64((int(x) + GOLDEN) & _MASK))
    return h


class Stream:
    """One counter-mode substream of the generator.

    Instances are cheap; make a fresh one per (seed, stream) pair instead of
    sharing a stream across concurrent workers.
    """

    def __init__(self, seed: int, stream: int = 0):
        self._base = mix64((int(seed) + mix64((int(stream) * GOLDEN + GOLDEN) & _MASK)) & _MASK)
        self._count = 0

    def next_u64(self) -> int:
        self._count += 1
        return mix64((self._base + self._count * GOLDEN) & _MASK)

    def u01(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.u01()

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi] inclusive, by rejection-free modular draw."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        return lo + self.next_u64() % span

    def normals(self, n: int) -> np.ndarray:
        """n standard normal floats via Box-Muller."""
        out = np.empty(n)
        for j in range(0, n, 2):
            u1 = ((self.next_u64() >> 11) + 1) * 2.0**-53
            u2 = (self.next_u64() >> 11) * 2.0**-53
            r = math.sqrt(-2.0 * math.log(u1))
            out[j] = r * math.cos(2.0 * math.pi * u2)
            if j + 1 < n:
                out[j + 1] = r * math.sin(2.0 * math.pi * u2)
        return out

    def complex_normals(self, n: int) -> np.ndarray:
        """n standard complex Gaussians (independent N(0,1) parts)."""
        z = self.normals(2 * n)
        return z[0::2] + 1j * z[1::2]

    def split(self, *labels: int) -> "Stream":
        """Child stream addressed by integer labels; independent of draws so far."""
        return Stream(self._base, fold(*labels))
