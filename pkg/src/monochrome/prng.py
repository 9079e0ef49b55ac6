"""Deterministic counter-based pseudo-random stream (splitmix64 finalizer).

Every randomized operation in this package draws from the same fixed
generator so that a seed reproduces bit-identically across platforms and
across reimplementations in other languages.  The stream is stateless:
the k-th 64-bit value of the stream with seed ``s`` is

    value(s, k) = mix64((s + (k + 1) * 0x9E3779B97F4A7C15) mod 2**64)

where ``mix64`` is the splitmix64 output function

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;  z &= 2**64 - 1
    z ^= z >> 27;  z *= 0x94D049BB133111EB;  z &= 2**64 - 1
    z ^= z >> 31

Bounded draws use plain remainder: ``value(s, k) % n``.  The modulo bias
is irrelevant at the ranges used here (n far below 2**32).
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 output function on a 64-bit word."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def stream_value(seed: int, counter: int) -> int:
    """The counter-th 64-bit value of the seeded stream."""
    return mix64((seed + (counter + 1) * _GOLDEN) & _MASK64)


def stream_below(seed: int, counter: int, n: int) -> int:
    """Bounded draw in {0..n-1}."""
    if n <= 0:
        raise ValueError("bound must be positive")
    return stream_value(seed, counter) % n
