"""Counter-based seed derivation for reproducible parallel trials.

Every trial gets its own seed computed from (base_seed, indices...) so
results never depend on worker scheduling or on a shared RNG stream.
"""
from __future__ import annotations

_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def mix_seed(base_seed: int, *indices: int) -> int:
    """Derive a 64-bit seed from a base seed and a tuple of counters.

    mix_seed(s) != s in general; each extra index folds in one more
    splitmix64 round, so (base, i, j) and (base, j, i) differ.
    """
    s = _splitmix64(base_seed & _MASK64)
    for ix in indices:
        s = _splitmix64(s ^ ((ix & _MASK64) + 0xA5A5A5A5A5A5A5A5))
    return s
