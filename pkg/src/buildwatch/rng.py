"""Deterministic random source built on splitmix64.

The generator is counter-based: draw k of a stream seeded with s mixes the
64-bit value s + k * GOLDEN through the splitmix64 finalizer. Everything is
unsigned 64-bit integer arithmetic (numpy uint64, wrapping), so a given seed
produces the identical draw sequence on every platform and run.
"""

from __future__ import annotations

import numpy as np

_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_SPAWN = np.uint64(0x5851F42D4C957F2D)

_U64_ERR = np.geterr()  # silence nothing; uint64 wraps without warnings


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def mix64(value: int) -> int:
    """splitmix64 finalizer on a single integer, for seed derivation."""
    return int(_mix(np.uint64(value & 0xFFFFFFFFFFFFFFFF)))


class RandomSource:
    """Seeded stream of reproducible draws.

    Identical seeds give bit-identical sequences; independent streams are
    obtained with spawn().
    """

    def __init__(self, seed: int):
        self.seed = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
        self._counter = 0

    def spawn(self, key: int) -> "RandomSource":
        """Derive an independent child stream from this seed and a key."""
        child = _mix(_mix(self.seed ^ _SPAWN) + np.uint64(key & 0xFFFFFFFFFFFFFFFF))
        return RandomSource(int(child))

    def _raw(self, n: int) -> np.ndarray:
        ks = np.arange(self._counter + 1, self._counter + n + 1, dtype=np.uint64)
        self._counter += n
        return _mix(self.seed + ks * _GOLDEN)

    def uniform(self, shape=(), low: float = 0.0, high: float = 1.0) -> np.ndarray:
        """Uniform floats in [low, high), f64."""
        n = int(np.prod(shape)) if shape else 1
        u = (self._raw(n) >> np.uint64(11)).astype(np.float64) * (2.0**-53)
        out = low + u * (high - low)
        return out.reshape(shape) if shape else float(out[0])

    def normal(self, shape=(), std: float = 1.0) -> np.ndarray:
        """Standard normal draws via Box-Muller, scaled by std."""
        n = int(np.prod(shape)) if shape else 1
        pairs = (n + 1) // 2
        u = (self._raw(2 * pairs) >> np.uint64(11)).astype(np.float64) * (2.0**-53)
        u1 = 1.0 - u[:pairs]  # in (0, 1], keeps log finite
        u2 = u[pairs:]
        r = np.sqrt(-2.0 * np.log(u1))
        theta = 2.0 * np.pi * u2
        z = np.concatenate([r * np.cos(theta), r * np.sin(theta)])[:n] * std
        return z.reshape(shape) if shape else float(z[0])

    def truncated_normal(self, shape, std: float = 1.0) -> np.ndarray:
        """Normal draws with |z| > 2 resampled, scaled by std."""
        out = self.normal(shape)
        for _ in range(64):
            bad = np.abs(out) > 2.0
            k = int(bad.sum())
            if k == 0:
                break
            out[bad] = self.normal((k,))
        return np.clip(out, -2.0, 2.0) * std

    def integers(self, low: int, high: int, shape=()) -> np.ndarray:
        """Integers in [low, high). Uses modular reduction; the bias is
        below 2**-32 for the small ranges used here."""
        if high <= low:
            raise ValueError(f"empty integer range [{low}, {high})")
        n = int(np.prod(shape)) if shape else 1
        span = np.uint64(high - low)
        vals = (self._raw(n) % span).astype(np.int64) + low
        return vals.reshape(shape) if shape else int(vals[0])

    def shuffled(self, items: list) -> list:
        """Fisher-Yates shuffled copy of items."""
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.integers(0, i + 1)
            out[i], out[j] = out[j], out[i]
        return out
