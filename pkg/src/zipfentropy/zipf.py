"""Zipf rank-probability model: normalizer, point probabilities, sampling."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

_CHUNK = 1 << 20


def harmonic(n: int, s: float) -> float:
    """Generalized harmonic number: sum of k**-s over k = 1..n.

    Direct summation, chunked so large n stays in vectorized code.  Chunks
    are visited smallest terms first (descending k for s > 0, ascending for
    s < 0) and the chunk subtotals are combined with exact accumulation,
    which keeps the relative error within 1e-12 up to n = 1e8.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if not math.isfinite(s):
        raise ValueError(f"s must be finite, got {s}")
    if s == 0.0:
        return float(n)
    starts = range(1, n + 1, _CHUNK)
    if s > 0:
        # terms shrink with k, so visit the tail chunks first
        starts = reversed(starts)
    parts = []
    for a in starts:
        k = np.arange(a, min(a + _CHUNK, n + 1), dtype=np.float64)
        parts.append(float(np.sum(k**-s)))
    return math.fsum(parts)


@dataclass(frozen=True)
class ZipfModel:
    """Rank distribution p(k) = norm * k**-exponent over ranks 1..size.

    ``norm`` is derived from the other two fields at construction time and
    satisfies norm * harmonic(size, exponent) = 1.
    """

    exponent: float
    size: int
    norm: float = field(init=False)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"size must be a positive integer, got {self.size}")
        if not math.isfinite(self.exponent):
            raise ValueError(f"exponent must be finite, got {self.exponent}")
        object.__setattr__(self, "norm", 1.0 / harmonic(self.size, self.exponent))

    def probability(self, rank: int) -> float:
        """Probability of the rank-``rank`` type (ranks are 1-based)."""
        if not 1 <= rank <= self.size:
            raise ValueError(f"rank must lie in 1..{self.size}, got {rank}")
        return self.norm * float(rank) ** -self.exponent

    def probabilities(self) -> np.ndarray:
        """Full probability vector, index i holding rank i + 1."""
        k = np.arange(1, self.size + 1, dtype=np.float64)
        return self.norm * k**-self.exponent

    def sample(self, count: int, seed: int) -> np.ndarray:
        """Draw ``count`` ranks by inverse-CDF lookup.

        Uses a precomputed cumulative table and binary search, so draws are
        bit-identical for a fixed seed.
        """
        if count < 0:
            raise ValueError(f"count must be >= 0, got {count}")
        cdf = np.cumsum(self.probabilities())
        cdf[-1] = max(cdf[-1], 1.0)  # rounding guard: every u < 1 must land in range
        u = np.random.default_rng(seed).random(count)
        return np.searchsorted(cdf, u, side="right").astype(np.int64) + 1
