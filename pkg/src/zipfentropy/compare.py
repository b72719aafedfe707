"""Dissimilarity between two rank-frequency tables on the log-log plot."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import RankFrequencyTable

MEASURE = "mean-squared-log-rank"


@dataclass(frozen=True)
class DissimilarityReport:
    """Mean squared log-probability gap over shared ranks.

    ``value`` averages (ln p_a(k) - ln p_b(k))**2 over ranks
    k = 1..shared_ranks; ``per_rank_contributions`` holds the individual
    squared gaps when requested.
    """

    value: float
    shared_ranks: int
    per_rank_contributions: tuple[float, ...] | None = None


def zipf_dissimilarity(
    a: RankFrequencyTable,
    b: RankFrequencyTable,
    max_rank: int | None = None,
    keep_contributions: bool = False,
) -> DissimilarityReport:
    """Compare two tables by their rank-probability curves.

    Probabilities are paired by rank, not by type, so the measure reflects
    distribution shape; identical shapes at different corpus sizes score
    zero.  Ranks beyond either table's types (or ``max_rank``) are ignored.
    """
    if a.total_tokens < 1 or b.total_tokens < 1:
        raise ValueError("both tables must be non-empty")
    shared = min(a.distinct_types, b.distinct_types)
    if max_rank is not None:
        if max_rank < 1:
            raise ValueError(f"max_rank must be >= 1, got {max_rank}")
        shared = min(shared, max_rank)
    gaps = (
        np.log(a.probabilities()[:shared]) - np.log(b.probabilities()[:shared])
    ) ** 2
    return DissimilarityReport(
        value=float(gaps.mean()),
        shared_ranks=shared,
        per_rank_contributions=tuple(float(g) for g in gaps) if keep_contributions else None,
    )
