"""Corpus statistics: tokens, rank-frequency tables, smoothing, power fits."""

from __future__ import annotations

import csv
import math
import re
from collections import Counter
from dataclasses import dataclass, replace
from pathlib import Path
from typing import IO, Iterable, Mapping, Sequence

import numpy as np


class InsufficientDataError(ValueError):
    """Raised when an estimator has too few points to run."""


# Letter runs, lowercased by the caller; apostrophes join letters but never
# lead or trail, and digits, underscores and punctuation all separate.
_WORD_RE = re.compile(r"[^\W\d_]+(?:['’][^\W\d_]+)*")


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens of ``text``, in order of appearance."""
    return [m.group().lower() for m in _WORD_RE.finditer(text)]


def read_tokens(path: str | Path) -> list[str]:
    """Tokenize a UTF-8 text file line by line; malformed bytes are replaced."""
    tokens: list[str] = []
    with open(path, encoding="utf-8", errors="replace") as handle:
        for line in handle:
            tokens.extend(tokenize(line))
    return tokens


@dataclass(frozen=True)
class RankFrequencyTable:
    """Types with their counts, ordered by descending count.

    Ties are broken lexicographically by type so the ordering, and hence
    every rank, is deterministic.  Build through :func:`count` or
    :meth:`from_counts`, which validate and sort; direct construction
    trusts its inputs.
    """

    entries: tuple[tuple[str, int], ...]
    total_tokens: int
    distinct_types: int

    @classmethod
    def from_counts(cls, counts: Mapping[str, int]) -> "RankFrequencyTable":
        for name, c in counts.items():
            if c != int(c) or c < 1:
                raise ValueError(f"count for {name!r} must be a positive integer, got {c}")
        ordered = tuple(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))
        return cls(
            entries=ordered,
            total_tokens=int(sum(c for _, c in ordered)),
            distinct_types=len(ordered),
        )

    def counts(self) -> np.ndarray:
        return np.array([c for _, c in self.entries], dtype=np.float64)

    def probabilities(self) -> np.ndarray:
        if self.total_tokens < 1:
            raise ValueError("empty table has no probabilities")
        return self.counts() / self.total_tokens

    def truncate(self, top_k: int) -> "RankFrequencyTable":
        """New table keeping only the ``top_k`` highest-ranked types."""
        if top_k < 1:
            raise ValueError(f"top_k must be >= 1, got {top_k}")
        kept = self.entries[:top_k]
        return RankFrequencyTable(
            entries=kept,
            total_tokens=int(sum(c for _, c in kept)),
            distinct_types=len(kept),
        )


def count(tokens: Iterable[str]) -> RankFrequencyTable:
    """Aggregate tokens into a rank-frequency table (empty input allowed)."""
    tally = Counter(tokens)
    if not tally:
        return RankFrequencyTable(entries=(), total_tokens=0, distinct_types=0)
    return RankFrequencyTable.from_counts(tally)


def table_from_counts(counts: Sequence[int] | np.ndarray, prefix: str = "w") -> RankFrequencyTable:
    """Table from per-rank counts, naming types ``w0001``-style; zeros skipped."""
    width = len(str(len(counts)))
    mapping = {
        f"{prefix}{i + 1:0{width}d}": int(c) for i, c in enumerate(counts) if int(c) > 0
    }
    return RankFrequencyTable.from_counts(mapping)


def write_table_csv(table: RankFrequencyTable, dest: str | Path | IO[str], top_k: int | None = None) -> None:
    """Write ``rank,type,count,probability`` rows as UTF-8 CSV with LF endings."""
    rows = table.entries if top_k is None else table.entries[:top_k]
    total = table.total_tokens

    def emit(handle: IO[str]) -> None:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["rank", "type", "count", "probability"])
        for rank, (name, c) in enumerate(rows, start=1):
            writer.writerow([rank, name, c, f"{c / total:.12g}"])

    if hasattr(dest, "write"):
        emit(dest)  # type: ignore[arg-type]
    else:
        with open(dest, "w", encoding="utf-8", newline="") as handle:
            emit(handle)


def empirical_entropy(table: RankFrequencyTable) -> float:
    """Plug-in entropy in bits of the table's relative frequencies."""
    if table.total_tokens < 1:
        raise ValueError("entropy of an empty table is undefined")
    p = table.probabilities()
    return float(np.sum(-p * np.log2(p)))


@dataclass(frozen=True)
class SmoothedDistribution:
    """Good-Turing re-estimated probabilities.

    ``probs`` maps each observed count r to the probability assigned to
    one type with that count; ``p_unseen_total`` is the mass reserved for
    unseen types.  ``fallback`` marks inputs where smoothing degenerates
    (no singletons, or nothing but singletons) and plug-in estimates are
    returned with no reserved mass.
    """

    probs: dict[int, float]
    p_unseen_total: float
    freq_of_freqs: dict[int, int]
    fallback: bool = False


def _freq_of_freqs(table: RankFrequencyTable) -> dict[int, int]:
    out: Counter[int] = Counter(c for _, c in table.entries)
    return dict(out)


def _pool_non_decreasing(values: list[float], weights: list[float]) -> list[float]:
    """Weighted pool-adjacent-violators pass, smallest-to-largest.

    Replaces runs that invert with their weighted mean, which keeps the
    weighted total exactly and never introduces new inversions.
    """
    pooled: list[list[float]] = []  # [value, weight, span] blocks
    for v, w in zip(values, weights):
        pooled.append([v, w, 1])
        while len(pooled) > 1 and pooled[-2][0] > pooled[-1][0]:
            (v1, w1, n1), (v2, w2, n2) = pooled[-2], pooled[-1]
            merged = (v1 * w1 + v2 * w2) / (w1 + w2)
            pooled[-2:] = [[merged, w1 + w2, n1 + n2]]
    expanded: list[float] = []
    for v, _, span in pooled:
        expanded.extend([v] * span)
    return expanded


def good_turing(table: RankFrequencyTable) -> SmoothedDistribution:
    """Simple Good-Turing smoothing of a rank-frequency table.

    The count-of-counts N_r is smoothed on a log-log Z-transform
    regression; adjusted counts follow the raw Turing estimate
    (r+1) * N_{r+1} / N_r for low r and the regression estimate once the
    two agree within 1.65 standard deviations (or the raw estimate runs
    out).  Raw-regime jitter can invert neighboring estimates, so an
    N_r-weighted monotone pooling pass repairs inversions; pooling by
    weighted mean leaves the total adjusted mass, and with it every
    untouched probability, exactly as it was.  Unseen mass is N_1 / T and
    the observed probabilities are renormalized to the complement.
    """
    t = table.total_tokens
    if t < 1:
        raise ValueError("cannot smooth an empty table")
    fof = _freq_of_freqs(table)
    n1 = fof.get(1, 0)
    if n1 == 0 or n1 == t:
        # No singletons leaves nothing to estimate the unseen mass from;
        # all singletons would reserve the entire mass.  Fall back.
        plugin = {r: r / t for r in fof}
        return SmoothedDistribution(
            probs=plugin, p_unseen_total=0.0, freq_of_freqs=fof, fallback=True
        )
    p_unseen = n1 / t
    rs = sorted(fof)
    z_values: dict[int, float] = {}
    for i, r in enumerate(rs):
        left = rs[i - 1] if i > 0 else 0
        right = rs[i + 1] if i + 1 < len(rs) else 2 * r - left
        z_values[r] = fof[r] / (0.5 * (right - left))
    log_r = np.log([float(r) for r in rs])
    log_z = np.log([z_values[r] for r in rs])
    slope, intercept = np.polyfit(log_r, log_z, 1)

    def smooth_nr(r: int) -> float:
        return math.exp(intercept + slope * math.log(r))

    adjusted: dict[int, float] = {}
    switched = False
    for r in rs:
        regression = (r + 1) * smooth_nr(r + 1) / smooth_nr(r)
        if not switched:
            n_next = fof.get(r + 1, 0)
            if n_next == 0:
                switched = True
            else:
                turing = (r + 1) * n_next / fof[r]
                sd = math.sqrt((r + 1) ** 2 * (n_next / fof[r] ** 2) * (1.0 + n_next / fof[r]))
                if abs(turing - regression) <= 1.65 * sd:
                    switched = True
        adjusted[r] = regression if switched else (r + 1) * fof.get(r + 1, 0) / fof[r]
    repaired = _pool_non_decreasing(
        [adjusted[r] for r in rs], [float(fof[r]) for r in rs]
    )
    adjusted = dict(zip(rs, repaired))
    mass = math.fsum(fof[r] * adjusted[r] for r in rs)
    probs = {r: (1.0 - p_unseen) * adjusted[r] / mass for r in rs}
    return SmoothedDistribution(
        probs=probs, p_unseen_total=p_unseen, freq_of_freqs=fof, fallback=False
    )


def smoothed_entropy(
    dist: SmoothedDistribution,
    table: RankFrequencyTable,
    include_unseen: bool = False,
) -> float:
    """Entropy in bits under Good-Turing probabilities.

    Sums over observed types only, leaving the unseen mass out of the
    distribution; ``include_unseen`` instead folds that mass in as a
    single extra symbol.
    """
    if _freq_of_freqs(table) != dist.freq_of_freqs:
        raise ValueError("smoothed distribution does not match this table")
    total = math.fsum(
        n_r * -dist.probs[r] * math.log2(dist.probs[r])
        for r, n_r in dist.freq_of_freqs.items()
    )
    if include_unseen and dist.p_unseen_total > 0.0:
        total += -dist.p_unseen_total * math.log2(dist.p_unseen_total)
    return total


@dataclass(frozen=True)
class FitResult:
    """Log-log least-squares fit of ranked values.

    ``s_hat`` is the negated slope, ``c_hat`` the intercept mapped back
    from log scale (for count fits, rescaled to a probability normalizer),
    and ``rank_range`` the 1-based span of ranks that entered the fit.
    """

    s_hat: float
    c_hat: float
    r_squared: float
    rank_range: tuple[int, int]


def _midranks(values: np.ndarray) -> np.ndarray:
    """1-based ranks where runs of equal values share their mean rank."""
    n = len(values)
    change = np.flatnonzero(values[1:] != values[:-1]) + 1
    starts = np.concatenate(([0], change))
    ends = np.concatenate((change, [n]))
    mids = (starts + 1 + ends) / 2.0
    return np.repeat(mids, ends - starts)


def fit_power_law(values: Sequence[float] | np.ndarray, min_value: float = 0.0) -> FitResult:
    """Fit log(value) against log(midrank) for values sorted descending.

    Needs at least three surviving points.  A perfectly flat input has no
    rank variation left after mid-ranking; it fits slope zero exactly.
    """
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError("values must be one-dimensional")
    if len(v) > 1 and np.any(v[1:] > v[:-1]):
        raise ValueError("values must be sorted in descending order")
    keep = v[(v >= min_value) & (v > 0.0)]
    if len(keep) < 3:
        raise InsufficientDataError(
            f"need at least 3 points at or above {min_value}, got {len(keep)}"
        )
    x = np.log(_midranks(keep))
    y = np.log(keep)
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    sxy = float(dx @ dy)
    syy = float(dy @ dy)
    if sxx == 0.0:
        slope = 0.0
        r_squared = 1.0  # constant values are matched exactly by a flat line
    else:
        slope = sxy / sxx
        residual = syy - slope * sxy
        r_squared = 1.0 if syy == 0.0 else min(1.0, max(0.0, 1.0 - residual / syy))
    intercept = float(y.mean()) - slope * float(x.mean())
    return FitResult(
        s_hat=0.0 if slope == 0.0 else -slope,
        c_hat=math.exp(intercept),
        r_squared=r_squared,
        rank_range=(1, len(keep)),
    )


def fit_zipf(table: RankFrequencyTable, min_count: int = 1) -> FitResult:
    """Zipf exponent estimate from a table, using counts >= ``min_count``.

    ``c_hat`` is divided by the token total so it estimates the
    probability normalizer rather than a raw count scale.
    """
    if min_count < 1:
        raise ValueError(f"min_count must be >= 1, got {min_count}")
    if table.total_tokens < 1:
        raise InsufficientDataError("cannot fit an empty table")
    result = fit_power_law(table.counts(), min_value=float(min_count))
    return replace(result, c_hat=result.c_hat / table.total_tokens)
