"""Entropy of Zipf-distributed lexicons.

Analytic entropy brackets for finite lexicons, zeta-based limits for
infinite ones, and corpus-side estimators (rank-frequency tables,
Good-Turing smoothing, log-log exponent fits, rank-curve dissimilarity,
random-typing baselines).
"""

from .compare import MEASURE, DissimilarityReport, zipf_dissimilarity
from .corpus import (
    FitResult,
    InsufficientDataError,
    RankFrequencyTable,
    SmoothedDistribution,
    count,
    empirical_entropy,
    fit_power_law,
    fit_zipf,
    good_turing,
    read_tokens,
    smoothed_entropy,
    table_from_counts,
    tokenize,
    write_table_csv,
)
from .entropy import (
    EntropyBounds,
    SurfacePoint,
    decreasing_threshold,
    entropy_bounds,
    entropy_exact,
    entropy_infinite,
    entropy_surface,
    log_integral,
    log_weighted_sum_bounds,
)
from .monkey import MonkeyConfig, WordProbabilityTable, generate, theoretical_table
from .zeta import ZetaValue, zeta, zeta_derivative
from .zipf import ZipfModel, harmonic

__version__ = "0.1.0"

__all__ = [
    "DissimilarityReport",
    "EntropyBounds",
    "FitResult",
    "InsufficientDataError",
    "MEASURE",
    "MonkeyConfig",
    "RankFrequencyTable",
    "SmoothedDistribution",
    "SurfacePoint",
    "WordProbabilityTable",
    "ZetaValue",
    "ZipfModel",
    "count",
    "decreasing_threshold",
    "empirical_entropy",
    "entropy_bounds",
    "entropy_exact",
    "entropy_infinite",
    "entropy_surface",
    "fit_power_law",
    "fit_zipf",
    "generate",
    "good_turing",
    "harmonic",
    "log_integral",
    "log_weighted_sum_bounds",
    "read_tokens",
    "smoothed_entropy",
    "table_from_counts",
    "theoretical_table",
    "tokenize",
    "write_table_csv",
    "zeta",
    "zeta_derivative",
    "zipf_dissimilarity",
]
