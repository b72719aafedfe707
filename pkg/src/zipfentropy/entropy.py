"""Shannon entropy of a Zipfian lexicon.

Three routes are provided: exact summation of -p*log2(p); analytic
lower/upper brackets built from the integral of ln(x)*x**-s, which avoid
touching every rank; and the infinite-lexicon limit expressed through
zeta and its derivative.  The brackets rest on the summand
f(k) = ln(k) * k**-s being decreasing past its single peak at
exp(1/s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .zeta import zeta
from .zipf import ZipfModel

LN2 = math.log(2.0)

_CHUNK = 1 << 20
_EXACT_LIMIT = 10**7  # largest size for which brackets also report the exact sum
_S_ONE_WINDOW = 1e-8  # near s = 1 the closed form cancels badly; use the log^2 form


@dataclass(frozen=True)
class EntropyBounds:
    """Entropy bracket in bits; ``exact`` is filled for affordable sizes."""

    lower: float
    upper: float
    exact: float | None
    method: str  # "exact-sum" or "riemann-bracket"
    head_terms: int


@dataclass(frozen=True)
class SurfacePoint:
    s: float
    n: int
    h_mid: float
    h_gap: float


def entropy_exact(model: ZipfModel) -> float:
    """Entropy in bits by direct summation of -p(k) * log2 p(k)."""
    s, norm = model.exponent, model.norm
    parts = []
    for a in range(1, model.size + 1, _CHUNK):
        k = np.arange(a, min(a + _CHUNK, model.size + 1), dtype=np.float64)
        p = norm * k**-s
        p = p[p > 0.0]  # underflowed ranks contribute nothing
        parts.append(float(np.sum(-p * np.log2(p))))
    return math.fsum(parts)


def decreasing_threshold(s: float) -> float:
    """Abscissa exp(1/s) past which ln(x) * x**-s decreases (s > 0)."""
    if s <= 0:
        raise ValueError(f"threshold defined for s > 0 only, got {s}")
    return math.exp(1.0 / s)


def log_integral(a: float, b: float, s: float) -> float:
    """Integral of ln(x) * x**-s over [a, b]; b may be math.inf for s > 1.

    Uses the closed-form antiderivative
    x**(1-s)/(1-s) * (ln x - 1/(1-s)) away from s = 1 and (ln x)**2 / 2
    within ``_S_ONE_WINDOW`` of it, where the closed form loses roughly
    eight digits to cancellation.
    """
    if not 0 < a <= b:
        raise ValueError(f"need 0 < a <= b, got a={a}, b={b}")
    if math.isinf(b):
        if s <= 1.0:
            raise ValueError(f"integral to infinity diverges for s <= 1, got s={s}")
        return a ** (1.0 - s) / (s - 1.0) * (math.log(a) + 1.0 / (s - 1.0))
    if abs(s - 1.0) < _S_ONE_WINDOW:
        return (math.log(b) ** 2 - math.log(a) ** 2) / 2.0
    inv = 1.0 / (1.0 - s)

    def antiderivative(x: float) -> float:
        return x ** (1.0 - s) * inv * (math.log(x) - inv)

    return antiderivative(b) - antiderivative(a)


def _log_weighted_sum(n: int, s: float) -> float:
    """Exact sum of ln(k) * k**-s for k = 1..n."""
    parts = []
    for a in range(1, n + 1, _CHUNK):
        k = np.arange(a, min(a + _CHUNK, n + 1), dtype=np.float64)
        parts.append(float(np.sum(np.log(k) * k**-s)))
    return math.fsum(parts)


def _bracket_start(s: float) -> int:
    """First index from which the summand is decreasing, never below 3."""
    return max(3, math.floor(decreasing_threshold(s)) + 1)


def log_weighted_sum_bounds(n: int, s: float) -> tuple[float, float]:
    """Bracket the sum of ln(k) * k**-s, k = 1..n, without summing it all.

    Head terms up to the summand's peak are added exactly; the decreasing
    remainder is squeezed between Riemann sums:

        integral(k0, n) <= sum(k0..n) <= f(k0) + integral(k0, n-1) + f(n)

    For n <= k0 + 1 there is no tail to bracket and the exact sum is
    returned as both endpoints.
    """
    if s <= 0:
        raise ValueError(f"bracket requires s > 0, got {s}")
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    k0 = _bracket_start(s)
    if n <= k0 + 1:
        exact = _log_weighted_sum(n, s)
        return exact, exact
    head = _log_weighted_sum(k0 - 1, s)
    f_k0 = math.log(k0) * float(k0) ** -s
    f_n = math.log(n) * float(n) ** -s
    lower = head + log_integral(k0, n, s)
    upper = head + f_k0 + log_integral(k0, n - 1, s) + f_n
    return lower, upper


def entropy_bounds(model: ZipfModel) -> EntropyBounds:
    """Lower/upper entropy bracket in bits for a finite lexicon, s > 0.

    The bracket maps the log-weighted sum bounds through
    H = (s * norm / ln 2) * sum - log2(norm), whose scale factor is
    positive, so orientation is preserved.  ``exact`` is populated by
    direct summation whenever size <= 1e7.
    """
    s, n, norm = model.exponent, model.size, model.norm
    if s <= 0:
        raise ValueError(f"entropy bracket requires s > 0, got {s}")
    lo_sum, hi_sum = log_weighted_sum_bounds(n, s)
    scale = s * norm / LN2
    offset = math.log2(norm)
    exact = entropy_exact(model) if n <= _EXACT_LIMIT else None
    k0 = _bracket_start(s)
    if n <= k0 + 1:
        method, head_terms = "exact-sum", n
    else:
        method, head_terms = "riemann-bracket", k0 - 1
    return EntropyBounds(
        lower=scale * lo_sum - offset,
        upper=scale * hi_sum - offset,
        exact=exact,
        method=method,
        head_terms=head_terms,
    )


def entropy_infinite(s: float) -> float:
    """Entropy in bits of the infinite-lexicon limit, defined for s > 1."""
    if s <= 1.0:
        raise ValueError(f"infinite lexicon entropy requires s > 1, got {s}")
    z = zeta(s)
    return math.log2(z.zeta) + (s / LN2) * (-z.zeta_prime) / z.zeta


def entropy_surface(
    s_values: "list[float] | np.ndarray",
    n_values: "list[int] | np.ndarray",
) -> list[SurfacePoint]:
    """Bracket midpoints and gaps over a parameter grid.

    Points are emitted with n as the outer loop and s as the inner one.
    Grid points whose parameters fall outside a routine's domain are
    skipped rather than aborting the sweep.
    """
    s_list = [float(s) for s in s_values]
    n_list = [int(n) for n in n_values]
    if not s_list or not n_list:
        raise ValueError("both grids must be non-empty")
    points = []
    for n in n_list:
        for s in s_list:
            try:
                bounds = entropy_bounds(ZipfModel(exponent=s, size=n))
            except ValueError:
                continue
            points.append(
                SurfacePoint(
                    s=s,
                    n=n,
                    h_mid=0.5 * (bounds.lower + bounds.upper),
                    h_gap=bounds.upper - bounds.lower,
                )
            )
    return points
