"""Riemann zeta and its first derivative with certified error bounds.

Both values come from a direct sum of the first ``_CUTOFF`` terms plus an
Euler-Maclaurin tail: the integral of the summand from the cutoff to
infinity, half the boundary term, and the Bernoulli corrections through
the B4 term.  The first omitted correction bounds the truncation error;
a small multiple of the accumulated magnitudes covers float rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_CUTOFF = 10_000
_ROUNDING = 8e-16  # per-unit-magnitude allowance for float64 accumulation


@dataclass(frozen=True)
class ZetaValue:
    """Zeta data at one point s.

    ``abs_error_bound`` certifies the quantity the constructing call is
    named for: ``zeta(s)`` bounds the error of the ``zeta`` field,
    ``zeta_derivative(s)`` bounds the error of ``zeta_prime``.
    """

    s: float
    zeta: float
    zeta_prime: float
    abs_error_bound: float


def _require_convergent(s: float) -> None:
    if not math.isfinite(s):
        raise ValueError(f"s must be finite, got {s}")
    if s <= 1.0:
        raise ValueError(f"zeta series diverges for s <= 1, got s={s}")


def _zeta_raw(s: float, m: int = _CUTOFF) -> tuple[float, float]:
    """(value, absolute error bound) for zeta(s), s > 1."""
    k = np.arange(1, m + 1, dtype=np.float64)
    partial = math.fsum(k**-s)
    integral = m ** (1.0 - s) / (s - 1.0)
    tail = (
        integral
        - 0.5 * m**-s
        + s * m ** (-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * m ** (-s - 3.0) / 720.0
    )
    omitted = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * m ** (-s - 5.0) / 30240.0
    err = abs(omitted) + _ROUNDING * (abs(partial) + abs(integral) + 1.0)
    return partial + tail, err


def _log_pow_derivative(s: float, order: int, x: float) -> float:
    """order-th derivative of ln(t) * t**-s at t = x.

    Writing the derivative as x**(-s-order) * (beta - alpha*ln x), the
    coefficients obey alpha(m+1) = -(s+m)*alpha(m) and
    beta(m+1) = -(s+m)*beta(m) - alpha(m) from alpha(1) = s, beta(1) = 1.
    """
    alpha, beta = s, 1.0
    for m in range(1, order):
        alpha, beta = -(s + m) * alpha, -(s + m) * beta - alpha
    return x ** (-s - order) * (beta - alpha * math.log(x))


def _zeta_prime_raw(s: float, m: int = _CUTOFF) -> tuple[float, float]:
    """(value, absolute error bound) for zeta'(s), s > 1."""
    k = np.arange(2, m + 1, dtype=np.float64)
    partial = math.fsum(np.log(k) * k**-s)  # sum of ln(n) * n**-s, n = 2..m
    ln_m = math.log(m)
    integral = m ** (1.0 - s) / (s - 1.0) * (ln_m + 1.0 / (s - 1.0))
    tail = (
        integral
        - 0.5 * ln_m * m**-s
        - _log_pow_derivative(s, 1, m) / 12.0
        + _log_pow_derivative(s, 3, m) / 720.0
    )
    omitted = _log_pow_derivative(s, 5, m) / 30240.0
    err = abs(omitted) + _ROUNDING * (abs(partial) + abs(integral) + 1.0)
    return -(partial + tail), err


def zeta(s: float) -> ZetaValue:
    """Evaluate zeta(s) for s > 1; ``abs_error_bound`` covers the zeta field."""
    _require_convergent(s)
    value, err = _zeta_raw(s)
    prime, _ = _zeta_prime_raw(s)
    return ZetaValue(s=s, zeta=value, zeta_prime=prime, abs_error_bound=err)


def zeta_derivative(s: float) -> ZetaValue:
    """Evaluate zeta'(s) for s > 1; ``abs_error_bound`` covers zeta_prime."""
    _require_convergent(s)
    value, _ = _zeta_raw(s)
    prime, err = _zeta_prime_raw(s)
    return ZetaValue(s=s, zeta=value, zeta_prime=prime, abs_error_bound=err)
