"""Exact entropy, integral brackets, and the infinite-lexicon limit."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zipfentropy import (
    ZipfModel,
    decreasing_threshold,
    entropy_bounds,
    entropy_exact,
    entropy_infinite,
    entropy_surface,
    log_integral,
    log_weighted_sum_bounds,
)


def _log_weighted_reference(n: int, s: float) -> float:
    """Direct summation of ln(k) * k^-s, the quantity the bracket bounds."""
    k = np.arange(1, n + 1, dtype=np.float64)
    return float(np.sum(np.log(k) * k**-s))


class TestEntropyExact:
    def test_uniform_is_log2(self):
        for n in (2, 8, 1024):
            np.testing.assert_allclose(entropy_exact(ZipfModel(0.0, n)), math.log2(n), atol=1e-12)

    def test_classic_point(self):
        # high-precision reference for s=1, N=100
        h = entropy_exact(ZipfModel(1.0, 100))
        np.testing.assert_allclose(h, 5.310239799410164, rtol=1e-12)

    def test_single_symbol_is_zero(self):
        assert entropy_exact(ZipfModel(1.7, 1)) == 0.0

    def test_two_symbol_binary_entropy(self):
        """N=2 reduces to the binary entropy of p(1)."""
        m = ZipfModel(2.0, 2)
        p = m.probability(1)
        expected = -(p * math.log2(p) + (1 - p) * math.log2(1 - p))
        np.testing.assert_allclose(entropy_exact(m), expected, rtol=1e-14)


class TestLogIntegral:
    def test_window_near_one(self):
        # antiderivative degenerates to (ln x)^2 / 2 at s = 1
        np.testing.assert_allclose(log_integral(1.0, math.e, 1.0), 0.5, rtol=1e-12)

    def test_closed_form_s_two(self):
        np.testing.assert_allclose(
            log_integral(3.0, math.inf, 2.0), (math.log(3.0) + 1.0) / 3.0, rtol=1e-12
        )

    def test_degenerate_interval(self):
        assert log_integral(2.0, 2.0, 1.3) == 0.0

    def test_infinite_upper_needs_decay(self):
        with pytest.raises(ValueError):
            log_integral(3.0, math.inf, 1.0)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            log_integral(0.0, 2.0, 1.5)
        with pytest.raises(ValueError):
            log_integral(3.0, 2.0, 1.5)

    @given(
        a=st.floats(min_value=0.5, max_value=50.0),
        width=st.floats(min_value=0.0, max_value=50.0),
        s=st.floats(min_value=-1.0, max_value=4.0),
    )
    @settings(max_examples=60)
    def test_matches_quadrature(self, a, width, s):
        """Antiderivative agrees with Simpson quadrature on finite windows."""
        b = a + width
        x = np.linspace(a, b, 40001)
        f = np.log(x) * x**-s
        numeric = float((f[0] + f[-1] + 4 * f[1:-1:2].sum() + 2 * f[2:-2:2].sum()))
        numeric *= (b - a) / 40000 / 3
        np.testing.assert_allclose(log_integral(a, b, s), numeric, rtol=1e-6, atol=1e-9)


class TestBracket:
    def test_threshold(self):
        np.testing.assert_allclose(decreasing_threshold(1.0), math.e, rtol=1e-15)
        np.testing.assert_allclose(decreasing_threshold(0.5), math.e**2, rtol=1e-15)
        with pytest.raises(ValueError):
            decreasing_threshold(0.0)

    def test_tiny_n_collapses_to_exact(self):
        lo, hi = log_weighted_sum_bounds(3, 1.0)
        assert lo == hi
        np.testing.assert_allclose(lo, _log_weighted_reference(3, 1.0), rtol=1e-14)

    @given(
        n=st.integers(min_value=1, max_value=5000),
        s=st.floats(min_value=0.05, max_value=4.0),
    )
    @settings(max_examples=80)
    def test_contains_direct_sum(self, n, s):
        lo, hi = log_weighted_sum_bounds(n, s)
        ref = _log_weighted_reference(n, s)
        assert lo <= ref + 1e-9
        assert hi >= ref - 1e-9

    def test_gap_shrinks_with_exponent(self):
        """Steeper laws put more of the sum into the exactly-kept head."""
        gaps = []
        for s in (0.8, 1.2, 1.6, 2.0):
            lo, hi = log_weighted_sum_bounds(10**5, s)
            gaps.append(hi - lo)
        assert gaps == sorted(gaps, reverse=True)


class TestEntropyBounds:
    def test_contains_exact_spot(self):
        for s, n in [(0.3, 50), (1.0, 10**4), (1.5, 10**6), (3.0, 999)]:
            b = entropy_bounds(ZipfModel(s, n))
            assert b.exact is not None
            assert b.lower <= b.exact + 1e-9
            assert b.upper >= b.exact - 1e-9

    def test_reference_gap(self):
        """The bracket width at s=1, N=10^4 lands near 0.054 bits."""
        b = entropy_bounds(ZipfModel(1.0, 10**4))
        np.testing.assert_allclose(b.upper - b.lower, 0.05397854923862688, rtol=1e-10)
        assert b.upper - b.lower < 0.1

    def test_method_labels(self):
        assert entropy_bounds(ZipfModel(1.0, 3)).method == "exact-sum"
        big = entropy_bounds(ZipfModel(1.0, 10**4))
        assert big.method == "riemann-bracket"
        assert big.head_terms >= 2

    def test_requires_positive_exponent(self):
        with pytest.raises(ValueError):
            entropy_bounds(ZipfModel(0.0, 100))

    @given(
        s=st.floats(min_value=0.1, max_value=3.5),
        n=st.integers(min_value=1, max_value=10**5),
    )
    @settings(max_examples=50, deadline=None)
    def test_contains_exact_random(self, s, n):
        b = entropy_bounds(ZipfModel(s, n))
        h = entropy_exact(ZipfModel(s, n))
        assert b.lower - 1e-9 <= h <= b.upper + 1e-9


class TestEntropyInfinite:
    def test_known_point(self):
        np.testing.assert_allclose(entropy_infinite(2.0), 2.3625895546987437, rtol=1e-12)

    def test_deep_tail(self):
        # at s=20 nearly all mass sits on rank 1
        np.testing.assert_allclose(entropy_infinite(20.0), 2.045887190072268e-05, rtol=1e-10)

    def test_diverges_at_and_below_one(self):
        for s in (1.0, 0.5, 0.0):
            with pytest.raises(ValueError):
                entropy_infinite(s)

    def test_finite_lexicon_stays_below(self):
        h_fin = entropy_exact(ZipfModel(1.5, 1000))
        h_inf = entropy_infinite(1.5)
        assert h_fin < h_inf


class TestEntropySurface:
    def test_order_is_n_major(self):
        pts = entropy_surface([1.0, 2.0], [10, 100])
        assert [(p.n, p.s) for p in pts] == [(10, 1.0), (10, 2.0), (100, 1.0), (100, 2.0)]

    def test_point_values_match_bounds(self):
        (pt,) = entropy_surface([1.5], [1000])
        b = entropy_bounds(ZipfModel(1.5, 1000))
        np.testing.assert_allclose(pt.h_mid, 0.5 * (b.lower + b.upper), rtol=1e-14)
        np.testing.assert_allclose(pt.h_gap, b.upper - b.lower, rtol=1e-14)

    def test_skips_out_of_domain_points(self):
        pts = entropy_surface([-1.0, 1.0], [10])
        assert [(p.s, p.n) for p in pts] == [(1.0, 10)]

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            entropy_surface([], [10])
        with pytest.raises(ValueError):
            entropy_surface([1.0], [])
