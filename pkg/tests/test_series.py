import math

import numpy as np
import pytest

from zfhp import (
    TruncatedSeries,
    apply_one_minus_shift,
    bounded_divisor_sum,
    cumulative_sum,
    hk_coeffs,
    ims_hk_coeffs,
    lq_norm,
    mobius_partial_sum_ims,
    mobius_sum_over_k,
    wn_operator,
)


def log_series_oracle(f0_coeffs: np.ndarray) -> np.ndarray:
    """Taylor coefficients of log(f) from those of f (f(0) != 0).

    Uses the differential recurrence n g_n f_0 = n f_n - sum_{m<n} m g_m f_{n-m},
    a path independent of any logarithm expansion identity.
    """
    f = np.asarray(f0_coeffs, dtype=np.float64)
    g = np.zeros_like(f)
    g[0] = math.log(f[0])
    for n in range(1, f.size):
        conv = sum(m * g[m] * f[n - m] for m in range(1, n))
        g[n] = (n * f[n] - conv) / (n * f[0])
    return g


def ims_hk_oracle(k: int, degree: int) -> np.ndarray:
    """(I - S) h_k = (1/k) log((1 + z + ... + z^(k-1))/k), expanded numerically."""
    poly = np.zeros(degree + 1)
    poly[: min(k, degree + 1)] = 1.0 / k
    return log_series_oracle(poly) / k


class TestTruncatedSeries:
    def test_rejects_nan_and_empty(self):
        with pytest.raises(ValueError):
            TruncatedSeries([])
        with pytest.raises(ValueError):
            TruncatedSeries([1.0, math.nan])
        with pytest.raises(ValueError):
            TruncatedSeries([1.0, math.inf])

    def test_degree_keeps_trailing_zeros(self):
        f = TruncatedSeries([1.0, 0.0, 0.0])
        assert f.degree == 2

    def test_arithmetic_pads_to_common_degree(self):
        f = TruncatedSeries([1.0, 2.0])
        g = TruncatedSeries([1.0])
        assert np.allclose((f + g).coeffs, [2.0, 2.0])
        assert np.allclose((f - g).coeffs, [0.0, 2.0])
        assert np.allclose((2.0 * f).coeffs, [2.0, 4.0])

    def test_coeffs_read_only(self):
        f = TruncatedSeries([1.0, 2.0])
        with pytest.raises(ValueError):
            f.coeffs[0] = 3.0


class TestShiftPair:
    def test_one_minus_shift_examples(self):
        assert np.allclose(apply_one_minus_shift(TruncatedSeries([1, 2, 3])).coeffs, [1, 1, 1])
        assert np.allclose(apply_one_minus_shift(TruncatedSeries([1, 0, 0])).coeffs, [1, -1, 0])

    def test_cumulative_sum_examples(self):
        assert np.allclose(cumulative_sum(TruncatedSeries([1, 1, 1])).coeffs, [1, 2, 3])
        assert np.allclose(cumulative_sum(TruncatedSeries([1, -1, 0])).coeffs, [1, 0, 0])
        # constant c maps to the geometric-series coefficients c, c, ..., c
        assert np.allclose(cumulative_sum(TruncatedSeries([2.5, 0, 0, 0])).coeffs, [2.5] * 4)

    def test_inverse_pair_on_random_series(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            coeffs = rng.normal(size=50) + 1j * rng.normal(size=50)
            f = TruncatedSeries(coeffs)
            back = apply_one_minus_shift(cumulative_sum(f))
            assert np.allclose(back.coeffs, f.coeffs, atol=1e-12)
            forth = cumulative_sum(apply_one_minus_shift(f))
            assert np.allclose(forth.coeffs, f.coeffs, atol=1e-12)


class TestHkGenerators:
    def test_ims_k2_hand_expansion(self):
        got = ims_hk_coeffs(2, 3).coeffs
        want = [-math.log(2) / 2, 0.5, -0.25, 1.0 / 6.0]
        assert np.allclose(got, want, atol=1e-15)

    def test_ims_k3_hand_expansion(self):
        got = ims_hk_coeffs(3, 2).coeffs
        want = [-math.log(3) / 3, 1.0 / 3.0, 1.0 / 6.0]
        assert np.allclose(got, want, atol=1e-15)

    @pytest.mark.parametrize("k", range(2, 8))
    def test_ims_coefficient_at_degree_k(self, k):
        coeffs = ims_hk_coeffs(k, k).coeffs
        assert coeffs[k] == pytest.approx((1.0 / k) * (1.0 / k - 1.0), abs=1e-15)

    @pytest.mark.parametrize("k", range(2, 11))
    def test_ims_matches_log_series_oracle(self, k):
        got = ims_hk_coeffs(k, 200).coeffs
        want = ims_hk_oracle(k, 200)
        assert np.max(np.abs(got - want)) < 1e-12

    def test_ims_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            ims_hk_coeffs(1, 10)
        with pytest.raises(ValueError):
            ims_hk_coeffs(2, -1)

    def test_hk_k2_running_values(self):
        h2 = hk_coeffs(2, 4).coeffs
        a0 = -math.log(2) / 2
        assert h2[0] == pytest.approx(a0, abs=1e-15)
        assert h2[1] == pytest.approx(a0 + 0.5, abs=1e-15)
        assert h2[2] == pytest.approx(a0 + 0.25, abs=1e-15)

    @pytest.mark.parametrize("k", [2, 5, 10])
    def test_hk_inverts_back_to_ims(self, k):
        n = 500
        recovered = apply_one_minus_shift(hk_coeffs(k, n))
        assert np.allclose(recovered.coeffs, ims_hk_coeffs(k, n).coeffs, atol=1e-13)

    @pytest.mark.parametrize("k", range(2, 11))
    def test_hk_tail_decay(self, k):
        n = 10**5
        coeffs = hk_coeffs(k, n).coeffs
        m = np.arange(k * k + 1, n + 1, dtype=np.float64)
        assert np.all(np.abs(coeffs[k * k + 1 :]) < 10.0 * k / m)


class TestMobiusPartialSums:
    def test_n2_is_minus_ims2(self, mobius_1k):
        got = mobius_partial_sum_ims(2, 50, mobius_1k)
        want = ims_hk_coeffs(2, 50)
        assert np.array_equal(got.coeffs, -want.coeffs)

    def test_hand_coefficient_n3_m6(self, mobius_1k):
        got = mobius_partial_sum_ims(3, 6, mobius_1k)
        assert got.coeffs[6] == pytest.approx(7.0 / 36.0, abs=1e-15)

    @pytest.mark.parametrize("n", [10, 100])
    def test_coefficient_identity_cross_check(self, n, mobius_1k):
        degree = 2000
        got = mobius_partial_sum_ims(n, degree, mobius_1k)
        c_n = mobius_sum_over_k(mobius_1k, n) - 1.0  # sum over k = 2..n
        rng = np.random.default_rng(n)
        for m in [1, 2, 6, 30, 210, *rng.integers(1, degree + 1, size=40)]:
            divisor_part = bounded_divisor_sum(int(m), n, mobius_1k) - 1  # drop d = 1
            want = (c_n - divisor_part) / m
            assert got.coeffs[m] == pytest.approx(want, abs=1e-12), m

    def test_residual_shrinks_from_n10_to_n100(self, mobius_1k):
        degree = 10**5
        target = np.zeros(degree + 1)
        target[0], target[1] = 1.0, -1.0
        values = []
        for n in (10, 100):
            res = mobius_partial_sum_ims(n, degree, mobius_1k).coeffs - target
            values.append(lq_norm(TruncatedSeries(res), 2.0))
        assert values[1] < values[0]

    def test_argument_validation(self, mobius_1k):
        with pytest.raises(ValueError):
            mobius_partial_sum_ims(1, 10, mobius_1k)
        with pytest.raises(ValueError):
            mobius_partial_sum_ims(1001, 10, mobius_1k)


class TestWnOperator:
    def test_w1_is_identity(self):
        f = TruncatedSeries([1.0, 2.0, 3.0])
        assert np.array_equal(wn_operator(f, 1).coeffs, f.coeffs)

    def test_examples(self):
        assert np.allclose(wn_operator(TruncatedSeries([1.0]), 2).coeffs, [1, 1])
        assert np.allclose(wn_operator(TruncatedSeries([0.0, 1.0]), 3).coeffs, [0, 0, 0, 1, 1, 1])

    def test_semigroup(self):
        rng = np.random.default_rng(3)
        f = TruncatedSeries(rng.normal(size=7))
        for m, n in [(2, 3), (3, 2), (4, 5)]:
            twice = wn_operator(wn_operator(f, n), m)
            once = wn_operator(f, m * n)
            assert np.array_equal(twice.coeffs, once.coeffs)

    def test_cap_truncates(self):
        f = TruncatedSeries([1.0, 1.0])
        assert wn_operator(f, 3, cap=2).coeffs.size == 3
