import math

import numpy as np
import pytest
from scipy.integrate import quad

from zfhp import (
    QuadratureWarning,
    TruncatedSeries,
    WeightFamily,
    duren_coefficient_check,
    hardy_from_lq_check,
    hp_norm_estimate,
    lq_norm,
    reverse_holder_check,
    weighted_l2_norm,
)
from zfhp.norms import (
    boundary_values,
    circle_abs_power_integral,
    circle_mean,
    default_node_count,
    half_offset_points,
    reverse_holder_constant,
    sup_norm_estimate,
)


def random_polynomials(count: int, max_degree: int = 64, seed: int = 20260809):
    """Seeded complex polynomials with coefficients in [-1, 1]^2."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        degree = int(rng.integers(1, max_degree + 1))
        coeffs = rng.uniform(-1, 1, degree + 1) + 1j * rng.uniform(-1, 1, degree + 1)
        out.append(TruncatedSeries(coeffs))
    return out


class TestLqNorm:
    def test_examples(self):
        assert lq_norm(TruncatedSeries([1.0, -1.0]), 1.5) == pytest.approx(2 ** (2 / 3), abs=1e-15)
        assert lq_norm(TruncatedSeries([0, 0, 0, -2.5]), 0.7) == pytest.approx(2.5, abs=1e-15)
        assert lq_norm(TruncatedSeries([1, 1, 1, 1]), 2.0) == pytest.approx(2.0, abs=1e-15)

    def test_rejects_nonpositive_q(self):
        with pytest.raises(ValueError):
            lq_norm(TruncatedSeries([1.0]), 0.0)

    def test_quasi_triangle_below_one(self):
        rng = np.random.default_rng(5)
        q = 0.5
        for _ in range(20):
            f = TruncatedSeries(rng.normal(size=30))
            g = TruncatedSeries(rng.normal(size=30))
            lhs = lq_norm(f + g, q) ** q
            rhs = lq_norm(f, q) ** q + lq_norm(g, q) ** q
            assert lhs <= rhs * (1 + 1e-12)


class TestWeightedL2:
    def test_identity_weights_match_l2(self):
        f = TruncatedSeries([1.0, -2.0, 3.0])
        assert weighted_l2_norm(f, WeightFamily("identity")) == pytest.approx(
            lq_norm(f, 2.0), abs=1e-15
        )

    def test_power_weight_at_one(self):
        f = TruncatedSeries([0.0, 1.0])
        assert weighted_l2_norm(f, WeightFamily("power", alpha=1.0)) == pytest.approx(1.0)

    def test_geometric_weight(self):
        f = TruncatedSeries([0.0, 0.0, 1.0])
        got = weighted_l2_norm(f, WeightFamily("geometric", eps=0.5))
        assert got == pytest.approx(0.25, abs=1e-15)


class TestBoundaryValues:
    def test_matches_polyval_oracle(self):
        rng = np.random.default_rng(2)
        f = TruncatedSeries(rng.normal(size=40) + 1j * rng.normal(size=40))
        nodes = 64
        got = boundary_values(f, nodes)
        want = np.polyval(f.coeffs[::-1], half_offset_points(nodes))
        assert np.max(np.abs(got - want)) < 1e-12

    def test_z_equal_one_never_sampled(self):
        pts = half_offset_points(32)
        assert np.min(np.abs(pts - 1.0)) > 1e-3

    def test_folding_handles_degree_above_nodes(self):
        rng = np.random.default_rng(3)
        f = TruncatedSeries(rng.normal(size=200))
        nodes = 16
        got = boundary_values(f, nodes)
        want = np.polyval(f.coeffs[::-1], half_offset_points(nodes))
        assert np.max(np.abs(got - want)) < 1e-11


class TestHpNorm:
    def test_constant(self):
        for p in (0.3, 1.0, 2.0, 4.0):
            assert hp_norm_estimate(TruncatedSeries([-3.0]), p, 16) == pytest.approx(3.0)

    def test_monomial_is_unimodular(self):
        f = TruncatedSeries([0, 0, 0, 1.0])
        for p in (0.5, 1.0, 2.0):
            assert hp_norm_estimate(f, p, 32) == pytest.approx(1.0, abs=1e-14)

    def test_one_plus_z_parseval(self):
        f = TruncatedSeries([1.0, 1.0])
        assert hp_norm_estimate(f, 2.0, 16) == pytest.approx(math.sqrt(2.0), abs=1e-12)

    def test_parseval_random(self):
        for f in random_polynomials(10, seed=1):
            nodes = default_node_count(f.degree)
            assert hp_norm_estimate(f, 2.0, nodes) == pytest.approx(
                lq_norm(f, 2.0), abs=1e-12, rel=1e-12
            )

    def test_node_validation(self):
        f = TruncatedSeries([1.0])
        with pytest.raises(ValueError):
            hp_norm_estimate(f, 2.0, 8)
        with pytest.raises(ValueError):
            hp_norm_estimate(f, 2.0, 17)
        with pytest.raises(ValueError):
            hp_norm_estimate(f, 0.0, 16)

    def test_undersampling_warns(self):
        f = TruncatedSeries(np.ones(100))
        with pytest.warns(QuadratureWarning):
            hp_norm_estimate(f, 2.0, 16)

    def test_nesting_in_p(self):
        for f in random_polynomials(10, seed=4):
            nodes = default_node_count(f.degree)
            v_half = hp_norm_estimate(f, 0.5, nodes)
            v_one = hp_norm_estimate(f, 1.0, nodes)
            v_two = hp_norm_estimate(f, 2.0, nodes)
            assert v_half <= v_one + 1e-12
            assert v_one <= v_two + 1e-12

    def test_circle_means_nondecreasing_in_radius(self):
        for f in random_polynomials(5, seed=6):
            nodes = default_node_count(f.degree)
            for p in (0.5, 1.0, 2.0):
                means = [circle_mean(f, p, nodes, radius=r) for r in (0.3, 0.7, 1.0)]
                assert means[0] <= means[1] + 1e-12
                assert means[1] <= means[2] + 1e-12


class TestDuren:
    def test_constant(self):
        lhs, rhs = duren_coefficient_check(TruncatedSeries([1.0]), 64)
        assert lhs == pytest.approx(1.0)
        assert rhs == pytest.approx(math.pi)

    def test_single_z(self):
        lhs, rhs = duren_coefficient_check(TruncatedSeries([0.0, 1.0]), 64)
        assert lhs == pytest.approx(0.5)
        assert rhs == pytest.approx(math.pi)

    def test_random_battery(self):
        for f in random_polynomials(100):
            lhs, rhs = duren_coefficient_check(f)
            assert lhs <= rhs + 1e-9


class TestHardyFromLq:
    def test_parseval_equality_at_q2(self):
        for f in random_polynomials(10, seed=8):
            lhs, rhs = hardy_from_lq_check(f, 2.0)
            assert lhs == pytest.approx(rhs, abs=1e-12, rel=1e-12)

    def test_extremal_case_q1(self):
        lhs, rhs = hardy_from_lq_check(TruncatedSeries([1.0, 1.0]), 1.0, 4096)
        assert rhs == 2.0
        assert lhs <= rhs
        assert lhs == pytest.approx(2.0, abs=1e-5)

    def test_random_battery_q15(self):
        for f in random_polynomials(100):
            lhs, rhs = hardy_from_lq_check(f, 1.5)
            assert lhs <= rhs + 1e-9

    def test_rejects_q_outside_range(self):
        f = TruncatedSeries([1.0])
        with pytest.raises(ValueError):
            hardy_from_lq_check(f, 0.9)
        with pytest.raises(ValueError):
            hardy_from_lq_check(f, 2.1)


class TestReverseHolder:
    def test_admissibility(self):
        f = TruncatedSeries([1.0])
        with pytest.raises(ValueError):
            reverse_holder_check(f, 1.0, 0.5, 64)  # q = p/(1+p) exactly: excluded
        with pytest.raises(ValueError):
            reverse_holder_check(f, 1.0, 0.9, 64)

    def test_zero_series(self):
        lhs, rhs = reverse_holder_check(TruncatedSeries([0.0, 0.0]), 1.0, 0.4, 64)
        assert lhs == 0.0
        assert rhs == 0.0

    def test_exact_division_one_minus_z(self):
        lhs, rhs = reverse_holder_check(TruncatedSeries([1.0, -1.0]), 1.0, 0.4, 1024)
        assert lhs == pytest.approx(1.0, abs=1e-12)
        assert rhs > 0.0
        assert lhs <= rhs

    def test_constant_integral_closed_form(self):
        # oracle: direct quadrature of |1 - e^(i theta)|^beta against the
        # Gamma-function closed form
        for beta in (2.0, -0.4, -2.0 / 3.0):
            oracle = quad(lambda t: (2.0 * math.sin(t / 2.0)) ** beta, 0.0, math.pi, limit=200)[0]
            assert circle_abs_power_integral(beta) == pytest.approx(oracle / math.pi, rel=1e-9)
        with pytest.raises(ValueError):
            circle_abs_power_integral(-1.0)

    def test_constant_value_p1_q04(self):
        # C = I^(3/2) with I = int |1-z|^(-2/3) dm
        want = circle_abs_power_integral(-2.0 / 3.0) ** 1.5
        assert reverse_holder_constant(1.0, 0.4) == pytest.approx(want, rel=1e-12)

    def test_random_battery_with_refinement(self):
        for f in random_polynomials(100):
            lhs, rhs = reverse_holder_check(f, 1.0, 0.4, 4096)
            assert lhs <= rhs + 1e-9
        # refinement control on a subsample
        for f in random_polynomials(10, seed=13):
            v1, _ = reverse_holder_check(f, 1.0, 0.4, 4096)
            v2, _ = reverse_holder_check(f, 1.0, 0.4, 8192)
            assert abs(v1 - v2) <= 1e-4 * max(v1, 1e-12)


def test_sup_norm_is_max_over_nodes():
    f = TruncatedSeries([1.0, 1.0])
    assert sup_norm_estimate(f, 4096) == pytest.approx(2.0, abs=1e-6)


def test_default_node_count_policy():
    assert default_node_count(0) == 16
    assert default_node_count(3) == 16
    assert default_node_count(64) == 512  # 4 * 65 = 260 -> next power of two
    assert default_node_count(1000) == 4096
