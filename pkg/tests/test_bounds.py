import math

import numpy as np
import pytest
from scipy.special import lambertw as scipy_lambertw

from oddcolour import bounds
from oddcolour.bounds import (
    BinomialTails,
    WalkConfig,
    biased_walk_tail_bound,
    binomial_tails,
    chernoff_lower,
    chernoff_upper,
    factorial_ratio_check,
    few_odd_colours_bound,
    greedy_hodd_bound,
    hodd_surplus,
    lambert_wm1,
    no_odd_colour_bound,
    odd_params,
    odd_surplus,
    resample_size,
    simulate_walk,
)


class TestOddSurplus:
    def test_reference_values(self):
        assert odd_surplus(49) == 34
        assert odd_surplus(64) == 35

    def test_domain(self):
        with pytest.raises(ValueError):
            odd_surplus(2)

    def test_monotone(self):
        values = [odd_surplus(d) for d in range(3, 3000, 7)]
        assert values == sorted(values)


class TestLambertWm1:
    def test_branch_point(self):
        assert lambert_wm1(-math.exp(-1.0)) == -1.0

    def test_reference_value_against_scipy(self):
        ours = lambert_wm1(-0.1)
        ref = scipy_lambertw(-0.1, k=-1).real
        assert ours == pytest.approx(ref, rel=1e-10)
        assert ours == pytest.approx(-3.577152063957297, rel=1e-9)

    def test_round_trip(self):
        rng = np.random.default_rng(0)
        for y in -rng.uniform(1e-9, math.exp(-1.0), size=100):
            x = lambert_wm1(float(y))
            assert x <= -1.0
            assert x * math.exp(x) == pytest.approx(y, rel=1e-10)

    def test_domain(self):
        for bad in (-1.0, 0.0, 0.5, -0.5):
            with pytest.raises(ValueError):
                lambert_wm1(bad)


class TestResampleSize:
    def test_reference_value(self):
        assert resample_size(49) == 17
        assert 2 * resample_size(49) <= odd_surplus(49)

    def test_matches_scipy_on_sample(self):
        for d in (2, 5, 10, 49, 64, 333, 10 ** 4):
            y = -1.0 / (2.0 * math.sqrt(2.0) * math.e * d)
            want = math.ceil(-2.0 * scipy_lambertw(y, k=-1).real)
            assert resample_size(d) == want

    def test_nondecreasing(self):
        values = [resample_size(d) for d in range(2, 2000, 13)]
        assert values == sorted(values)

    def test_domain(self):
        with pytest.raises(ValueError):
            resample_size(1)

    def test_schedule_params_are_coherent(self):
        for d in (49, 64, 500, 10 ** 4):
            p = odd_params(d)
            assert p.eta == odd_surplus(d)
            assert p.m == resample_size(d)
            assert p.k == d + p.eta
            assert p.tau == p.eta
            assert 2 * p.m <= p.eta


class TestWalkTailBound:
    def test_reference_value(self):
        # direct unlogged evaluation as the oracle
        direct = math.sqrt(2) * (20 / (100 * math.e)) ** 5
        assert biased_walk_tail_bound(10, 0, 100) == pytest.approx(direct, rel=1e-12)
        assert direct == pytest.approx(3.0492467e-06, rel=1e-6)

    def test_k_equals_n_clamps_to_one(self):
        assert biased_walk_tail_bound(7, 7, 3.0) == 1.0
        assert biased_walk_tail_bound(7, 7, 3.0, clamp=False) == pytest.approx(math.sqrt(2))

    def test_nonincreasing_in_tau(self):
        vals = [biased_walk_tail_bound(20, 4, tau, clamp=False) for tau in (10, 40, 160, 640)]
        assert vals == sorted(vals, reverse=True)

    def test_domain(self):
        with pytest.raises(ValueError):
            biased_walk_tail_bound(5, 6, 1.0)
        with pytest.raises(ValueError):
            biased_walk_tail_bound(5, 2, 0.0)


class TestResampleFailureBounds:
    def test_specialisation_at_tau_2m(self):
        for m in range(1, 40):
            want = math.sqrt(2) * math.exp(-m / 2.0)
            assert no_odd_colour_bound(m, 2 * m, clamp=False) == pytest.approx(want, rel=1e-10)

    def test_few_odd_at_t_equals_m(self):
        for m, tau in ((3, 10.0), (8, 100.0), (20, 7.0)):
            assert few_odd_colours_bound(m, m, tau, clamp=False) == pytest.approx(
                no_odd_colour_bound(m, tau, clamp=False), rel=1e-12
            )

    def test_reference_value(self):
        direct = math.sqrt(2) * 2 * math.sqrt(2 / (32 * math.e))
        assert few_odd_colours_bound(2, 1, 32) == pytest.approx(direct, rel=1e-12)
        assert direct == pytest.approx(0.42888194, rel=1e-7)

    def test_t_zero_clamps(self):
        assert few_odd_colours_bound(5, 0, 10.0) == 1.0

    def test_monotone_in_tau(self):
        for m in (2, 6, 14):
            grid = [no_odd_colour_bound(m, tau, clamp=False) for tau in (1, 4, 16, 64)]
            assert grid == sorted(grid, reverse=True)
            grid = [few_odd_colours_bound(m, m // 2, tau, clamp=False)
                    for tau in (1, 4, 16, 64)]
            assert grid == sorted(grid, reverse=True)

    def test_domains(self):
        with pytest.raises(ValueError):
            no_odd_colour_bound(0, 1.0)
        with pytest.raises(ValueError):
            few_odd_colours_bound(3, 4, 1.0)


class TestChernoff:
    def test_reference_values(self):
        assert chernoff_lower(100, 20) == pytest.approx(math.exp(-2.0), rel=1e-12)
        assert chernoff_upper(100, 20) == pytest.approx(math.exp(-400.0 / 240.0), rel=1e-12)

    def test_domains(self):
        with pytest.raises(ValueError):
            chernoff_lower(10, 10)
        with pytest.raises(ValueError):
            chernoff_upper(10, 0)

    def test_monotone_in_deviation(self):
        lows = [chernoff_lower(100, d) for d in (1, 10, 50, 99)]
        highs = [chernoff_upper(100, d) for d in (1, 10, 50, 200)]
        assert lows == sorted(lows, reverse=True)
        assert highs == sorted(highs, reverse=True)

    def test_monte_carlo_tails_below_bounds(self):
        for n, p, dev in ((200, 0.5, 20), (500, 0.1, 15), (100, 0.3, 12)):
            mu = n * p
            tails = binomial_tails(n, p, dev, samples=200_000, seed=42)
            assert tails.emp_lower <= chernoff_lower(mu, dev) + 3 * tails.half_width_lower
            assert tails.emp_upper <= chernoff_upper(mu, dev) + 3 * tails.half_width_upper


class TestHOddSurplus:
    def test_h2_closed_form_equality(self):
        t, m, eta, closed = hodd_surplus(2, 10)
        assert (t, m, eta) == (1, 2, 32)
        assert closed == 32.0

    def test_h3(self):
        t, m, eta, closed = hodd_surplus(3, 10)
        assert (t, m, eta) == (2, 4, 48)
        assert closed == 64.0

    def test_edge_too_small(self):
        with pytest.raises(ValueError, match="too small"):
            hodd_surplus(3, 2)

    def test_h1_falls_back_to_odd_surplus(self):
        t, m, eta, closed = hodd_surplus(1, 5, 64)
        assert (t, m) == (0, 0)
        assert eta == odd_surplus(64)

    def test_closed_form_dominates_on_grid(self):
        for h in range(2, 30):
            for eps in range(2 * (h - 1), 140, 3):
                if eps < h:
                    continue
                params = hodd_surplus(h, eps, 64)
                assert params.eta <= 32 * (h - 1)

    def test_small_eps_branch(self):
        params = hodd_surplus(10, 12, 64)  # eps < 2(h-1) = 18
        assert params.t == 3 and params.m == 12
        assert params.closed_bound == pytest.approx(
            2 * math.e ** 2 * 12 ** (2 + 1 / math.log(64)) / 3, rel=1e-12
        )


class TestFactorialRatio:
    def test_smallest_case(self):
        assert factorial_ratio_check(2)  # 2 <= sqrt(2)*(4/e) ~ 2.081

    def test_all_even_up_to_300(self):
        assert all(factorial_ratio_check(n) for n in range(2, 301, 2))

    def test_odd_rejected(self):
        with pytest.raises(ValueError):
            factorial_ratio_check(3)


def test_greedy_hodd_bound_values():
    assert greedy_hodd_bound(1, 2, 2) == 5
    assert greedy_hodd_bound(2, 3, 3) == 10
    for delta in (1, 4, 9):
        assert greedy_hodd_bound(1, delta, delta) == 2 * delta + 1


class TestSimulateWalk:
    def test_never_policy_is_deterministic_up_drift(self):
        cfg = WalkConfig(n=30, k=20, tau=1.0, s0=0, policy="never")
        est = simulate_walk(cfg, samples=2000, seed=1)
        assert est.p_hat == 0.0
        assert est.mean_final == 30.0

    def test_adversarial_respects_bound_on_small_grid(self):
        for n, k, tau in ((10, 0, 40), (20, 5, 80), (16, 4, 64)):
            cfg = WalkConfig(n=n, k=k, tau=tau)
            est = simulate_walk(cfg, samples=100_000, seed=7)
            assert est.p_hat <= biased_walk_tail_bound(n, k, tau) + 3 * est.half_width

    def test_policy_violation_detected(self):
        cfg = WalkConfig(n=5, k=0, tau=10.0, s0=1,
                         policy=lambda s: np.full_like(s, 0.9, dtype=float))
        with pytest.raises(ValueError, match="violates"):
            simulate_walk(cfg, samples=100, seed=0)

    def test_state_independent_policy_shifts_exactly(self):
        # constant policy stays legal because s0 dominates n + p*tau
        policy = lambda s: np.full_like(s, 0.5, dtype=float)
        base = WalkConfig(n=12, k=7, tau=1.0, s0=13, policy=policy)
        shifted = WalkConfig(n=12, k=12, tau=1.0, s0=18, policy=policy)
        est0 = simulate_walk(base, samples=20_000, seed=5)
        est1 = simulate_walk(shifted, samples=20_000, seed=5)
        assert est0.p_hat == est1.p_hat
        assert est1.mean_final - est0.mean_final == pytest.approx(5.0)

    def test_bad_config_rejected(self):
        with pytest.raises(ValueError):
            WalkConfig(n=5, k=6, tau=1.0)
        with pytest.raises(ValueError):
            WalkConfig(n=5, k=2, tau=0.0)
