import math

import pytest

from conftest import ZERO_50000, ZERO_100000
from zetamap.errors import DomainError, MapDomainError
from zetamap.zeros import (
    ESTIMATOR,
    MAP,
    asymptotic_residual,
    closed_form,
    estimate_zero,
    exact_residual,
    iterate_map,
    map_step,
    solve_zero,
)

# (n, delta, t after 20 map steps from t0 = 1, closed-form estimate)
TABLE = [
    (1, 0.0921796, 14.134725496347967, 14.521346953065633),
    (10000, 0.2639143, 9877.782653979717, 9877.629616492992),
    (50000, 0.1572079, 40433.68738541853, 40433.62056224795),
    (100000, 0.1595388, 74920.82749899139, 74920.89103264698),
]


@pytest.mark.parametrize("n,delta,t_map,t_hat", TABLE)
def test_estimator_golden(n, delta, t_map, t_hat):
    est = estimate_zero(n)
    assert est.method == ESTIMATOR
    assert est.iterations == 0
    assert abs(est.t - t_hat) <= 1e-9 * t_hat


def test_estimator_n1_uses_negative_lambert_argument():
    assert (1 - 11 / 8) / math.e < 0
    assert estimate_zero(1).t == pytest.approx(14.521346953065633, rel=1e-14)


def test_closed_form_inverts_smooth_count():
    for a in (0.5, 3.0, 250.0, 1e5 - 1.375):
        t = closed_form(a)
        lhs = t / (2 * math.pi) * math.log(t / (2 * math.pi * math.e))
        assert lhs == pytest.approx(a, rel=1e-13, abs=1e-13)


def test_closed_form_at_zero_is_the_limit():
    assert closed_form(0.0) == pytest.approx(closed_form(1e-12), rel=1e-9)


def test_estimates_strictly_increase():
    prev = 0.0
    for n in range(1, 160001):
        t = closed_form(n - 1.375)
        assert t > prev
        prev = t


def test_estimate_rejects_bad_index():
    with pytest.raises(DomainError):
        estimate_zero(0)
    with pytest.raises(DomainError):
        estimate_zero(2.5)


@pytest.mark.parametrize("n,delta,t_map,t_hat", TABLE)
def test_map_golden(n, delta, t_map, t_hat):
    orbit = iterate_map(n, delta, 20, t0=1.0)
    assert len(orbit.iterates) == 21
    assert orbit.iterates[0] == 1.0
    assert abs(orbit.final - t_map) <= 1e-5


def test_map_step_with_zero_delta_is_the_estimator():
    for t_prev in (1.0, 14.1, 1234.5):
        assert map_step(7, t_prev, 0.0) == estimate_zero(7).t


def test_map_step_first_iterate_regression():
    assert map_step(1, 1.0, 0.0921796) == pytest.approx(14.820085175456176, abs=1e-12)


def test_map_step_near_fixed_point_at_n1():
    t = 14.134725496347967
    assert abs(map_step(1, t, 0.0921796) - t) <= 1e-6


def test_map_domain_error_carries_context():
    # arg zeta(1/2 + 14.82i) is about +1.44, so a large delta pushes a below -1
    t_prev = 14.820085175456176
    with pytest.raises(MapDomainError) as info:
        map_step(1, t_prev, 10.0)
    exc = info.value
    assert exc.n == 1 and exc.t_prev == t_prev and exc.delta == 10.0


def test_iterate_map_reports_failing_iterate():
    with pytest.raises(MapDomainError) as info:
        iterate_map(1, 2.0, 20)
    exc = info.value
    assert exc.iteration == 5
    assert len(exc.iterates) == 5
    assert exc.iterates[0] == 1.0


def test_iterate_map_is_deterministic():
    a = iterate_map(10000, 0.2639143, 20).iterates
    b = iterate_map(10000, 0.2639143, 20).iterates
    assert a == b


@pytest.mark.parametrize("n,delta,t_map,t_hat", TABLE)
def test_solve_zero_converges(n, delta, t_map, t_hat):
    est = solve_zero(n, delta)
    assert est.method == MAP
    assert est.converged
    assert est.final_step <= 1e-10
    assert est.iterations == 20
    assert abs(est.t - t_map) <= 1e-5


def test_solve_zero_chaotic_regime_not_converged():
    est = solve_zero(1, 2.0)
    assert not est.converged
    assert est.t > 0


def test_solve_zero_delta_zero_equivalence():
    for n in range(1, 1001):
        est = solve_zero(n, 0.0)
        assert est.t == estimate_zero(n).t
        assert est.converged


def test_solve_zero_delta_zero_two_iterates():
    est = solve_zero(5, 0.0, k_iters=2)
    assert est.converged and est.final_step == 0.0


def test_improvement_over_estimator(zeros10k):
    for n, delta in ((1, 0.0921796), (10000, 0.2639143)):
        ref = zeros10k.zero(n)
        map_err = abs(solve_zero(n, delta).t - ref)
        est_err = abs(estimate_zero(n).t - ref)
        assert map_err * 100 < est_err


def test_improvement_at_extended_heights():
    assert abs(solve_zero(50000, 0.1572079).t - ZERO_50000) < 1e-6
    assert abs(solve_zero(100000, 0.1595388).t - ZERO_100000) < 1e-6


def test_fixed_point_consistency():
    for n, delta, _, _ in TABLE:
        est = solve_zero(n, delta)
        assert est.converged
        assert abs(map_step(n, est.t, delta) - est.t) <= 1e-8


def test_exact_residual_at_reference_zeros(zeros10k):
    assert abs(exact_residual(zeros10k.zero(1), 1, 1e-6)) < 1e-3
    assert abs(exact_residual(zeros10k.zero(100), 100, 1e-6)) < 1e-3


def test_exact_residual_wrong_index_is_off_by_pi(zeros10k):
    # one index too low adds pi to the residual
    r = exact_residual(zeros10k.zero(100), 99, 1e-6)
    assert abs(abs(r) - math.pi) < 1e-3
    assert r > 0


def test_exact_residual_midway_between_zeros(zeros10k):
    # N(t) jumps by one at each zero: between zeros 1 and 2, index 1.5 fits
    t = 0.5 * (zeros10k.zero(1) + zeros10k.zero(2))
    assert abs(exact_residual(t, 1, 0.0) - math.pi / 2) < 0.5 * math.pi


def test_asymptotic_residual_vanishes_without_phase():
    n = 137
    t = estimate_zero(n).t
    smooth = t / (2 * math.pi) * math.log(t / (2 * math.pi * math.e))
    assert smooth - (n - 11 / 8) == pytest.approx(0.0, abs=1e-10)


def test_asymptotic_residual_improves_with_height(zeros10k):
    r_high = asymptotic_residual(zeros10k.zero(10000), 10000)
    r_low = asymptotic_residual(zeros10k.zero(1), 1)
    assert abs(r_high) < 0.05
    assert abs(r_low) > abs(r_high)


def test_asymptotic_residual_domain():
    with pytest.raises(DomainError):
        asymptotic_residual(0.0, 1)
