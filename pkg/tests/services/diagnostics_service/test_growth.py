import logging
import math

import numpy as np
import pytest

from app.services.diagnostics_service.domain.entities.diagnostics_record import DiagnosticsRecord
from app.services.diagnostics_service.domain.entities.growth_fit import GrowthFit
from app.services.diagnostics_service.domain.exceptions.diagnostics_errors import InsufficientDataError
from app.services.diagnostics_service.domain.value_objects.growth_bounds import (
    delta_from_order,
    increment_bound_exponent,
    predicted_exponent,
)
from app.services.diagnostics_service.service import DiagnosticsService
from app.services.wave_service.domain.exceptions.wave_errors import InvalidArgumentError
from app.shared.domain.exceptions.common_errors import ValidationError


@pytest.fixture
def diagnostics():
    return DiagnosticsService()


def power_law_records(times, s=2.0, c=3.0, alpha=1.5):
    return [
        DiagnosticsRecord(t=t, mass=1.0, hamiltonian=0.0, h1_u=1.0, l2_n=0.0, hneg1_ndot=0.0,
                          hs_norms={1.0: 1.0, s: c * t ** alpha if t > 0 else c})
        for t in times
    ]


class TestGrowthBounds:

    @pytest.mark.parametrize("s,expected", [(0.5, 0.0), (1.0, 0.0), (2.0, 1.0), (3.5, 2.5)])
    def test_predicted_exponent(self, s, expected):
        assert predicted_exponent(s) == expected

    def test_increment_exponent(self):
        assert increment_bound_exponent(3.0) == pytest.approx(1.5)
        with pytest.raises(InvalidArgumentError):
            increment_bound_exponent(1.0)

    def test_delta_from_order(self):
        assert delta_from_order(2.0) == 1.0
        assert delta_from_order(5.0) == pytest.approx(0.25)
        with pytest.raises(InvalidArgumentError):
            delta_from_order(1.5)


class TestFitGrowth:

    def test_recovers_power_law(self, diagnostics):
        records = power_law_records(np.linspace(0.0, 50.0, 51))
        fit = diagnostics.fit_growth(records, 2, 5.0)
        assert fit.exponent_alpha == pytest.approx(1.5)
        assert fit.prefactor_c == pytest.approx(3.0)
        assert fit.residual < 1e-10
        assert fit.n_records == 46

    def test_recovers_power_law_under_noise(self, diagnostics, rng):
        times = np.arange(1.0, 101.0)
        exponents = []
        for _ in range(20):
            records = power_law_records(times)
            noisy = [
                DiagnosticsRecord(t=r.t, mass=1.0, hamiltonian=0.0, h1_u=1.0, l2_n=0.0, hneg1_ndot=0.0,
                                  hs_norms={2.0: r.hs_norms[2.0] * (1.0 + 0.01 * rng.standard_normal())})
                for r in records
            ]
            exponents.append(diagnostics.fit_growth(noisy, 2.0, 1.0).exponent_alpha)
        assert np.mean(exponents) == pytest.approx(1.5, abs=0.005)
        assert np.max(np.abs(np.array(exponents) - 1.5)) < 0.02

    def test_constant_series_has_zero_exponent(self, diagnostics):
        records = power_law_records(np.linspace(0.0, 20.0, 21), alpha=0.0)
        fit = diagnostics.fit_growth(records, 2.0, 1.0)
        assert fit.exponent_alpha == pytest.approx(0.0, abs=1e-12)
        assert fit.prefactor_c == pytest.approx(3.0)
        assert diagnostics.check_growth_bound(fit)

    def test_too_few_points(self, diagnostics):
        with pytest.raises(InsufficientDataError):
            diagnostics.fit_growth(power_law_records([0.0, 1.0, 2.0, 3.0, 4.0]), 2.0, 2.0)

    def test_missing_order(self, diagnostics):
        with pytest.raises(ValidationError):
            diagnostics.fit_growth(power_law_records(range(10)), 3.0, 0.0)

    def test_nonpositive_values(self, diagnostics):
        records = power_law_records(range(10), c=-1.0)
        with pytest.raises(ValidationError):
            diagnostics.fit_growth(records, 2.0, 1.0)

    def test_bound_check_warns(self, diagnostics, caplog):
        fit = GrowthFit(s=2.0, t_min=1.0, exponent_alpha=1.7, prefactor_c=1.0, residual=0.0, n_records=10)
        with caplog.at_level(logging.WARNING):
            assert not diagnostics.check_growth_bound(fit)
        assert "exceeds" in caplog.text
        assert diagnostics.check_growth_bound(fit, slack=1.0)


class TestIterateLocalBound:

    def test_power_law_growth(self, diagnostics):
        iteration = diagnostics.iterate_local_bound(1.0, 0.5, 1.0, 10000)
        assert iteration.steps == 10000
        assert iteration.predicted_exponent == 2.0
        assert iteration.exponent == pytest.approx(2.0, abs=0.05)
        assert np.all(np.diff(iteration.values) > 0)

    def test_delta_from_s(self, diagnostics):
        by_s = diagnostics.iterate_local_bound(0.5, None, 1.0, 2000, s=3.0)
        by_delta = diagnostics.iterate_local_bound(0.5, 0.5, 1.0, 2000)
        np.testing.assert_array_equal(by_s.values, by_delta.values)

    def test_delta_one_is_linear(self, diagnostics):
        iteration = diagnostics.iterate_local_bound(2.0, 1.0, 1.0, 100)
        np.testing.assert_allclose(iteration.values, 1.0 + 2.0 * np.arange(101))

    def test_multiplicative_orbit(self, diagnostics):
        iteration = diagnostics.iterate_local_bound(0.1, 0.5, 1.0, 5000)
        assert iteration.multiplicative_rate == pytest.approx(math.log1p(0.1))
        assert iteration.multiplicative_residual < 1e-9
        assert math.isfinite(iteration.multiplicative_log_values[-1])

    def test_multiplicative_orbit_is_iterated(self, diagnostics):
        iteration = diagnostics.iterate_local_bound(0.1, 0.5, 2.0, 5000)
        n_axis = np.arange(5001)
        # 5000 log(1.1) exceeds log(1e100) several times over
        np.testing.assert_allclose(iteration.multiplicative_log_values,
                                   math.log(2.0) + n_axis * math.log1p(0.1), rtol=1e-10)
        np.testing.assert_allclose(np.exp(iteration.multiplicative_log_values[:40]),
                                   2.0 * 1.1 ** n_axis[:40], rtol=1e-12)
        assert 0.0 <= iteration.multiplicative_residual < 1e-9

    @pytest.mark.parametrize("c,delta,x0,steps", [
        (0.0, 0.5, 1.0, 100),
        (1.0, 0.0, 1.0, 100),
        (1.0, 1.5, 1.0, 100),
        (1.0, 0.5, -1.0, 100),
        (1.0, 0.5, 1.0, 10),
    ])
    def test_rejects_arguments(self, diagnostics, c, delta, x0, steps):
        with pytest.raises(InvalidArgumentError):
            diagnostics.iterate_local_bound(c, delta, x0, steps)

    def test_needs_delta_or_s(self, diagnostics):
        with pytest.raises(InvalidArgumentError):
            diagnostics.iterate_local_bound(1.0, None, 1.0, 100)
