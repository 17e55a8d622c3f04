import math

import numpy as np
import pytest

from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.xsb_service.application.use_cases.field_sampler import free_evolution
from app.services.xsb_service.domain.entities.space_time_field import SpaceTimeField
from app.services.xsb_service.domain.exceptions.xsb_errors import WindowContractError
from app.services.xsb_service.domain.value_objects.space_time_lattice import (
    integer_axis,
    interpolate_along_lambda,
    lambda_axis,
    pad_spectrum,
)
from app.services.xsb_service.domain.value_objects.time_window import TimeWindow
from app.services.xsb_service.service import XsbService
from app.shared.domain.exceptions.common_errors import ConfigurationError, ValidationError


@pytest.fixture
def grid():
    return GridSpec(n_points=8, period=2.0 * math.pi)


@pytest.fixture
def window():
    return TimeWindow(t_total=1.0, flank_fraction=0.1)


@pytest.fixture
def windowed_field(grid, window, rng):
    samples = rng.standard_normal((8, 8, 8)) + 1j * rng.standard_normal((8, 8, 8))
    return SpaceTimeField(grid, window.t_window, samples).apply_window(window)


class TestTimeWindow:

    def test_support(self, window):
        assert window.t_window == pytest.approx(1.2)
        assert window.plateau == pytest.approx((0.1, 1.1))

    def test_values(self, window):
        values = window.evaluate([0.0, 0.05, 0.1, 0.6, 1.1, 1.15, 1.2, 1.3])
        np.testing.assert_allclose(values, [0.0, 0.5, 1.0, 1.0, 1.0, 0.5, 0.0, 0.0], atol=1e-12)

    def test_continuous(self, window):
        t = np.linspace(0.0, window.t_window, 4001)
        assert np.max(np.abs(np.diff(window.evaluate(t)))) < 0.01

    def test_no_flank_is_indicator(self):
        window = TimeWindow(t_total=2.0, flank_fraction=0.0)
        np.testing.assert_array_equal(window.evaluate([0.0, 1.0, 2.0, 2.5]), [1.0, 1.0, 1.0, 0.0])

    @pytest.mark.parametrize("t_total,flank", [(0.0, 0.1), (1.0, -0.1), (1.0, 0.6)])
    def test_rejects(self, t_total, flank):
        with pytest.raises(ValidationError):
            TimeWindow(t_total=t_total, flank_fraction=flank)


class TestSpaceTimeField:

    def test_parseval(self, windowed_field):
        assert np.sum(np.abs(windowed_field.spectrum()) ** 2) == pytest.approx(windowed_field.l2_norm() ** 2)

    def test_spectrum_round_trip(self, windowed_field):
        rebuilt = SpaceTimeField.from_spectrum(windowed_field.grid, windowed_field.t_window,
                                               windowed_field.spectrum(), windowed=True)
        np.testing.assert_allclose(rebuilt.samples, windowed_field.samples, atol=1e-12)

    def test_rejects_bad_time_lattice(self, grid):
        with pytest.raises(ConfigurationError):
            SpaceTimeField(grid, 1.0, np.zeros((6, 8, 8)))

    def test_window_mismatch(self, grid):
        field = SpaceTimeField(grid, 2.0, np.ones((8, 8, 8)))
        with pytest.raises(WindowContractError):
            field.apply_window(TimeWindow(t_total=1.0))

    def test_unwindowed_norm_rejected(self, grid):
        field = SpaceTimeField(grid, 1.2, np.ones((8, 8, 8)))
        with pytest.raises(WindowContractError):
            XsbService().xsb_norm(field, 0.0, 0.55)

    def test_free_wave_peaks_on_paraboloid(self):
        grid = GridSpec(n_points=16, period=2.0 * math.pi)
        phi = SpectralField2D.plane_wave(grid, 3, 4)
        field = free_evolution(phi, 2.0 * math.pi, 64)
        magnitude = np.abs(field.spectrum())
        q, m1, m2 = np.unravel_index(np.argmax(magnitude), magnitude.shape)
        assert field.lam[q] == pytest.approx(-25.0)
        assert (m1, m2) == grid.mode_index(3, 4)

    def test_padding_keeps_samples(self, windowed_field):
        padded = windowed_field.padded()
        assert padded.samples.shape == (16, 16, 16)
        np.testing.assert_allclose(padded.samples[::2, ::2, ::2], windowed_field.samples, atol=1e-12)
        assert padded.windowed

    def test_pad_spectrum_layout(self):
        coeffs = np.arange(4, dtype=complex).reshape(4)
        padded = pad_spectrum(coeffs, 2)
        np.testing.assert_array_equal(padded[integer_axis(4) % 8], coeffs)
        assert np.count_nonzero(padded) == 3

    def test_l4_of_constant(self, grid):
        field = SpaceTimeField(grid, 1.0, np.full((8, 8, 8), 2.0))
        volume = 1.0 * grid.period ** 2
        assert field.lp_norm(4) == pytest.approx(2.0 * volume ** 0.25)


class TestXsbNorm:

    def brute_force(self, field, s, b):
        grid = field.grid
        m, n = field.m_steps, grid.n_points
        time_kernel = np.exp(-2j * math.pi * np.outer(np.arange(m), np.arange(m)) / m)
        space_kernel = np.exp(-2j * math.pi * np.outer(np.arange(n), np.arange(n)) / n)
        scale = (grid.period / n ** 2) * math.sqrt(field.t_window) / m
        spectrum = scale * np.einsum("qj,ax,by,jxy->qab", time_kernel, space_kernel, space_kernel,
                                     field.samples)
        total = 0.0
        for q, lam_index in enumerate(integer_axis(m)):
            lam = 2.0 * math.pi * lam_index / field.t_window
            for a, m1 in enumerate(integer_axis(n)):
                for c, m2 in enumerate(integer_axis(n)):
                    k_squared = (2.0 * math.pi / grid.period) ** 2 * (m1 ** 2 + m2 ** 2)
                    weight = (1.0 + k_squared) ** s * (1.0 + abs(lam + k_squared)) ** (2 * b)
                    total += weight * abs(spectrum[q, a, c]) ** 2
        return math.sqrt(total)

    @pytest.mark.parametrize("s,b", [(0.0, 0.55), (1.0, 0.55), (0.5, 0.8)])
    def test_matches_brute_force(self, windowed_field, s, b):
        assert windowed_field.xsb_norm(s, b) == pytest.approx(self.brute_force(windowed_field, s, b), rel=1e-10)

    def test_b_zero_is_l2(self, windowed_field):
        assert windowed_field.xsb_norm(0.0, 0.0) == pytest.approx(windowed_field.l2_norm())

    def test_single_mode_sobolev_factor(self, grid, window):
        phi = SpectralField2D.plane_wave(grid, 1, 2, 0.3)
        u = XsbService().free_solution(phi, window, 16)
        assert u.xsb_norm(2.0, 0.0) == pytest.approx(6.0 * u.l2_norm())

    def test_monotone_in_b(self, windowed_field):
        assert windowed_field.xsb_norm(0.0, 0.8) >= windowed_field.xsb_norm(0.0, 0.55)


class TestLambdaInterpolation:

    def test_matches_numpy_interp(self, rng):
        m, t_window = 16, 1.3
        spectrum = np.abs(rng.standard_normal((m, 5)))
        lam = lambda_axis(m, t_window)
        reach = 1.5 * np.max(np.abs(lam))
        targets = rng.uniform(-reach, reach, (m, 5))
        targets[0, 0] = lam.max()
        targets[1, 0] = lam.min()

        result = interpolate_along_lambda(spectrum, t_window, targets)

        order = np.argsort(lam)
        for column in range(5):
            expected = np.interp(targets[:, column], lam[order], spectrum[order, column], left=0.0, right=0.0)
            np.testing.assert_allclose(result[:, column], expected, atol=1e-12)

    def test_lattice_points_exact(self, rng):
        m, t_window = 8, 2.0
        spectrum = np.abs(rng.standard_normal((m, 3)))
        lam = lambda_axis(m, t_window)
        targets = np.broadcast_to(lam[:, None], (m, 3))
        np.testing.assert_allclose(interpolate_along_lambda(spectrum, t_window, targets), spectrum)
