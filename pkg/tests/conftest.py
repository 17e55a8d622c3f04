import math

import numpy as np
import pytest

from app import create_app
from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec


@pytest.fixture(scope="session")
def container():
    return create_app("testing")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def small_grid():
    """N=32 on the 2*pi torus: lattice wavenumbers are integers."""
    return GridSpec(n_points=32, period=2.0 * math.pi)


@pytest.fixture
def random_real_field(small_grid, rng):
    """Band-limited real field inside the dealiasing mask."""
    values = rng.standard_normal(small_grid.shape)
    return SpectralField2D.from_physical(small_grid, values).dealias()


def real_mode(grid, m1, m2, amplitude=1.0):
    """amplitude * cos(k.x) as a real-flagged field."""
    wave = SpectralField2D.plane_wave(grid, m1, m2, 0.5 * amplitude)
    mirror = SpectralField2D.plane_wave(grid, -m1, -m2, 0.5 * amplitude)
    return (wave + mirror).with_coeffs((wave + mirror).coeffs, real_valued=True)


def smooth_data(grid, amplitude=0.1, with_u=True):
    """Low-mode InitialData: complex u, real n and mean-free ndot."""
    from app.services.solver_service.domain.entities.initial_data import InitialData

    if with_u:
        phi = (SpectralField2D.plane_wave(grid, 1, 0, amplitude)
               + SpectralField2D.plane_wave(grid, -1, 2, 0.5 * amplitude))
    else:
        phi = SpectralField2D.zeros(grid, real_valued=False)
    a = real_mode(grid, 1, 1, amplitude) + real_mode(grid, 0, 0, 0.3 * amplitude)
    b = real_mode(grid, 0, 2, amplitude)
    return InitialData(phi, a, b)


@pytest.fixture
def zakharov_data(small_grid):
    return smooth_data(small_grid)
