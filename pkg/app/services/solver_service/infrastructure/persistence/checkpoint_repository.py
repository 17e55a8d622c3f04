import logging
from pathlib import Path
from typing import Union

import numpy as np

from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.solver_service.domain.exceptions.solver_errors import CheckpointFormatError
from app.services.spectral_service.domain.entities.spectral_field import SpectralField2D
from app.services.spectral_service.domain.value_objects.grid_spec import GridSpec
from app.services.wave_service.domain.entities.wave_state import WaveState
from app.shared.domain.exceptions.common_errors import BaseZakharovError, ResourceNotFoundError

# Configure logger
logger = logging.getLogger(__name__)

MAGIC = b"ZKLB"
FORMAT_VERSION = 1

HEADER_DTYPE = np.dtype([
    ("magic", "S4"),
    ("version", "<u4"),
    ("n_points", "<u4"),
    ("period", "<f8"),
    ("time", "<f8"),
])
COEFF_DTYPE = np.dtype("<c16")


class CheckpointRepository:
    """
    Binary checkpoints: little-endian header (magic, version, N, L, t)
    followed by u_hat, n_hat, ndot_hat as interleaved (re, im) float64
    in row-major lattice order.
    """

    def __init__(self, dealias_enabled: bool = True):
        self._dealias_enabled = dealias_enabled

    def save(self, state: ZakharovState, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        grid = state.grid
        header = np.array([(MAGIC, FORMAT_VERSION, grid.n_points, grid.period, state.t)],
                          dtype=HEADER_DTYPE)
        with open(path, "wb") as handle:
            handle.write(header.tobytes())
            for field in (state.u_hat, state.wave.n_hat, state.wave.ndot_hat):
                handle.write(np.ascontiguousarray(field.coeffs, dtype=COEFF_DTYPE).tobytes())
        logger.info(f"Checkpoint written: {path} (t={state.t})")
        return path

    def load(self, path: Union[str, Path]) -> ZakharovState:
        path = Path(path)
        if not path.is_file():
            raise ResourceNotFoundError(f"Checkpoint not found: {path}")
        raw = path.read_bytes()

        if len(raw) < HEADER_DTYPE.itemsize:
            raise CheckpointFormatError(f"{path}: truncated header ({len(raw)} bytes)")
        header = np.frombuffer(raw, dtype=HEADER_DTYPE, count=1)[0]
        if bytes(header["magic"]) != MAGIC:
            raise CheckpointFormatError(f"{path}: bad magic {bytes(header['magic'])!r}")
        if int(header["version"]) != FORMAT_VERSION:
            raise CheckpointFormatError(
                f"{path}: unsupported version {int(header['version'])}, expected {FORMAT_VERSION}"
            )

        n_points = int(header["n_points"])
        block = n_points * n_points
        expected = HEADER_DTYPE.itemsize + 3 * block * COEFF_DTYPE.itemsize
        if len(raw) != expected:
            raise CheckpointFormatError(
                f"{path}: size {len(raw)} bytes, expected {expected} for N={n_points}",
                errors={"size": len(raw), "expected": expected}
            )

        try:
            grid = GridSpec(n_points=n_points, period=float(header["period"]),
                            dealias_enabled=self._dealias_enabled)
            arrays = [
                np.frombuffer(raw, dtype=COEFF_DTYPE, count=block,
                              offset=HEADER_DTYPE.itemsize + i * block * COEFF_DTYPE.itemsize)
                .reshape(grid.shape).astype(complex)
                for i in range(3)
            ]
            state = ZakharovState(
                u_hat=SpectralField2D(grid, arrays[0]),
                wave=WaveState(SpectralField2D(grid, arrays[1], real_valued=True),
                               SpectralField2D(grid, arrays[2], real_valued=True)),
                t=float(header["time"]),
            )
        except CheckpointFormatError:
            raise
        except BaseZakharovError as e:
            raise CheckpointFormatError(f"{path}: invalid checkpoint contents ({e.message})") from e

        logger.info(f"Checkpoint loaded: {path} (N={n_points}, t={state.t})")
        return state
