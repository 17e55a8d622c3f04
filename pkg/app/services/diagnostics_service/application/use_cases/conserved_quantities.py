import numpy as np

from app.services.diagnostics_service.domain.entities.diagnostics_record import DiagnosticsRecord
from app.services.diagnostics_service.domain.value_objects.diagnostics_schedule import DiagnosticsSchedule
from app.services.solver_service.domain.entities.zakharov_state import ZakharovState
from app.services.wave_service.domain.value_objects.negative_sobolev import (
    curl_free_potential,
    hhat_minus1_norm,
)


def physical_pairing(state: ZakharovState) -> float:
    """<n, |u|^2> with the collocation quadrature of the grid."""
    grid = state.grid
    u = grid.inverse(state.u_hat.coeffs)
    n = state.wave.n_hat.to_physical()
    return float(grid.cell_area * np.sum(n * np.abs(u) ** 2))


def hamiltonian(state: ZakharovState) -> float:
    """H = ||grad u||^2 + (||n||^2 + ||V||^2)/2 + <n, |u|^2>, with div V = ndot and V curl-free."""
    grid = state.grid
    gradient = float(np.sum(grid.k_squared * np.abs(state.u_hat.coeffs) ** 2))
    v1, v2 = curl_free_potential(state.wave.ndot_hat)
    wave = 0.5 * (state.wave.n_hat.l2_norm() ** 2 + v1.l2_norm() ** 2 + v2.l2_norm() ** 2)
    return gradient + wave + physical_pairing(state)


class RecordDiagnosticsUseCase:
    """Builds the DiagnosticsRecord of one checkpoint."""

    def __init__(self, increment_use_case=None):
        self._increment_use_case = increment_use_case

    def execute(self, state: ZakharovState, schedule: DiagnosticsSchedule, data=None) -> DiagnosticsRecord:
        increment = None
        if schedule.increment and data is not None and self._increment_use_case is not None:
            increment = self._increment_use_case.execute(state, data, schedule.increment_s)
        return DiagnosticsRecord(
            t=state.t,
            mass=state.mass(),
            hamiltonian=hamiltonian(state),
            h1_u=state.u_hat.sobolev_norm(1.0),
            l2_n=state.wave.n_hat.l2_norm(),
            hneg1_ndot=hhat_minus1_norm(state.wave.ndot_hat),
            hs_norms={s: state.u_hat.sobolev_norm(s) for s in schedule.s_values},
            increment=increment,
        )
