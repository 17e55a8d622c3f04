import logging

import numpy as np

from app.services.wave_service.domain.value_objects.cone_weight_spec import ConeWeightSpec
from app.services.xsb_service.domain.entities.probe_report import ProbeTrial
from app.services.xsb_service.domain.entities.space_time_field import SpaceTimeField
from app.services.xsb_service.domain.enums.probe_variant import ProbeVariant
from app.services.xsb_service.domain.exceptions.xsb_errors import (
    HypothesisViolationError,
    WindowContractError,
)
from app.services.xsb_service.domain.value_objects.space_time_lattice import interpolate_along_lambda

# Configure logger
logger = logging.getLogger(__name__)


def bilinear_product(u1: SpaceTimeField, u2: SpaceTimeField, s1: float, s2: float,
                     swap_conjugate: bool = False) -> SpaceTimeField:
    """B^s1 u1 * conj(B^s2 u2) (or conj(B^s1 u1) * B^s2 u2), alias-free on the doubled lattice."""
    left = u1.apply_B(s1).padded()
    right = u2.apply_B(s2).padded()
    if swap_conjugate:
        samples = np.conj(left.samples) * right.samples
    else:
        samples = left.samples * np.conj(right.samples)
    return SpaceTimeField(left.grid, left.t_window, samples, windowed=True)


def cone_trace(field: SpaceTimeField, abs_spectrum: np.ndarray, spec: ConeWeightSpec) -> np.ndarray:
    """|F(k, .)| interpolated at the cone point matching each (k, lambda)."""
    k_abs = np.broadcast_to(field.grid.k_abs[None, :, :], abs_spectrum.shape)
    lam = np.broadcast_to(field.lam[:, None, None], abs_spectrum.shape)
    targets = spec.cone_point(k_abs, lam)
    return interpolate_along_lambda(abs_spectrum, field.t_window, targets)


def weighted_cone_norm(field: SpaceTimeField, spec: ConeWeightSpec) -> float:
    """L2 norm of (|F| + trace) times the cone weight (|k| / (1 + dist))^alpha."""
    abs_spectrum = np.abs(field.spectrum())
    weight = spec.weight(field.grid.k_abs[None, :, :], field.lam[:, None, None])
    total = abs_spectrum
    if spec.include_trace_term:
        total = abs_spectrum + cone_trace(field, abs_spectrum, spec)
    return float(np.sqrt(np.sum((total * weight) ** 2)))


class BilinearEstimateUseCase:
    """
    One evaluation of the bilinear wave-Schrodinger estimates:

    prop1: ||(Box^-1 Laplacian)^(1/2) (B^s1 u1 conj(B^s2 u2))|| against
           ||u1||_{X_{s1+1,b}} ||u2||_{X_{s2-1/2,b}},
    prop2: same product with the full weight power 1 against
           ||u1||_{X_{s1+1,b}} ||u2||_{X_{s2,b}}.
    """

    def execute(self, u1: SpaceTimeField, u2: SpaceTimeField, s1: float, s2: float,
                variant: ProbeVariant, b: float, spec_template: ConeWeightSpec,
                swap_conjugate: bool = False, trial: int = 0) -> ProbeTrial:
        variant = ProbeVariant(variant)
        if s1 > s2:
            raise HypothesisViolationError(
                f"The bilinear estimates assume s1 <= s2 (got s1={s1}, s2={s2})",
                errors={"s1": s1, "s2": s2}
            )
        if not (u1.windowed and u2.windowed):
            raise WindowContractError("Bilinear probe inputs must be windowed")

        spec = ConeWeightSpec(alpha=variant.cone_power, sign_policy=spec_template.sign_policy,
                              include_trace_term=spec_template.include_trace_term)
        product = bilinear_product(u1, u2, s1, s2, swap_conjugate)
        lhs = weighted_cone_norm(product, spec)

        second_order = s2 - 0.5 if variant is ProbeVariant.PROP1 else s2
        rhs = u1.xsb_norm(s1 + 1, b) * u2.xsb_norm(second_order, b)
        return ProbeTrial(trial=trial, lhs=lhs, rhs=rhs)
