"""Deformation to the normal cone: weighted series, the flow equation and its integration."""

from .engine import (
    DeformationSystem,
    NotTangentToIdentity,
    Obstruction,
    PhiH,
    SolveResult,
    TrivializationData,
    flow_residual,
    integrate_psi_M,
    solve_phi_h,
    verify_trivialization,
)
from .fixtures import (
    corrupted_i0,
    i0_base,
    i0_pullback,
    node_closed_form,
    node_system,
    pullback_perturbation,
    random_tangent_germ,
    shear_system,
)
from .series import WeightError, WeightedSeries, compose_trunc, mul_trunc, xt_ring
from .suite import end_to_end_pullback, load_system, run_pipeline, run_suite, run_system

__all__ = [
    "DeformationSystem",
    "NotTangentToIdentity",
    "Obstruction",
    "PhiH",
    "SolveResult",
    "TrivializationData",
    "WeightError",
    "WeightedSeries",
    "compose_trunc",
    "corrupted_i0",
    "end_to_end_pullback",
    "flow_residual",
    "i0_base",
    "i0_pullback",
    "integrate_psi_M",
    "load_system",
    "mul_trunc",
    "node_closed_form",
    "node_system",
    "pullback_perturbation",
    "random_tangent_germ",
    "run_pipeline",
    "run_suite",
    "run_system",
    "shear_system",
    "solve_phi_h",
    "verify_trivialization",
    "xt_ring",
]
