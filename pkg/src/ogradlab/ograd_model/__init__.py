"""Square-zero elements of sp4: ideals, dimensions, fibres and a resolution chart."""

from .geometry import (
    ChartPoint,
    blowup_chart_check,
    chart_point,
    d0_d1_check,
    fiber_dimension,
    grassmannian_ideal,
    plucker_vector,
    presentation_complex_check,
    presentation_matrices,
    projective_dimension,
    yj_identification_check,
)
from .space import (
    BLOCK_ANTIDIAGONAL,
    BLOCK_DIAGONAL,
    GenericSpElement,
    SymplecticSpace,
    build_generic_B,
    eplus_basis,
    eplus_coordinates,
    ideal_I0,
    ideal_L0,
    is_in_sp,
    is_square_zero,
    rank1_point,
    rank2_point,
)
from .suite import dimension_suite, run_suite

__all__ = [
    "BLOCK_ANTIDIAGONAL",
    "BLOCK_DIAGONAL",
    "ChartPoint",
    "GenericSpElement",
    "SymplecticSpace",
    "blowup_chart_check",
    "build_generic_B",
    "chart_point",
    "d0_d1_check",
    "dimension_suite",
    "eplus_basis",
    "eplus_coordinates",
    "fiber_dimension",
    "grassmannian_ideal",
    "ideal_I0",
    "ideal_L0",
    "is_in_sp",
    "is_square_zero",
    "plucker_vector",
    "presentation_complex_check",
    "presentation_matrices",
    "projective_dimension",
    "rank1_point",
    "rank2_point",
    "run_suite",
    "yj_identification_check",
]
