"""Kuranishi recursion for finite-dimensional DG algebra models."""

from importlib import resources

from .dga import (
    DGAlgebra,
    Splittings,
    abelian_model,
    cohomology,
    cup_model,
    endomorphism_model,
    permuted,
    random_model,
    tensor_glr,
    unobstructed_model,
)
from .diagonal import verify_diagonal_vanishing
from .recursion import (
    KuranishiOutput,
    LowOrderReducer,
    SectionInconsistency,
    cup_product_map,
    full_defect,
    kuranishi_recursion,
    verify_mc_defect,
)


def diagonal_test_model(seed=0):
    """Unital model with ``g^3 = 0``, ``dim H^1 = 4``, ``H^2 = 0`` and nonzero higher ``gamma``."""
    g = random_model(seed, h1=3, extra=3, g2=2)
    g.name = f"flat-h1-4-{seed}"
    return g


BUILTIN = {
    "abelian": abelian_model,
    "cup": cup_model,
    "unobstructed": unobstructed_model,
    "endomorphism": endomorphism_model,
    "diagonal-test": diagonal_test_model,
}


def load_model(spec):
    """A builtin model name, a bundled model file name, or a path to a JSON model file."""
    if spec in BUILTIN:
        return BUILTIN[spec]()
    bundled = resources.files("ogradlab.kuranishi").joinpath("models", f"{spec}.json")
    if bundled.is_file():
        return DGAlgebra.from_json(bundled.read_text())
    with open(spec) as fh:
        return DGAlgebra.from_json(fh.read())


__all__ = [
    "BUILTIN",
    "DGAlgebra",
    "KuranishiOutput",
    "LowOrderReducer",
    "SectionInconsistency",
    "Splittings",
    "abelian_model",
    "cohomology",
    "cup_model",
    "cup_product_map",
    "diagonal_test_model",
    "endomorphism_model",
    "full_defect",
    "kuranishi_recursion",
    "load_model",
    "permuted",
    "random_model",
    "tensor_glr",
    "unobstructed_model",
    "verify_diagonal_vanishing",
    "verify_mc_defect",
]
