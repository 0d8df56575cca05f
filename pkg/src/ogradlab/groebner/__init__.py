"""Groebner bases for ideals and submodules of free modules."""

from .ideal import (
    GroebnerBasis,
    HilbertData,
    IdealBasis,
    buchberger,
    count_standard_monomials,
    hilbert_function,
    ideals_equal,
    independent_sets_bruteforce,
    krull_dimension,
    monomials_of_degree,
    normal_form,
    standard_monomials,
)
from .module import (
    ModuleGroebnerBasis,
    ModulePresentation,
    NotInSubmodule,
    annihilator,
    cokernel,
    lift,
    quotient_presentation,
    syzygy_basis,
    verify_annihilator,
)


def dump_basis(gb, path):
    """Write a basis in the exactalg system text format."""
    from ..exactalg.text import format_system

    with open(path, "w") as fh:
        fh.write(format_system(gb.ring, list(gb.basis)))


__all__ = [
    "GroebnerBasis",
    "HilbertData",
    "IdealBasis",
    "ModuleGroebnerBasis",
    "ModulePresentation",
    "NotInSubmodule",
    "annihilator",
    "buchberger",
    "count_standard_monomials",
    "cokernel",
    "dump_basis",
    "hilbert_function",
    "ideals_equal",
    "independent_sets_bruteforce",
    "krull_dimension",
    "monomials_of_degree",
    "lift",
    "normal_form",
    "quotient_presentation",
    "standard_monomials",
    "syzygy_basis",
    "verify_annihilator",
]
