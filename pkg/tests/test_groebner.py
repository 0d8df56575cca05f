import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import R3, homogeneous_polynomials, polynomials
from ogradlab.exactalg import PolyMatrix, PolyRing
from ogradlab.groebner import (
    IdealBasis,
    NotInSubmodule,
    buchberger,
    cokernel,
    count_standard_monomials,
    hilbert_function,
    ideals_equal,
    independent_sets_bruteforce,
    krull_dimension,
    lift,
    quotient_presentation,
    standard_monomials,
    syzygy_basis,
    verify_annihilator,
)

x, y, z = R3.gens


def test_cone_and_curve_dimensions():
    cone = buchberger(IdealBasis(R3, [x * z - y * y]))
    assert krull_dimension(cone) == 2
    # adding x^2 z - y^3 cuts the cone down to three lines
    gb = buchberger(IdealBasis(R3, [x * z - y * y, x * x * z - y ** 3]))
    assert gb.is_groebner()
    assert krull_dimension(gb) == 1
    assert gb.contains(y * y * (x - y))
    assert not gb.contains(x)


def test_unit_ideal():
    gb = buchberger(IdealBasis(R3, [x * y - 1, x]))
    assert gb.is_unit()
    assert krull_dimension(gb) == -1


def test_zero_dimensional_quotient():
    gb = buchberger(IdealBasis(R3, [x * x, y * y, z * z, x * y * z]))
    assert len(standard_monomials(gb)) == 7
    assert krull_dimension(gb) == 0


def test_hilbert_function_of_a_quadric_cone():
    gb = buchberger(IdealBasis(R3, [x * z - y * y]))
    assert hilbert_function(gb, 5).values == (1, 3, 5, 7, 9, 11)
    with pytest.raises(ValueError):
        hilbert_function(buchberger(IdealBasis(R3, [x * z - y])), 3)


def test_elimination_order_solves_implicitization():
    ring = PolyRing("t,x,y,z", order="lex")
    t, a, b, c = ring.gens
    gb = buchberger(IdealBasis(ring, [a - t, b - t * t, c - t ** 3]))
    free = [g for g in gb.basis if g.degree("t") == 0]
    target = IdealBasis(ring, [b - a * a, c - a * b])
    assert buchberger(IdealBasis(ring, free)).contains_ideal(target)


@given(st.lists(polynomials(max_degree=2, max_terms=3), min_size=1, max_size=3))
def test_buchberger_output_is_groebner_and_generates(gens):
    ideal = IdealBasis(R3, gens)
    gb = buchberger(ideal)
    assert gb.is_groebner()
    assert gb.contains_ideal(ideal)
    if ideal.generators and not gb.is_unit():
        # every basis element is an explicit combination of the generators
        row = PolyMatrix(R3, [list(ideal.generators)])
        C = lift(row, PolyMatrix(R3, [list(gb.basis)]))
        assert row * C == PolyMatrix(R3, [list(gb.basis)])


@given(st.lists(homogeneous_polynomials(degree=2), min_size=1, max_size=3))
def test_dimension_oracle_and_hilbert_consistency(gens):
    gb = buchberger(IdealBasis(R3, gens))
    assert krull_dimension(gb) == independent_sets_bruteforce(gb)
    hf = hilbert_function(gb, 4).values
    assert hf[0] == 1
    assert hf[1] == 3
    assert hf[2] == 6 - len({g.leading_monomial() for g in gb.basis if g.total_degree() == 2})
    assert hf == tuple(count_standard_monomials(gb.leading_monomials(), 3, d) for d in range(5))


@given(polynomials(max_degree=2, max_terms=3), polynomials(max_degree=2, max_terms=3))
def test_ideal_membership_of_combinations(a, b):
    gens = [x * y - z, y * y - x]
    gb = buchberger(IdealBasis(R3, gens))
    assert gb.contains(a * gens[0] + b * gens[1])


def test_ideals_equal_is_generator_independent():
    a = IdealBasis(R3, [x + y, y])
    b = IdealBasis(R3, [x, y * 2])
    assert ideals_equal(a, b)
    assert not ideals_equal(a, IdealBasis(R3, [x]))


# -- modules ------------------------------------------------------------------


def test_koszul_syzygies():
    row = PolyMatrix(R3, [[x, y, z]])
    S = syzygy_basis(row)
    assert (row * S).is_zero()
    assert S.cols == 3
    assert all(max(p.total_degree() for p in col if p) == 1 for col in S.columns())


@given(st.lists(homogeneous_polynomials(degree=1), min_size=2, max_size=3))
def test_syzygies_are_relations(entries):
    row = PolyMatrix(R3, [entries])
    S = syzygy_basis(row)
    assert (row * S).is_zero()


def test_lift_recovers_cofactors():
    gens = PolyMatrix(R3, [[x, y]])
    target = PolyMatrix(R3, [[x * z + y * y]])
    C = lift(gens, target)
    assert gens * C == target
    with pytest.raises(NotInSubmodule):
        lift(gens, PolyMatrix(R3, [[z]]))


def test_cokernel_of_maximal_ideal_row():
    pres = cokernel(PolyMatrix(R3, [[x, y, z]]), generator_degrees=(0,))
    assert pres.hilbert_function(3) == (1, 0, 0, 0)
    assert verify_annihilator(pres, [x, y, z])


def test_quotient_presentation_and_annihilator():
    # Q[x,y,z]^1 / (x, y) is the coordinate ring of a line, annihilated by x and y
    ker = PolyMatrix(R3, [[R3.one()]])
    im = PolyMatrix(R3, [[x, y]])
    pres = quotient_presentation(ker, im, generator_degrees=(0,))
    ann = buchberger(pres.annihilator())
    assert ann.contains_ideal(IdealBasis(R3, [x, y]))
    assert not ann.contains(z)
    assert pres.minimal_generators() == 1
    assert pres.hilbert_function(4) == (1, 1, 1, 1, 1)
