import pytest
from hypothesis import given
from hypothesis import strategies as st

from ogradlab.exactalg import QQ, rank, span_rank
from ogradlab.groebner import buchberger, krull_dimension
from ogradlab.ograd_model import (
    BLOCK_ANTIDIAGONAL,
    SymplecticSpace,
    blowup_chart_check,
    build_generic_B,
    d0_d1_check,
    dimension_suite,
    fiber_dimension,
    grassmannian_ideal,
    ideal_I0,
    ideal_L0,
    is_in_sp,
    is_square_zero,
    presentation_complex_check,
    projective_dimension,
    rank1_point,
    rank2_point,
)
from ogradlab.ograd_model.space import SYM_INDEX, qmul, qrank, qscale, seeded

ELEM = build_generic_B()
I0 = ideal_I0(ELEM)
L0 = ideal_L0(ELEM)


def coordinates(B, space=None):
    """``b_ab`` values of a numeric ``B = Y J``: ``Y = -B J``."""
    J = (space or SymplecticSpace()).J
    Y = qscale(qmul(B, J), -1)
    return [Y[a][b] for a, b in SYM_INDEX]


def jacobian_rank(polys, point):
    names = polys[0].ring.names
    return rank([[p.diff(v).evaluate(point) for v in names] for p in polys])


def test_conventions_are_compatible():
    assert SymplecticSpace().check()
    assert SymplecticSpace(BLOCK_ANTIDIAGONAL).check()


def test_generic_element_is_symplectic():
    assert ELEM.symplectic_defect().is_zero()
    assert ELEM.coordinate_rank() == 10


def test_I0_is_six_quadrics_spanning_the_entries_of_B2():
    gens = I0.generators
    assert len(gens) == 6
    assert all(g.is_homogeneous() and g.total_degree() == 2 for g in gens)
    entries = [v for row in (ELEM.B * ELEM.B).tolist() for v in row]
    assert span_rank(entries) == 6
    assert span_rank(entries + list(gens)) == 6


def test_dimensions_match_tangent_space_oracle():
    dims = dimension_suite()
    assert dims == {"dim_I0": 6, "dim_I0_R": 10, "dim_L0": 4, "dim_unit": -1}
    rng = seeded(3)
    # at a smooth point of each locus the tangent space has the Krull dimension
    assert 10 - jacobian_rank(list(I0.generators), coordinates(rank2_point(rng))) == 6
    assert 10 - jacobian_rank(list(L0.generators), coordinates(rank1_point(rng))) == 4


def test_I0_lies_in_L0():
    gb = buchberger(L0)
    assert all(not gb.normal_form(g) for g in I0.generators)
    assert len(L0.generators) == 20


def test_other_convention_gives_the_same_dimensions():
    elem = build_generic_B(SymplecticSpace(BLOCK_ANTIDIAGONAL))
    assert krull_dimension(buchberger(ideal_I0(elem))) == 6
    assert krull_dimension(buchberger(ideal_L0(elem))) == 4


@given(st.integers(0, 10**6))
def test_random_points_lie_on_the_locus(seed):
    rng = seeded(seed)
    for B, r in ((rank1_point(rng), 1), (rank2_point(rng), 2)):
        assert is_square_zero(B) and is_in_sp(B) and qrank(B) == r
        pt = coordinates(B)
        assert all(g.evaluate(pt) == 0 for g in I0.generators)
        l0_vanishes = all(g.evaluate(pt) == 0 for g in L0.generators)
        assert l0_vanishes == (r == 1)


def test_grassmannian_is_a_threefold():
    assert projective_dimension(grassmannian_ideal()) == 3


@given(st.integers(0, 10**6))
def test_fibre_over_rank_one_points_is_a_line(seed):
    assert fiber_dimension(rank1_point(seeded(seed))) == 1


def test_fibres_over_zero_and_rank_two():
    zero = [[QQ(0)] * 4 for _ in range(4)]
    assert fiber_dimension(zero) == 3
    assert fiber_dimension(rank2_point(seeded(0))) == 0


def test_fibre_rejects_points_off_the_locus():
    B = [[QQ(int(i == j)) for j in range(4)] for i in range(4)]
    with pytest.raises(ValueError):
        fiber_dimension(B)


def test_blowup_chart():
    d = blowup_chart_check()
    assert d["nonzero_minors"] > 0
    assert d["not_divisible"] == []
    assert d["quotients_unit_ideal"]
    assert d["square_zero"] and d["in_sp4"]


def test_presentation_and_differentials():
    p = presentation_complex_check()
    assert p["composition_zero"] and p["relations"] == 21
    d = d0_d1_check()
    assert d["nonzero_residues"] == 0 and d["composition_formula"]
