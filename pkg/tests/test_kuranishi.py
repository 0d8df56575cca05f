import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ogradlab.exactalg import QQ
from ogradlab.kuranishi import (
    DGAlgebra,
    abelian_model,
    cohomology,
    cup_model,
    cup_product_map,
    diagonal_test_model,
    endomorphism_model,
    full_defect,
    kuranishi_recursion,
    load_model,
    random_model,
    tensor_glr,
    unobstructed_model,
    verify_diagonal_vanishing,
    verify_mc_defect,
)
from ogradlab.kuranishi.suite import (
    cohomology_dims_by_rank,
    defect_in_ideal_groebner,
    permutation_determinism,
    run_suite,
)


def test_model_axioms():
    for g in (abelian_model(), cup_model(), unobstructed_model(), random_model(0), endomorphism_model()):
        assert all(g.check().values()), g.name


def test_cohomology_of_extreme_differentials():
    # d = 0: cohomology is the whole algebra
    g = abelian_model()
    assert cohomology(g).h[:3] == [1, 2, 1]
    # d: g^1 -> g^2 an isomorphism kills both
    iso = [[QQ(1), QQ(2)], [QQ(0), QQ(1)]]
    g = DGAlgebra([0, 2, 2], {}, [[], iso, []])
    assert cohomology(g).h == [0, 0, 0, 0]


@given(st.integers(0, 10**4))
def test_cohomology_matches_rank_count(seed):
    g = random_model(seed, h1=2, extra=2, g2=3)
    assert cohomology(g).h == cohomology_dims_by_rank(g)


def test_abelian_model_is_unobstructed_with_linear_gamma():
    out = kuranishi_recursion(abelian_model(), N=5)
    assert all(not p for v in out.f.values() for p in v)
    assert all(not p for n, v in out.gamma.items() if n > 1 for p in v)


def test_cup_model_quadratic_obstruction():
    out = kuranishi_recursion(cup_model(), N=4)
    u1, u2 = out.ring.gens
    # a a = c and a b = c give f_2 = u1^2 + u1 u2
    assert out.f[2] == [u1 * u1 + u1 * u2]


def test_unobstructed_defect_vanishes_identically():
    g = unobstructed_model()
    sp = cohomology(g)
    out = kuranishi_recursion(g, sp, 5)
    assert sp.h[2] == 0
    assert all(not p for p in full_defect(g, sp, out, 5))


@settings(max_examples=15)
@given(st.integers(0, 10**4))
def test_random_models_quadratic_term_and_defect(seed):
    g = random_model(seed, h1=2, extra=1, g2=2)
    sp = cohomology(g)
    out = kuranishi_recursion(g, sp, 4)
    assert out.f[2] == cup_product_map(g, sp, out.ring)
    assert verify_mc_defect(g, sp, out)[0]
    assert defect_in_ideal_groebner(g, sp, out)


@settings(max_examples=10)
@given(st.integers(0, 10**4))
def test_basis_permutation_does_not_change_output(seed):
    g = random_model(seed, h1=2, extra=1, g2=2)
    assert permutation_determinism(g, cohomology(g), 4, seed)


def test_json_round_trip_and_loader(tmp_path):
    g = random_model(5)
    again = DGAlgebra.from_json(g.to_json())
    assert again.to_json() == g.to_json()
    path = tmp_path / "m.json"
    path.write_text(g.to_json())
    assert load_model(str(path)).to_json() == g.to_json()
    assert load_model("cup").name == "cup"
    assert load_model("flat-h1-4").to_json() == diagonal_test_model(0).to_json()
    with pytest.raises(OSError):
        load_model(str(tmp_path / "missing.json"))


def test_tensor_with_gl1_is_the_model_itself():
    h = random_model(2)
    sp = cohomology(h)
    g, tsp = tensor_glr(h, 1, sp)
    assert g.dims == h.dims and tsp.h == sp.h
    a = kuranishi_recursion(h, sp, 4)
    b = kuranishi_recursion(g, tsp, 4)
    assert a.f == b.f and a.gamma == b.gamma


def test_tensor_cohomology_scales():
    h = random_model(1)
    sp = cohomology(h)
    g, tsp = tensor_glr(h, 2, sp)
    assert cohomology(g).h == [4 * v for v in sp.h] == tsp.h
    assert all(g.check().values())


def test_diagonal_vanishing():
    h = diagonal_test_model()
    d = verify_diagonal_vanishing(h, 2, 4)
    assert d["H1_h"] == 4 and d["H2_tensor"] == 0
    for key in ("f_restricted_zero", "gamma_blocks_equal_single_run", "gamma_off_diagonal_zero",
                "block_swap_symmetric", "single_block_flat", "tensor_defect_ok"):
        assert d[key], key
    assert any(v for n, v in d["gamma_terms_single_run"].items() if int(n) > 1)
    with pytest.raises(ValueError):
        verify_diagonal_vanishing(cup_model(), 2, 3)


def test_suite_passes():
    rep = run_suite(degree=4)
    assert [c.status for c in rep.checks] == ["pass"] * len(rep.checks)
