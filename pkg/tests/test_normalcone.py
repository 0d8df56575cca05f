import pytest
from hypothesis import given

from conftest import R3, polynomials
from ogradlab.exactalg import PolyRing
from ogradlab.exactalg.poly import Polynomial
from ogradlab.groebner import IdealBasis
from ogradlab.normalcone import (
    DeformationSystem,
    NotTangentToIdentity,
    WeightError,
    WeightedSeries,
    corrupted_i0,
    end_to_end_pullback,
    flow_residual,
    i0_pullback,
    load_system,
    node_system,
    pullback_perturbation,
    run_pipeline,
    shear_system,
    solve_phi_h,
    xt_ring,
)
from ogradlab.normalcone.series import truncate_by, x_degree
from ogradlab.normalcone.suite import node_check, trivial_check

BOUND = 5
XT = xt_ring(R3)


def weighted(weight):
    def build(p):
        keep = {e: c for e, c in p.items() if sum(e) >= max(weight, 0)}
        return WeightedSeries.from_specialization(Polynomial(R3, keep, True), weight, BOUND)

    return polynomials(max_degree=3, max_terms=4).map(build)


@given(weighted(1), weighted(2))
def test_product_adds_weights_and_matches_xt(a, b):
    prod = a * b
    assert prod.weight == 3
    prod.check()
    assert prod.to_xt(XT) == truncate_by(a.to_xt(XT) * b.to_xt(XT), BOUND, x_degree)


@given(weighted(2), weighted(1), weighted(1), weighted(1))
def test_composition_matches_literal_expansion(p, a, b, c):
    images = [a + WeightedSeries.from_specialization(v, 1, BOUND) for a, v in zip((a, b, c), R3.gens)]
    comp = p.compose(images)
    comp.check()
    t = XT.gens[-1]
    literal = p.to_xt(XT).compose([s.to_xt(XT) for s in images] + [t])
    assert comp.to_xt(XT) == truncate_by(literal, BOUND, x_degree)


@given(weighted(2))
def test_derivatives_match_xt(p):
    assert p.diff_t().to_xt(XT) == p.to_xt(XT).diff("t")
    assert p.diff_x(0).to_xt(XT) == p.to_xt(XT).diff("x")
    assert p.diff_t().weight == 3 and p.diff_x(1).weight == 1


@given(weighted(2))
def test_specialization_round_trip(p):
    assert WeightedSeries.from_specialization(p.at_one(), 2, BOUND) == p
    assert WeightedSeries.from_xt(p.to_xt(XT), R3, 2, BOUND) == p


def test_weight_errors():
    x, y, z = R3.gens
    with pytest.raises(WeightError):
        WeightedSeries.from_specialization(x, 2, 4)
    with pytest.raises(WeightError):
        WeightedSeries(R3, 2, {0: x}, 4).check()
    with pytest.raises(WeightError):
        WeightedSeries(R3, 2, {0: x * y}, 4) + WeightedSeries(R3, 1, {0: x}, 4)
    t = XT.gens[-1]
    with pytest.raises(WeightError):
        WeightedSeries.from_xt(XT.gens[0] * t, R3, 2, 4)


def test_node_toy():
    ok, out = node_check(4)
    assert ok
    assert out["psi"][1] == "(y) + t^1*(-x^2)"
    x, y = node_system().ring.gens
    res = solve_phi_h(node_system(), 4)
    # the tie-break picks Phi = (0, x^2), h = 0
    assert [s.at_one() for s in res.solution.phi] == [x.ring.zero(), x * x]
    assert res.solution.h[0][0].is_zero()


def test_quadratic_system_is_its_own_trivialization():
    ok, out = trivial_check(4)
    assert ok and out["psi_identity"] and out["M_identity"]


def test_shear():
    system = shear_system()
    (x,) = system.ring.gens
    assert system.f == [x * x + x ** 3 * 2 + x ** 4]
    out, triv = run_pipeline(system, 4)
    assert out["ok"]
    # the identity only holds once M is evaluated along Psi
    assert out["verification"]["t1_identity_holds"]
    assert not out["verification"]["t1_identity_with_M_unsubstituted"]


def test_pullback_of_I0_at_degree_three():
    system, base = i0_pullback(3, seed=1)
    assert system.ring.nvars == 14 and len(system.f) == 6
    out, triv = run_pipeline(system, 3)
    assert out["ok"] and triv is not None
    assert all(r.is_zero() for r in flow_residual(system, triv.phi, triv.h, 3))


def test_end_to_end_pullback_degree_three():
    out = end_to_end_pullback(3, seed=0)
    assert out["ok"] and out["initial_forms_generate_I0"]


def test_corrupted_system_obstruction_is_localized():
    system, _ = corrupted_i0(seed=0)
    res = solve_phi_h(system, 4)
    assert not res.ok
    obs = res.obstruction.to_dict()
    assert obs["degree"] == 3 and obs["t_exponent"] == 0
    assert obs["residual_terms"] > 0
    assert obs["rank"] < obs["unknowns"]


def test_pullback_rejects_bad_germs():
    ring = PolyRing("x,y")
    x, y = ring.gens
    base = IdealBasis(ring, [x * y])
    with pytest.raises(NotTangentToIdentity):
        pullback_perturbation(base, [x + 1, y], 3)
    with pytest.raises(NotTangentToIdentity):
        pullback_perturbation(base, [x * 2, y], 3)
    with pytest.raises(ValueError):
        pullback_perturbation(IdealBasis(ring, [x ** 3]), [x, y], 3)
    identity = pullback_perturbation(base, [x, y], 3)
    assert identity.f == [x * y]


def test_system_must_start_in_degree_two():
    ring = PolyRing("x,y")
    x, y = ring.gens
    with pytest.raises(ValueError):
        DeformationSystem(ring, [x + y * y])
    with pytest.raises(ValueError):
        DeformationSystem(ring, [ring.zero()])


def test_load_system(tmp_path):
    path = tmp_path / "node.txt"
    path.write_text("ring: x, y\nx*y + x^3\n")
    system = load_system(str(path))
    assert system.f == node_system().f
