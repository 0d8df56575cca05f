from fractions import Fraction
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import R3, polynomials
from ogradlab.exactalg import (
    DEFAULT_PRIME,
    InconsistentSystem,
    PolyMatrix,
    PolyRing,
    QQ,
    format_poly,
    format_system,
    in_span,
    nullspace,
    parse_poly,
    parse_system,
    rank,
    rref,
    solve,
    sparse_solve,
    span_rank,
    to_qq,
    vanishes_mod_prime,
)

x, y, z = R3.gens


# -- scalars and text ---------------------------------------------------------


def test_to_qq_accepts_exact_inputs():
    assert to_qq("-3/4") == QQ(-3, 4)
    assert to_qq(Fraction(2, 6)) == QQ(1, 3)
    assert to_qq(5) == 5
    with pytest.raises(TypeError):
        to_qq(0.5)


def test_parse_known_polynomial():
    p = parse_poly("x^2*y - 3/2*z + 1", R3)
    assert p == x * x * y - z * QQ(3, 2) + 1


@given(polynomials())
def test_text_round_trip(p):
    assert parse_poly(format_poly(p), R3) == p
    assert parse_poly(p.to_text(), R3) == p


def test_system_round_trip():
    ring, polys = parse_system(format_system(R3, [x * y - z, z ** 3]))
    assert ring.names == R3.names
    assert polys == [x * y - z, z ** 3]


@pytest.mark.parametrize("bad", ["x^", "x**", "2*", "(x+y", "w"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_poly(bad, R3)


# -- ring axioms --------------------------------------------------------------


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == R3.zero()


@given(polynomials(), polynomials())
def test_degree_of_product(p, q):
    if p and q:
        assert (p * q).total_degree() == p.total_degree() + q.total_degree()


@given(polynomials(), polynomials(max_terms=3))
def test_division_identity(p, q):
    if not q:
        return
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    lm = q.leading_monomial()
    assert not any(all(a >= b for a, b in zip(e, lm)) for e, _ in rem.items())


@given(polynomials(), polynomials())
def test_leibniz_rule_for_diff(p, q):
    assert (p * q).diff("x") == p.diff("x") * q + p * q.diff("x")


@given(polynomials(), st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_evaluation_is_a_homomorphism(p, pt):
    q = p * p + x
    assert q.evaluate(pt) == p.evaluate(pt) ** 2 + pt[0]


@given(polynomials())
def test_homogeneous_components_sum_back(p):
    total = R3.zero()
    for d in range(p.total_degree() + 1):
        part = p.homogeneous_component(d)
        assert not part or part.is_homogeneous()
        total = total + part
    assert total == p


@given(polynomials(), polynomials(max_degree=2), polynomials(max_degree=2))
def test_composition_matches_evaluation(p, a, b):
    images = [a, b, x]
    comp = p.compose(images)
    pt = [2, -1, 3]
    assert comp.evaluate(pt) == p.evaluate([a.evaluate(pt), b.evaluate(pt), 2])


def test_orders_disagree_where_expected():
    lex = PolyRing("x,y,z", order="lex")
    p = parse_poly("x*z^5 + y^7", lex)
    assert p.leading_monomial() == (1, 0, 5)
    q = parse_poly("x*z^5 + y^7", R3)
    assert q.leading_monomial() == (0, 7, 0)


# -- modular identity testing -------------------------------------------------


def test_vanishes_mod_prime_detects_identities():
    p = (x + y) ** 2 - x * x - x * y * 2 - y * y
    assert vanishes_mod_prime(p, trials=20) == 20
    assert vanishes_mod_prime(p + z, trials=20) < 20
    assert DEFAULT_PRIME == 2**61 - 1


# -- matrices -----------------------------------------------------------------


def _random_int_matrix(rng, n, ring):
    return PolyMatrix(ring, [[ring.constant(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)])


@given(st.integers(0, 10**6))
def test_det_is_multiplicative(seed):
    rng = random.Random(seed)
    A = _random_int_matrix(rng, 3, R3)
    B = PolyMatrix(R3, [[x, y, 1], [0, z, x], [y, 1, z]])
    assert (A * B).det() == A.det() * B.det()


def test_adjugate_identity_symbolic():
    M = PolyMatrix(R3, [[x, y, z], [y, z, x], [z, x, y + 1]])
    assert M * M.adjugate() == PolyMatrix.identity(R3, 3) * M.det()


def test_minors_of_rank_one_matrix_vanish():
    v = [x, y, z]
    M = PolyMatrix(R3, [[a * b for b in v] for a in v])
    assert all(not m for m in M.minors(2).values())


# -- dense and sparse linear algebra -----------------------------------------


@st.composite
def int_systems(draw):
    rows = draw(st.integers(1, 6))
    cols = draw(st.integers(1, 6))
    M = [[QQ(draw(st.integers(-3, 3))) for _ in range(cols)] for _ in range(rows)]
    b = [QQ(draw(st.integers(-3, 3))) for _ in range(rows)]
    return M, b


@given(int_systems())
def test_nullspace_and_rank(sys_):
    M, _ = sys_
    cols = len(M[0])
    ns = nullspace(M, ncols=cols)
    assert len(ns) + rank(M) == cols
    for v in ns:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)


@given(int_systems())
def test_sparse_solver_agrees_with_dense(sys_):
    M, b = sys_
    dense = solve(M, b)
    rows = [{j: v for j, v in enumerate(r) if v} for r in M]
    info = {}
    try:
        sol = sparse_solve(rows, b, info=info)
    except InconsistentSystem:
        assert dense is None
        return
    assert dense is not None
    assert info["rank"] == rank(M)
    for r, rhs in zip(M, b):
        assert sum(v * sol.get(j, 0) for j, v in enumerate(r)) == rhs


def test_rref_pivots():
    red, piv = rref([[QQ(0), QQ(2), QQ(4)], [QQ(1), QQ(1), QQ(1)]])
    assert piv == [0, 1]
    assert red[1] == [0, 1, 2]


def test_span_helpers():
    assert span_rank([x, y, x + y]) == 2
    assert in_span(x * 2 - y, [x, y])
    assert not in_span(z, [x, y])
