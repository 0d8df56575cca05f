import pytest
from hypothesis import given
from hypothesis import strategies as st

from ogradlab.exactalg import PolyRing, rank
from ogradlab.groebner import monomials_of_degree
from ogradlab.report import FLAGGED
from ogradlab.t1_fiber import (
    build_strand,
    compute_H1,
    fiber_ring,
    hypersurface_T1,
    purity_consequence_check,
    run_suite,
    strand_I_certificates,
    strand_I_left,
    strand_row,
)

RING = fiber_ring()
x, y, z = RING.gens


def graded_map_rank(M, d_in):
    """Rank of ``M`` on the piece where every source entry has degree ``d_in`` (linear algebra only)."""
    src = list(monomials_of_degree(3, d_in))
    d_out = d_in + max(p.total_degree() for row in M.tolist() for p in row if p)
    tgt = [(i, m) for i in range(M.rows) for m in monomials_of_degree(3, d_out)]
    index = {k: n for n, k in enumerate(tgt)}
    cols = []
    for j in range(M.cols):
        for m in src:
            v = [0] * len(tgt)
            for i in range(M.rows):
                for e, c in M[i, j].items():
                    v[index[(i, tuple(a + b for a, b in zip(e, m)))]] += c
            cols.append(v)
    return rank(cols) if cols else 0


def brute_force_hf_strand_I(d):
    left, row = strand_I_left(RING), strand_row(RING)
    n4 = 4 * len(list(monomials_of_degree(3, d)))
    ker = n4 - graded_map_rank(row, d)
    im = graded_map_rank(left, d - 1) if d > 0 else 0
    return ker - im


def test_strand_I_is_a_complex_only_with_the_corrected_sign():
    left = strand_I_left(RING)
    assert (strand_row(RING) * left).is_zero()
    printed = (strand_row(RING, printed=True) * left).tolist()[0]
    assert [p.to_text() for p in printed] == ["0", "2*y^2", "2*y*z"]


def test_H1_III_vanishes():
    assert compute_H1(build_strand("III")).num_generators == 0


def test_H1_II_is_a_skyscraper():
    assert compute_H1(build_strand("II")).hilbert_function(4) == (1, 0, 0, 0, 0)


def test_H1_I_certificates():
    cert = strand_I_certificates(compute_H1(build_strand("I")))
    assert cert["annihilator_equals_xz_minus_y2"]
    assert cert["kills_generators"]
    assert cert["minimal_generators"] == 1
    assert all(cert["variables_act_nontrivially"].values())
    assert cert["hilbert_function"] == [1, 3, 5, 7, 9, 11, 13]


def test_H1_I_hilbert_function_against_graded_linear_algebra():
    hf = compute_H1(build_strand("I")).hilbert_function(4)
    assert list(hf) == [brute_force_hf_strand_I(d) for d in range(5)]


def test_unknown_strand():
    with pytest.raises(ValueError):
        build_strand("IV")


def test_tjurina_numbers():
    r = PolyRing("x,y")
    a, b = r.gens
    assert hypersurface_T1(a * a - b ** 3)[1] == 2
    assert hypersurface_T1(a ** 3 + b ** 3)[1] == 4  # D4
    assert hypersurface_T1(a * a * b)[1] is None  # non-isolated


@given(st.integers(1, 6))
def test_tjurina_of_A_k_is_k(k):
    r = PolyRing("x,y")
    a, b = r.gens
    assert hypersurface_T1(a ** (k + 1) + b * b)[1] == k


def test_purity_dimensions():
    d = purity_consequence_check()
    assert d["strand_I_support_dim"] == 2
    assert d["strand_II_support_dim"] == 0
    assert d["base_dim_G"] == 3
    assert d["support_image_dim"] == 4
    assert d["A1_T1_dimension"] == 1


def test_suite_flags_printed_row_and_dumps():
    dump = {}
    rep = run_suite(dump=dump)
    status = {c.name: c.status for c in rep.checks}
    assert status.pop("strand_I_is_complex") == FLAGGED
    assert set(status.values()) == {"pass"}
    assert {"I_kernel", "I_relations", "III_kernel"} <= set(dump)
