"""The ``verify-model`` suite."""

from ..exactalg import QQ
from ..groebner import IdealBasis, buchberger, krull_dimension
from ..report import SuiteReport, timed
from .geometry import (
    blowup_chart_check,
    d0_d1_check,
    fiber_dimension,
    grassmannian_ideal,
    plucker_vector,
    presentation_complex_check,
    projective_dimension,
    yj_identification_check,
)
from .space import (
    SymplecticSpace,
    build_generic_B,
    ideal_I0,
    ideal_L0,
    is_in_sp,
    is_square_zero,
    rank1_point,
    rank2_point,
    seeded,
)


def dimension_suite():
    """Krull dimensions of the quotients by I0 (10 and 14 variables) and by L0."""
    elem = build_generic_B()
    I0 = ideal_I0(elem)
    L0 = ideal_L0(elem)
    wide = build_generic_B(extra=["X1", "X2", "X3", "X4"])
    return {
        "dim_I0": krull_dimension(buchberger(I0)),
        "dim_I0_R": krull_dimension(buchberger(ideal_I0(wide))),
        "dim_L0": krull_dimension(buchberger(L0)),
        "dim_unit": krull_dimension(buchberger(IdealBasis(elem.ring, [elem.ring.one()]))),
    }


def run_suite(seed=0, timeout=None, dump=None):
    rep = SuiteReport("verify-model")
    rng = seeded(seed)

    def symplectic():
        elem = build_generic_B()
        ok_space = SymplecticSpace().check() and SymplecticSpace("block-antidiagonal").check()
        yj_ok, yj_rank = yj_identification_check()
        return (
            elem.symplectic_defect().is_zero() and elem.coordinate_rank() == 10 and ok_space and yj_ok and yj_rank == 10,
            {"coordinates": elem.coordinate_rank(), "conventions_compatible": ok_space, "YJ_image_rank": yj_rank},
        )

    timed(rep, "generic_B_in_sp4", "B in sp4 has 10 free coordinates; Y -> YJ identifies Sym4 with sp4", symplectic, timeout)

    def census():
        elem = build_generic_B()
        I0 = ideal_I0(elem)
        gens = I0.generators
        ok = len(gens) == 6 and all(g.is_homogeneous() and g.total_degree() == 2 for g in gens)
        if dump is not None:
            dump["I0"] = I0
        return ok, {"generators": [g.to_text() for g in gens], "count": len(gens)}

    timed(rep, "I0_census", "I0 is generated by 6 quadrics, the E+ coordinates of B^2", census, timeout)

    def dims():
        d = dimension_suite()
        ok = d["dim_I0"] == 6 and d["dim_I0_R"] == 10 and d["dim_L0"] == 4 and d["dim_unit"] == -1
        return ok, d

    timed(rep, "dimensions", "dim Q[sp4]/I0 = 6, dim R/I0R = 10, dim Q[sp4]/L0 = 4", dims, timeout)

    def containment():
        elem = build_generic_B()
        gb = buchberger(ideal_L0(elem))
        if dump is not None:
            dump["L0"] = gb
            dump["I0_gb"] = buchberger(ideal_I0(elem))
        residues = [gb.normal_form(g) for g in ideal_I0(elem)]
        return all(not r for r in residues), {"L0_generators": len(ideal_L0(elem)), "nonzero": sum(1 for r in residues if r)}

    timed(rep, "I0_in_L0", "every I0 generator reduces to 0 modulo L0", containment, timeout)

    def grass():
        G = grassmannian_ideal()
        degs = sorted(g.total_degree() for g in G)
        e = [QQ(int(i == k)) for k in range(4) for i in range(4)]
        e1, e2, e3 = e[0:4], e[4:8], e[8:12]
        ring = G.ring

        def sat(u, w):
            pv = plucker_vector(u, w)
            return all(not g.evaluate(pv) for g in G)

        return (
            degs == [1, 2] and projective_dimension(G) == 3 and sat(e1, e3) and not sat(e1, e2),
            {"degrees": degs, "projective_dimension": projective_dimension(G), "nvars": ring.nvars},
        )

    timed(rep, "lagrangian_grassmannian", "G is cut out by the Plucker quadric and omega(phi) = 0, dim 3", grass, timeout)

    def fibres():
        zero = [[QQ(0)] * 4 for _ in range(4)]
        r1 = [rank1_point(rng) for _ in range(5)]
        r2 = rank2_point(rng)
        ok_pts = all(is_square_zero(B) and is_in_sp(B) for B in r1 + [r2])
        d0 = fiber_dimension(zero)
        d1 = [fiber_dimension(B) for B in r1]
        d2 = fiber_dimension(r2)
        return ok_pts and d0 == 3 and d1 == [1] * 5 and d2 == 0, {"rank0": d0, "rank1": d1, "rank2": d2}

    timed(rep, "semismall_fibres", "fibres over rank 0, 1, 2 are G, P^1 and a point", fibres, timeout)

    def chart():
        d = blowup_chart_check()
        ok = (
            not d["not_divisible"]
            and d["quotients_unit_ideal"]
            and d["square_zero"]
            and d["in_sp4"]
            and d["minors_vanish_on_exceptional_locus"]
        )
        return ok, d

    timed(rep, "blowup_chart", "pulled-back minor ideal is principal, generated by xz - y^2", chart, timeout)

    def presentation():
        d = presentation_complex_check()
        return d["composition_zero"] and d["bracket_B_B2_zero"] and d["brackets_in_E_plus"] and d["relations"] == 21, d

    timed(rep, "presentation_of_I0", "tautological and lambda o ad B relations compose to zero with g", presentation, timeout)

    def d0d1():
        d = d0_d1_check()
        ok = d["nonzero_residues"] == 0 and d["composition_formula"] and d["d0_lands_in_E_plus"] and d["d1_preserves_E_plus"]
        return ok, d

    timed(rep, "d1_d0_on_Z", "d1 d0 vanishes on Z", d0d1, timeout)
    return rep
