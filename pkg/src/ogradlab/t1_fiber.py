"""First cohomology of the fibre complex over a Lagrangian plane, strand by strand.

Fibre coordinates ``x, y, z`` with ``Bbar = [[x, y], [y, z]]``.  The three
strands are indexed by the blocks alpha (I), beta (II) and gamma (III) of an
endomorphism in ``U + U*`` coordinates.
"""

from dataclasses import dataclass

from .exactalg import PolyMatrix, PolyRing
from .groebner import (
    IdealBasis,
    buchberger,
    cokernel,
    hilbert_function,
    krull_dimension,
    quotient_presentation,
    standard_monomials,
    syzygy_basis,
    verify_annihilator,
)
from .report import FLAGGED, SuiteReport, timed

PRINTED_ROW = "(y, z, -x, y)"
CORRECTED_ROW = "(y, z, -x, -y)"


def fiber_ring():
    return PolyRing("x,y,z")


@dataclass
class FiberComplex:
    ring: PolyRing
    tag: str
    left: PolyMatrix  # None for strands without an incoming map
    middle_rank: int
    right: PolyMatrix


def strand_I_left(ring):
    """``gamma' -> B gamma'`` written in the alpha coordinates (a11, a12, a21, a22)."""
    x, y, z = ring.gens
    o = ring.zero()
    return PolyMatrix(ring, [[x, y, o], [o, x, y], [y, z, o], [o, y, z]])


def strand_row(ring, printed=False):
    """``alpha -> (alpha B - B alpha^*)_12``; ``printed`` gives the row as typeset."""
    x, y, z = ring.gens
    return PolyMatrix(ring, [[y, z, -x, y if printed else -y]])


def build_strand(tag, ring=None):
    ring = ring or fiber_ring()
    x, y, z = ring.gens
    if tag == "III":
        return FiberComplex(ring, tag, None, 1, PolyMatrix(ring, [[x], [y], [z]]))
    if tag == "II":
        return FiberComplex(ring, tag, strand_row(ring), 1, None)
    if tag == "I":
        left, right = strand_I_left(ring), strand_row(ring)
        if not (right * left).is_zero():
            raise ArithmeticError("strand I is not a complex")
        return FiberComplex(ring, tag, left, 4, right)
    raise ValueError(f"unknown strand {tag!r}")


def compute_H1(strand):
    """Presentation of the strand's first cohomology.

    III: kernel of ``O -> O^3``.  II: cokernel of ``O^4 -> O``.
    I: ``ker(row) / im(left)`` on ``O^4``.
    """
    ring = strand.ring
    if strand.tag == "III":
        ker = syzygy_basis(strand.right)
        return quotient_presentation(ker, PolyMatrix(ring, [[] for _ in range(ker.rows)]))
    if strand.tag == "II":
        return cokernel(strand.left, generator_degrees=(0,))
    ker = syzygy_basis(strand.right)
    degrees = tuple(_column_degree(c) for c in ker.columns())
    return quotient_presentation(ker, strand.left, generator_degrees=degrees)


def _column_degree(col):
    return max(p.total_degree() for p in col if p)


def strand_I_certificates(pres):
    """Annihilator, minimal generator count, Hilbert function and variable actions."""
    ring = pres.ring
    x, y, z = ring.gens
    ann = pres.annihilator()
    target = IdealBasis(ring, [x * z - y * y])
    ann_gb = buchberger(ann)
    tgt_gb = buchberger(target)
    equal = ann_gb.contains_ideal(target) and tgt_gb.contains_ideal(ann)
    acts = {}
    gb = pres.relation_basis()
    k = pres.num_generators
    # the minimal generator is the degree-0 kernel column
    g0 = pres.generator_degrees.index(min(pres.generator_degrees))
    for name, v in zip("xyz", (x, y, z)):
        vec = [v if i == g0 else ring.zero() for i in range(k)]
        acts[name] = not gb.contains(vec)
    return {
        "annihilator": [g.to_text() for g in ann_gb.basis],
        "annihilator_equals_xz_minus_y2": equal,
        "kills_generators": verify_annihilator(pres, [x * z - y * y]),
        "minimal_generators": pres.minimal_generators(),
        "hilbert_function": list(pres.hilbert_function(6)),
        "variables_act_nontrivially": acts,
    }


def hypersurface_T1(f):
    """``Q[x] / (f, df/dx_1, ..., df/dx_n)`` with its dimension (``None`` when infinite)."""
    ring = f.ring
    gens = [f] + [f.diff(v) for v in ring.names]
    gb = buchberger(IdealBasis(ring, gens))
    dim = krull_dimension(gb)
    if dim > 0:
        return gb, None
    return gb, len(standard_monomials(gb))


def purity_consequence_check():
    ring = fiber_ring()
    x, y, z = ring.gens
    cone = krull_dimension(buchberger(IdealBasis(ring, [x * z - y * y])))
    point = krull_dimension(buchberger(IdealBasis(ring, [y, z, -x, -y])))
    r3 = PolyRing("x1,x2,x3")
    a, b, c = r3.gens
    _, t1 = hypersurface_T1(a * a + b * b + c * c)
    from .ograd_model import build_generic_B, grassmannian_ideal, ideal_L0, projective_dimension

    base = projective_dimension(grassmannian_ideal())
    image = krull_dimension(buchberger(ideal_L0(build_generic_B())))
    return {
        "strand_I_support_dim": cone,
        "strand_II_support_dim": point,
        "base_dim_G": base,
        "support_dim_on_resolution": cone + base,
        "support_image_dim": image,
        "A1_T1_dimension": t1,
        "assumption": "flatness over G of the pulled-back complex is assumed, not recomputed",
    }


def run_suite(timeout=None, dump=None):
    rep = SuiteReport("verify-t1")
    ring = fiber_ring()
    x, y, z = ring.gens

    def complex_check():
        left = strand_I_left(ring)
        good = (strand_row(ring) * left).tolist()[0]
        printed = (strand_row(ring, printed=True) * left).tolist()[0]
        ok = all(not v for v in good)
        status = FLAGGED if ok and any(printed) else ok
        return status, {
            "corrected_row": CORRECTED_ROW,
            "corrected_composition": [v.to_text() for v in good],
            "printed_row": PRINTED_ROW,
            "printed_composition": [v.to_text() for v in printed],
            "note": "the printed row does not compose to zero; the sign-corrected row is used",
        }

    timed(rep, "strand_I_is_complex", "right o left = 0 for the alpha strand", complex_check, timeout)

    def h3():
        pres = compute_H1(build_strand("III"))
        if dump is not None:
            dump["III_kernel"] = pres.generators
        return pres.num_generators == 0, {"kernel_generators": pres.num_generators}

    timed(rep, "H1_III", "H1_III = ker(O -> O^3, (x y z)^t) = 0", h3, timeout)

    def h2():
        st = build_strand("II")
        pres = compute_H1(st)
        hf = pres.hilbert_function(5)
        row_ideal = buchberger(IdealBasis(ring, list(st.left.row(0))))
        max_ideal = buchberger(IdealBasis(ring, [x, y, z]))
        same = row_ideal.contains_ideal(IdealBasis(ring, [x, y, z])) and max_ideal.contains_ideal(
            IdealBasis(ring, list(st.left.row(0)))
        )
        return hf == (1, 0, 0, 0, 0, 0) and same, {"hilbert_function": list(hf), "row_ideal_is_maximal": same}

    timed(rep, "H1_II", "H1_II = coker(O^4 -> O) is the skyscraper O_0", h2, timeout)

    def h1():
        st = build_strand("I")
        pres = compute_H1(st)
        if dump is not None:
            dump["I_kernel"] = pres.generators
            dump["I_relations"] = pres.relation_matrix
        cert = strand_I_certificates(pres)
        cone_hf = list(hilbert_function(buchberger(IdealBasis(ring, [x * z - y * y])), 6).values)
        cert["expected_hilbert_function"] = cone_hf
        ok = (
            cert["annihilator_equals_xz_minus_y2"]
            and cert["kills_generators"]
            and cert["minimal_generators"] == 1
            and cert["hilbert_function"] == cone_hf
            and all(cert["variables_act_nontrivially"].values())
        )
        return ok, cert

    timed(rep, "H1_I", "H1_I = O_{xz - y^2 = 0}: cyclic with annihilator (xz - y^2)", h1, timeout)

    def purity():
        d = purity_consequence_check()
        ok = (
            d["strand_I_support_dim"] == 2
            and d["strand_II_support_dim"] == 0
            and d["support_image_dim"] == 4
            and d["A1_T1_dimension"] == 1
        )
        return ok, d

    timed(rep, "purity_evidence", "strand I support has fibre dimension 2 and maps onto the 4-dimensional rank <= 1 locus", purity, timeout)

    def tjurina():
        r = PolyRing("x,y")
        a, b = r.gens
        s = PolyRing("x1")
        _, cusp = hypersurface_T1(a * a - b ** 3)
        _, smooth = hypersurface_T1(s.gens[0])
        return cusp == 2 and smooth == 0, {"cusp_x2_minus_y3": cusp, "smooth_x1": smooth}

    timed(rep, "hypersurface_T1", "T1 of a hypersurface is Q[x]/(f, grad f)", tjurina, timeout)
    return rep
