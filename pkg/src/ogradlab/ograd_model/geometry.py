"""Lagrangian Grassmannian, fibres of the resolution, a blow-up chart and the presentation of I0."""

from dataclasses import dataclass
from itertools import combinations

from ..exactalg import PolyMatrix, PolyRing, QQ
from ..groebner import IdealBasis, buchberger, krull_dimension
from .space import (
    BLOCK_ANTIDIAGONAL,
    SymplecticSpace,
    build_generic_B,
    const_matrix,
    eplus_basis,
    eplus_coordinates,
    ideal_I0,
    is_square_zero,
)

PLUCKER = [f"p{i + 1}{j + 1}" for i, j in combinations(range(4), 2)]


def plucker_ring():
    return PolyRing(PLUCKER)


def plucker_matrix(ring):
    """Antisymmetric ``Phi`` with ``Phi_ij = p_ij``; equals ``u w^t - w u^t`` on a plane."""
    z = ring.zero()
    Phi = [[z] * 4 for _ in range(4)]
    for i, j in combinations(range(4), 2):
        p = ring.gen(f"p{i + 1}{j + 1}")
        Phi[i][j] = p
        Phi[j][i] = -p
    return PolyMatrix(ring, Phi)


def grassmannian_ideal(space=None):
    """Plucker quadric and ``omega(phi) = sum J_ij p_ij`` (block-diagonal J)."""
    space = space or SymplecticSpace()
    ring = plucker_ring()
    g = {n: ring.gen(n) for n in PLUCKER}
    quadric = g["p12"] * g["p34"] - g["p13"] * g["p24"] + g["p14"] * g["p23"]
    J = space.J
    linear = ring.zero()
    for i, j in combinations(range(4), 2):
        if J[i][j]:
            linear = linear + g[f"p{i + 1}{j + 1}"] * J[i][j]
    return IdealBasis(ring, [quadric, linear])


def plucker_vector(u, w):
    return [u[i] * w[j] - u[j] * w[i] for i, j in combinations(range(4), 2)]


def projective_dimension(ideal):
    return krull_dimension(buchberger(ideal)) - 1


def fiber_dimension(B_point, space=None):
    """Dimension of ``{U Lagrangian : B(U) = 0}`` in the Plucker embedding.

    ``B(U) = 0`` for ``U = span(u, w)`` is ``B Phi = 0``; every entry of
    ``B Phi`` is linear in the Plucker coordinates.
    """
    if not is_square_zero(B_point):
        raise ValueError("B is not square-zero")
    base = grassmannian_ideal(space)
    ring = base.ring
    Bm = const_matrix(ring, B_point)
    eqs = [v for r in (Bm * plucker_matrix(ring)).tolist() for v in r]
    return projective_dimension(IdealBasis(ring, list(base.generators) + eqs))


# --- blow-up chart ---------------------------------------------------------


@dataclass
class ChartPoint:
    """``B(S; x, y, z) = g_S B0 g_S^{-1}`` in block-diagonal coordinates.

    ``B0 = [[0, Bbar], [0, 0]]`` in ``U + U*`` coordinates, ``Bbar = [[x, y], [y, z]]``,
    ``g_S = [[I, 0], [S, I]]``; ``B`` kills the Lagrangian plane ``g_S U``.
    """

    ring: PolyRing
    B: PolyMatrix


def chart_point():
    ring = PolyRing("S11,S12,S22,x,y,z")
    S11, S12, S22, x, y, z = ring.gens
    o, i = ring.zero(), ring.one()
    B0 = PolyMatrix(ring, [[o, o, x, y], [o, o, y, z], [o, o, o, o], [o, o, o, o]])
    g = PolyMatrix(ring, [[i, o, o, o], [o, i, o, o], [S11, S12, i, o], [S12, S22, o, i]])
    ginv = PolyMatrix(ring, [[i, o, o, o], [o, i, o, o], [-S11, -S12, i, o], [-S12, -S22, o, i]])
    P = const_matrix(ring, SymplecticSpace(BLOCK_ANTIDIAGONAL).to_block_diagonal)
    B_uu = g * B0 * ginv
    return ChartPoint(ring, P * B_uu * P.T)


def blowup_chart_check(chart=None):
    """Every 2x2 minor is ``(xz - y^2) p(S)`` and the ``p`` generate the unit ideal."""
    chart = chart or chart_point()
    ring = chart.ring
    S11, S12, S22, x, y, z = ring.gens
    disc = x * z - y * y
    quotients, bad = [], []
    for key, m in chart.B.minors(2).items():
        if not m:
            continue
        q, r = m.divmod(disc)
        if r or any(q.degree(v) for v in ("x", "y", "z")):
            bad.append(key)
        else:
            quotients.append(q)
    gb = buchberger(IdealBasis(ring, quotients)) if quotients else None
    unit = bool(gb) and gb.contains(ring.one())
    at_origin = chart.B.compose([S11, S12, S22, ring.zero(), ring.zero(), ring.zero()])
    return {
        "nonzero_minors": len(quotients) + len(bad),
        "not_divisible": bad,
        "quotients_unit_ideal": unit,
        "square_zero": (chart.B * chart.B).is_zero(),
        "in_sp4": _in_sp(chart.B),
        "minors_vanish_on_exceptional_locus": all(not v for v in at_origin.minors(2).values()),
        "quotients_at_S0": sorted({str(v) for v in (q.compose([ring.zero()] * 3 + [x, y, z]) for q in quotients) if v}),
    }


def _in_sp(B):
    J = const_matrix(B.ring, SymplecticSpace().J)
    return (J * B + B.T * J).is_zero()


# --- presentation of I0 and the complex C ----------------------------------


def presentation_matrices(elem=None):
    """Generator row ``g`` (the 6 quadrics) and the 15 + 6 relation columns."""
    elem = elem or build_generic_B()
    ring = elem.ring
    f = ideal_I0(elem).generators
    n = len(f)
    g = PolyMatrix(ring, [list(f)])
    cols = []
    for k, l in combinations(range(n), 2):
        col = [ring.zero()] * n
        col[k] = f[l]
        col[l] = -f[k]
        cols.append(col)
    basis = [const_matrix(ring, E) for _, E in eplus_basis(elem.space)]
    brackets = [eplus_coordinates(elem.B * E - E * elem.B, elem.space) for E in basis]
    # column for lambda_k: (lambda_k([B, E_j]))_j
    for k in range(n):
        cols.append([brackets[j][k] for j in range(n)])
    return g, PolyMatrix.from_columns(ring, cols)


def presentation_complex_check(elem=None):
    elem = elem or build_generic_B()
    g, rel = presentation_matrices(elem)
    comp = g * rel
    B = elem.B
    B2 = B * B
    lam = eplus_coordinates(B * B2 - B2 * B, elem.space)
    return {
        "relations": rel.cols,
        "composition_zero": comp.is_zero(),
        "bracket_B_B2_zero": all(not v for v in lam),
        "brackets_in_E_plus": _brackets_in_eplus(elem),
    }


def _brackets_in_eplus(elem):
    J = elem.J()
    for _, E in eplus_basis(elem.space):
        Em = const_matrix(elem.ring, E)
        C = elem.B * Em - Em * elem.B
        JC = J * C
        if not (JC + JC.T).is_zero():
            return False
    return True


E_MINUS_NAMES = [f"c{a + 1}{b + 1}" for a in range(4) for b in range(a, 4)]


def d0_d1_check():
    """``d1 d0 (b) = b B^2 - B^2 b`` reduces to 0 modulo I0 for generic ``b`` in sp4."""
    elem = build_generic_B(extra=E_MINUS_NAMES)
    ring = elem.ring
    from .space import symmetric_from_vars

    b = symmetric_from_vars(ring, E_MINUS_NAMES) * elem.J()
    B = elem.B
    d0 = b * B + B * b
    d1d0 = d0 * B - B * d0
    B2 = B * B
    identity_ok = d1d0 == b * B2 - B2 * b
    gb = buchberger(ideal_I0(elem))
    residues = [gb.normal_form(v) for r in d1d0.tolist() for v in r]
    J = elem.J()
    Jd0 = J * d0
    d0_in_eplus = (Jd0 + Jd0.T).is_zero()
    # d1 of a generic E_+ element stays in E_+
    a = PolyMatrix(ring, [[0] * 4] * 4)
    for k, (_, E) in enumerate(eplus_basis(elem.space)):
        a = a + const_matrix(ring, E) * ring.gen(E_MINUS_NAMES[k])
    d1a = a * B - B * a
    Jd1 = J * d1a
    return {
        "entries": len(residues),
        "nonzero_residues": sum(1 for r in residues if r),
        "composition_formula": identity_ok,
        "d0_lands_in_E_plus": d0_in_eplus,
        "d1_preserves_E_plus": (Jd1 + Jd1.T).is_zero(),
    }


def yj_identification_check(space=None):
    """``Y -> YJ`` maps a basis of Sym4 into sp4 and is injective."""
    space = space or SymplecticSpace()
    J = space.J
    from .space import qmul, qadd, qtranspose, qzero, SYM_INDEX
    from ..exactalg import rank

    images = []
    for a, b in SYM_INDEX:
        Y = [[QQ(0)] * 4 for _ in range(4)]
        Y[a][b] = Y[b][a] = QQ(1)
        B = qmul(Y, J)
        if not qzero(qadd(qmul(J, B), qmul(qtranspose(B), J))):
            return False, 0
        images.append([v for r in B for v in r])
    return True, rank(images)
