"""SL2 invariants of four 2x2 matrices and the identities between them.

The ring has 16 variables ``a_i, b_i, c_i, d_i`` with ``A_i = [[a_i, b_i], [c_i, d_i]]``.
Invariants: ``X_i = tr A_i``, ``Y_ij = tr(A'_i A'_j)`` and
``T_i = (-1)^i tr(A'_j A'_k A'_l)`` (``j < k < l`` the other indices),
where ``A'_i = A_i - X_i/2``.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import DEFAULT_PRIME, PolyMatrix, PolyRing, QQ, span_rank, vanishes_mod_prime
from .report import FLAGGED, SuiteReport, timed

NAMES = [f"{ch}{i}" for i in range(1, 5) for ch in "abcd"]


@dataclass
class MatrixTuple:
    ring: PolyRing
    A: list

    @property
    def traceless(self):
        out = []
        for M in self.A:
            half = M.trace() * QQ(Fraction(1, 2))
            out.append(M - PolyMatrix.identity(self.ring, 2) * half)
        return out


@dataclass
class InvariantSet:
    ring: PolyRing
    X: list
    Y: PolyMatrix
    T: list


def matrix_tuple(ring=None):
    ring = ring or PolyRing(NAMES)
    A = []
    for i in range(1, 5):
        a, b, c, d = (ring.gen(f"{ch}{i}") for ch in "abcd")
        A.append(PolyMatrix(ring, [[a, b], [c, d]]))
    return MatrixTuple(ring, A)


def build_invariants(t=None):
    t = t or matrix_tuple()
    Ap = t.traceless
    X = [M.trace() for M in t.A]
    Y = PolyMatrix(t.ring, [[(Ap[i] * Ap[j]).trace() for j in range(4)] for i in range(4)])
    T = []
    for i in range(4):
        rest = [k for k in range(4) if k != i]
        tr = (Ap[rest[0]] * Ap[rest[1]] * Ap[rest[2]]).trace()
        # 1-based sign (-1)^i
        T.append(tr if (i + 1) % 2 == 0 else -tr)
    return InvariantSet(t.ring, X, Y, T)


def column(ring, polys):
    return PolyMatrix(ring, [[p] for p in polys])


def fundamental_relations(inv):
    """Residual polynomials of ``Y - Y^t``, ``det Y``, ``Y T`` and ``T T^t + 2 adj Y``."""
    Tc = column(inv.ring, inv.T)
    return {
        "Y_symmetric": [v for r in (inv.Y - inv.Y.T).tolist() for v in r],
        "det_Y": [inv.Y.det()],
        "Y_T": [v for r in (inv.Y * Tc).tolist() for v in r],
        "T_Tt_plus_2adj": [v for r in (Tc * Tc.T + inv.Y.adjugate() * 2).tolist() for v in r],
    }


def proportionality_constant(lhs, rhs):
    """The rational ``c`` with ``lhs[k] == c * rhs[k]`` for every ``k``, or ``None``."""
    c = None
    for l, r in zip(lhs, rhs):
        if r:
            e, cr = r.leading_term()
            c = l.coeff(e) / cr
            break
    if c is None or any(l != r * c for l, r in zip(lhs, rhs)):
        return None
    return c


def validating_constant(inv):
    """The ``c`` with ``T T^t = c adj(Y)`` (``None`` if no constant works)."""
    Tc = column(inv.ring, inv.T)
    lhs = [v for r in (Tc * Tc.T).tolist() for v in r]
    adj = [v for r in inv.Y.adjugate().tolist() for v in r]
    return proportionality_constant(lhs, adj)


def modular_crosscheck(polys, trials=100, seed=0, prime=DEFAULT_PRIME):
    """Number of polynomials that vanish at all ``trials`` random points mod ``prime``."""
    return sum(1 for i, p in enumerate(polys) if vanishes_mod_prime(p, trials, seed + i, prime) == trials)


def f2(t):
    A = t.A
    return (A[0] * A[1] - A[1] * A[0]) + (A[2] * A[3] - A[3] * A[2])


J_BLOCK = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]


def quadratic_part_identities(t=None):
    """Residuals of ``-1/2 tr(A'_2 f2) - T_1`` and ``tr(A'_i A'_j f2) - (YJY)_ij``, ``i <= j``."""
    t = t or matrix_tuple()
    inv = build_invariants(t)
    Ap = t.traceless
    F = f2(t)
    ring = t.ring
    J = PolyMatrix(ring, J_BLOCK)
    YJY = inv.Y * J * inv.Y
    first = (Ap[1] * F).trace() * QQ(Fraction(-1, 2)) - inv.T[0]
    others = {}
    for i in range(4):
        for j in range(i, 4):
            others[(i + 1, j + 1)] = (Ap[i] * Ap[j] * F).trace() - YJY[i, j]
    return first, others, YJY


def diagonal_minors():
    """Minors of ``Y`` after ``A_i = diag(p_i, q_i)``; all should vanish."""
    inv = build_invariants()
    diag = PolyRing([f"{ch}{i}" for i in range(1, 5) for ch in "pq"])
    images = []
    for i in range(1, 5):
        images += [diag.gen(f"p{i}"), diag.zero(), diag.zero(), diag.gen(f"q{i}")]
    Yd = inv.Y.compose(images)
    minors = Yd.minors(2)
    return minors, inv.Y.minors(2)


def yj_squares():
    """Entries of ``(YJ)^2`` against ``YJYJ`` and their span against the I0 generators."""
    from .ograd_model import build_generic_B, ideal_I0

    elem = build_generic_B()
    ring = elem.ring
    from .ograd_model.space import SP4_NAMES, symmetric_from_vars, const_matrix

    Y = symmetric_from_vars(ring, SP4_NAMES)
    J = const_matrix(ring, elem.space.J)
    B = Y * J
    ftilde = Y * J * Y * J  # f~_ac = sum_b (YJY)_ab J_bc
    gens = list(ideal_I0(elem).generators)
    entries = [v for r in ftilde.tolist() for v in r]
    r_gens = span_rank(gens)
    r_ft = span_rank(entries)
    r_both = span_rank(gens + entries)
    in_sp = (J * B + B.T * J).is_zero()
    return {
        "square_matches": B * B == ftilde,
        "YJ_in_sp4": in_sp,
        "rank_I0": r_gens,
        "rank_ftilde": r_ft,
        "rank_joint": r_both,
    }


def random_unimodular(rng):
    """Product of random elementary matrices: exact determinant 1."""
    g = [[QQ(1), QQ(0)], [QQ(0), QQ(1)]]
    for _ in range(3):
        s = QQ(Fraction(rng.randint(-7, 7), rng.randint(1, 5)))
        e = [[QQ(1), s], [QQ(0), QQ(1)]] if rng.random() < 0.5 else [[QQ(1), QQ(0)], [s, QQ(1)]]
        g = [[sum(g[i][k] * e[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    return g


def invariance_check(trials=50, seed=0):
    """Every X, Y, T is unchanged under simultaneous conjugation by unimodular ``g``."""
    rng = random.Random(seed)
    inv = build_invariants()
    polys = inv.X + [inv.Y[i, j] for i in range(4) for j in range(i, 4)] + inv.T
    bad = 0
    for _ in range(trials):
        g = random_unimodular(rng)
        gi = [[g[1][1], -g[0][1]], [-g[1][0], g[0][0]]]
        point = [QQ(Fraction(rng.randint(-20, 20), rng.randint(1, 6))) for _ in range(16)]
        moved = []
        for i in range(4):
            a, b, c, d = point[4 * i : 4 * i + 4]
            M = [[a, b], [c, d]]
            gm = [[sum(g[r][k] * M[k][s] for k in range(2)) for s in range(2)] for r in range(2)]
            conj = [[sum(gm[r][k] * gi[k][s] for k in range(2)) for s in range(2)] for r in range(2)]
            moved += [conj[0][0], conj[0][1], conj[1][0], conj[1][1]]
        if any(p.evaluate(point) != p.evaluate(moved) for p in polys):
            bad += 1
    return bad


def run_suite(seed=0, prime=DEFAULT_PRIME, timeout=None, trials=100):
    rep = SuiteReport("verify-invariants")
    anchor_rel = "Y = Y^t, det Y = 0, Y T = 0, T T^t = -2 adj(Y)"

    def census():
        inv = build_invariants()
        ok = (
            all(x.total_degree() == 1 for x in inv.X)
            and all(inv.Y[i, j].total_degree() == 2 for i in range(4) for j in range(4))
            and all(t.total_degree() == 3 for t in inv.T)
        )
        traceless = all(not M.trace() for M in matrix_tuple().traceless)
        return ok and traceless, {"deg_X": 1, "deg_Y": 2, "deg_T": 3, "traceless_parts": traceless}

    timed(rep, "degree_census", "invariants X, Y, T have degrees 1, 2, 3", census, timeout)

    def relations():
        inv = build_invariants()
        Tc = column(inv.ring, inv.T)
        res = fundamental_relations(inv)
        details, ok, flagged = {}, True, False
        for name, polys in res.items():
            nonzero = [p for p in polys if p]
            agree = modular_crosscheck(polys, trials, seed, prime)
            details[name] = {
                "nonzero_residuals": len(nonzero),
                "modular_points": trials,
                "modular_vanishing": f"{agree}/{len(polys)}",
            }
            if name == "T_Tt_plus_2adj" and nonzero:
                c = validating_constant(inv)
                details[name]["validating_constant"] = str(c)
                if c is not None:
                    fixed = [v for r in (Tc * Tc.T - inv.Y.adjugate() * c).tolist() for v in r]
                    agree = modular_crosscheck(fixed, trials, seed, prime)
                    details[name]["corrected_modular_vanishing"] = f"{agree}/{len(fixed)}"
                    c_ok = agree == len(fixed)
                else:
                    c_ok = False
                flagged = c_ok
                ok = ok and c_ok
            else:
                ok = ok and not nonzero and agree == len(polys)
        details["expanded_terms"] = {
            "det_Y": len(inv.Y.det().terms),
            "T_Tt": sum(len(v.terms) for r in (Tc * Tc.T).tolist() for v in r),
        }
        if not ok:
            return False, details
        return (FLAGGED if flagged else True), details

    timed(rep, "fundamental_relations", anchor_rel, relations, timeout)

    def quadratic():
        first, others, YJY = quadratic_part_identities()
        allpolys = [first] + list(others.values())
        agree = modular_crosscheck(allpolys, trials, seed, prime)
        details = {
            "T1_identity_residual": first.to_text(),
            "YJY_nonzero": [list(k) for k, v in others.items() if v],
            "modular_vanishing": f"{agree}/{len(allpolys)}",
        }
        if first:
            return False, details
        if not any(others.values()) and agree == len(allpolys):
            return True, details
        t = matrix_tuple()
        Ap, F = t.traceless, f2(t)
        keys = list(others)
        lhs = [(Ap[i - 1] * Ap[j - 1] * F).trace() for i, j in keys]
        c = proportionality_constant(lhs, [YJY[i - 1, j - 1] for i, j in keys])
        details["validating_constant"] = str(c)
        if c is None:
            return False, details
        fixed = [l - YJY[i - 1, j - 1] * c for l, (i, j) in zip(lhs, keys)]
        agree = modular_crosscheck(fixed, trials, seed, prime)
        details["corrected_modular_vanishing"] = f"{agree}/{len(fixed)}"
        return (FLAGGED if agree == len(fixed) else False), details

    timed(
        rep,
        "quadratic_parts",
        "-1/2 tr(A'_2 f2) = T_1 and tr(A'_i A'_j f2) = (YJY)_ij for f2 = [A1,A2] + [A3,A4]",
        quadratic,
        timeout,
    )

    def diagonal():
        dmin, gmin = diagonal_minors()
        rng = random.Random(seed)
        pt = [rng.randint(-9, 9) for _ in range(16)]
        generic_nonzero = gmin[((0, 1), (0, 1))].evaluate(pt) != 0
        return all(not v for v in dmin.values()) and generic_nonzero, {
            "minors": len(dmin),
            "nonzero_after_substitution": sum(1 for v in dmin.values() if v),
            "generic_minor_nonzero": generic_nonzero,
        }

    timed(rep, "diagonal_minors", "on the diagonal locus every 2x2 minor of Y vanishes", diagonal, timeout)

    def squares():
        d = yj_squares()
        ok = d["square_matches"] and d["YJ_in_sp4"] and d["rank_I0"] == d["rank_ftilde"] == d["rank_joint"] == 6
        return ok, d

    timed(rep, "YJ_squares", "quadratic parts (YJYJ)_ac = (B^2)_ac span the I0 generators", squares, timeout)

    def invariance():
        bad = invariance_check(50, seed)
        return bad == 0, {"samples": 50, "violations": bad}

    timed(rep, "SL2_invariance", "X, Y, T are invariant under simultaneous SL2 conjugation", invariance, timeout)
    return rep
