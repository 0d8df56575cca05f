"""Trivializing the deformation to the normal cone of a system of power series.

For ``f_a = f_a2 + f_a3 + ...`` put ``F_a(x, t) = f_a2 + t f_a3 + t^2 f_a4 + ...``.
The engine finds weighted ``Phi`` (weight 2) and ``h`` (weight 1) with

    sum_i Phi_i dF_a/dx_i = dF_a/dt + sum_b h_ab F_b,

integrates ``dPsi/dt = -Phi(Psi, t)``, ``Psi(x, 0) = x`` and
``dM/dt = sum_i Phi_i dM/dx_i - h M``, ``M(x, 0) = Id``, and checks
``F(Psi(x, t), t) = M(Psi(x, t), t) f_2(x)``.  Everything is exact and
truncated at ``x``-degree ``N``.
"""

import heapq
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from ..exactalg import InconsistentSystem, QQ, sparse_solve
from ..exactalg.poly import Polynomial
from .series import WeightedSeries, compose_trunc, mul_degree, mul_trunc, series_of_components, x_degree, xt_ring


class NotTangentToIdentity(ValueError):
    """A substitution germ whose linear part is not the identity."""


def monomials(nvars, d):
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


@dataclass
class DeformationSystem:
    ring: object
    f: list

    def __post_init__(self):
        for k, p in enumerate(self.f):
            if not p:
                raise ValueError(f"f[{k}] is zero")
            low = min(sum(e) for e, _ in p.items())
            if low != 2:
                raise ValueError(f"f[{k}] has initial degree {low}, expected 2")

    @property
    def max_degree(self):
        return max(p.total_degree() for p in self.f)

    def parts(self, a):
        p = self.f[a]
        return {d: p.homogeneous_component(d) for d in range(2, p.total_degree() + 1)}

    def initial_forms(self):
        return [p.homogeneous_component(2) for p in self.f]

    def F(self, N):
        """The weight-2 series ``F_a(x, t)``, truncated at ``x``-degree ``N``."""
        return [series_of_components(self.ring, self.parts(a), N) for a in range(len(self.f))]


@dataclass
class Obstruction:
    degree: int  # x-degree of the graded piece of the equation that has no solution
    level: int  # t-exponent of that piece
    residual: list  # per generator, for the lower-level solution found
    rank: int
    unknowns: int
    equations: int

    def to_dict(self):
        return {
            "degree": self.degree,
            "t_exponent": self.level,
            "residual": [p.to_text() for p in self.residual],
            "residual_terms": sum(len(p) for p in self.residual),
            "rank": self.rank,
            "unknowns": self.unknowns,
            "equations": self.equations,
        }


@dataclass
class PhiH:
    phi: list  # weight-2 series, one per variable
    h: list  # weight-1 series, square matrix
    degree: int
    levels: list = field(default_factory=list)  # per graded piece: dimensions and ranks


@dataclass
class SolveResult:
    ok: bool
    solution: PhiH = None
    obstruction: Obstruction = None
    levels: list = field(default_factory=list)


class _Unknowns:
    """Column indices for the coefficients of ``h`` and ``Phi`` at a given ``t``-level.

    The ``h`` columns come first so that ties in pivot selection resolve
    towards ``h``, leaving the free ``Phi`` coefficients at zero.
    """

    def __init__(self, nvars, ngens):
        self.nvars, self.ngens = nvars, ngens
        self.index = {}
        self.keys = []

    def add_level(self, a):
        for al in range(self.ngens):
            for be in range(self.ngens):
                for mono in monomials(self.nvars, a + 1):
                    self._add(("h", a, al, be, mono))
        for i in range(self.nvars):
            for mono in monomials(self.nvars, a + 2):
                self._add(("phi", a, i, mono))

    def _add(self, key):
        self.index[key] = len(self.keys)
        self.keys.append(key)


def _level_rows(sys_parts, dparts, ring, a, m_max, unknowns):
    """Equation contributions of the level-``a`` unknowns, as ``{(m, alpha, mono): {col: coeff}}``."""
    contrib = {}
    k = len(sys_parts)
    for key in unknowns.keys:
        if key[1] != a:
            continue
        col = unknowns.index[key]
        for b in range(0, m_max - a + 1):
            if key[0] == "phi":
                _, _, i, mono = key
                for al in range(k):
                    dp = dparts[al][i].get(b + 1)
                    if dp:
                        for e, c in dp.items():
                            row = (a + b, al, tuple(x + y for x, y in zip(mono, e)))
                            r = contrib.setdefault(row, {})
                            r[col] = r.get(col, 0) + c
            else:
                _, _, al, be, mono = key
                fp = sys_parts[be].get(b + 2)
                if fp:
                    for e, c in fp.items():
                        row = (a + b, al, tuple(x + y for x, y in zip(mono, e)))
                        r = contrib.setdefault(row, {})
                        r[col] = r.get(col, 0) - c
    return contrib


def solve_phi_h(system, N):
    """Weighted ``(Phi, h)`` solving the flow equation through ``x``-degree ``N``, or an obstruction.

    The unknowns at ``t``-level ``a`` are the coefficients of ``Phi`` in degree
    ``a + 2`` and of ``h`` in degree ``a + 1``; the equation at ``t``-level
    ``m`` lives in degree ``m + 3``.  The system is block triangular in the
    level; it is solved jointly over all levels ``<= m`` for growing ``m`` so
    that a failure pins down the first graded piece without a solution.
    """
    if N < 2:
        raise ValueError("degree must be at least 2")
    ring = system.ring
    n, k = ring.nvars, len(system.f)
    parts = [system.parts(a) for a in range(k)]
    dparts = [[{d - 1: p.diff(v) for d, p in pa.items() if p.diff(v)} for v in ring.names] for pa in parts]
    top = N - 3  # highest t-level of the equation inside degree <= N
    unknowns = _Unknowns(n, k)
    rows, rhs = {}, {}
    levels = []
    solution = {}
    for m in range(0, top + 1):
        unknowns.add_level(m)
        # contributions of all levels <= m to equations at level m, and of level m to nothing lower
        for a in range(m + 1):
            for row, cols in _level_rows(parts, dparts, ring, a, m, unknowns).items():
                if row[0] != m:
                    continue
                r = rows.setdefault(row, {})
                for c, v in cols.items():
                    r[c] = r.get(c, 0) + v
        # right-hand side (m + 1) f_(a, m + 3) on every monomial of degree m + 3
        for al in range(k):
            fp = parts[al].get(m + 3)
            if fp:
                for e, c in fp.items():
                    rhs[(m, al, e)] = c * (m + 1)
        for row in list(rhs):
            rows.setdefault(row, {})
        keys = sorted(rows)
        info = {}
        stats = {
            "degree": m + 3,
            "t_exponent": m,
            "unknowns": len(unknowns.keys),
            "equations": sum(1 for r in keys if r[0] == m),
        }
        try:
            solution = sparse_solve([rows[r] for r in keys], [rhs.get(r, 0) for r in keys], info=info)
        except InconsistentSystem:
            stats["rank"] = None
            stats["solvable"] = False
            levels.append(stats)
            residual = _residual_at_level(parts, dparts, ring, solution, unknowns, m)
            obs = Obstruction(m + 3, m, residual, _rank_of(rows, keys), len(unknowns.keys), len(keys))
            return SolveResult(False, None, obs, levels)
        stats["rank"] = info["rank"]
        stats["solvable"] = True
        levels.append(stats)
    phi, h = _assemble(ring, k, unknowns, solution, N)
    return SolveResult(True, PhiH(phi, h, N, levels), None, levels)


def _rank_of(rows, keys):
    info = {}
    try:
        sparse_solve([rows[r] for r in keys], [0] * len(keys), info=info)
    except InconsistentSystem:  # homogeneous systems are always consistent
        return None
    return info["rank"]


def _residual_at_level(parts, dparts, ring, lower, unknowns, m):
    """``(m + 1) f_(m+3) - (lower-level terms)`` reduced modulo the image of the level-``m`` unknowns."""
    k = len(parts)
    lower_only = {c: v for c, v in lower.items() if unknowns.keys[c][1] < m}
    target = {}
    for al in range(k):
        fp = parts[al].get(m + 3)
        if fp:
            for e, c in fp.items():
                target[(al, e)] = c * (m + 1)
    for a in range(m):
        for row, cols in _level_rows(parts, dparts, ring, a, m, unknowns).items():
            if row[0] != m:
                continue
            s = sum((v * lower_only.get(c, 0) for c, v in cols.items()), QQ(0))
            if s:
                key = (row[1], row[2])
                target[key] = target.get(key, 0) - s
                if not target[key]:
                    del target[key]
    image = _level_rows(parts, dparts, ring, m, m, unknowns)
    columns = {}
    for row, cols in image.items():
        if row[0] != m:
            continue
        for c, v in cols.items():
            if v:
                columns.setdefault(c, {})[(row[1], row[2])] = v
    red = _Echelon()
    for c in sorted(columns):
        red.add(columns[c])
    rem = red.reduce(target)
    out = [dict() for _ in range(k)]
    for (al, e), v in rem.items():
        out[al][e] = v
    return [Polynomial(ring, t, True) for t in out]


class _Echelon:
    """Echelon basis of sparse vectors keyed by sortable labels; pivots at the smallest key."""

    def __init__(self):
        self.rows = {}

    def reduce(self, vec):
        vec = {key: v for key, v in vec.items() if v}
        heap = list(vec)
        heapq.heapify(heap)
        while heap:
            piv = heapq.heappop(heap)
            c = vec.get(piv)
            row = self.rows.get(piv)
            if not c or row is None:
                continue
            for key, v in row.items():
                w = vec.get(key)
                if w is None:
                    vec[key] = -c * v
                    heapq.heappush(heap, key)
                else:
                    w = w - c * v
                    if w:
                        vec[key] = w
                    else:
                        del vec[key]
        return vec

    def add(self, vec):
        vec = self.reduce(vec)
        if not vec:
            return False
        piv = min(vec)
        inv = 1 / vec[piv]
        self.rows[piv] = {key: v * inv for key, v in vec.items()}
        return True


def _assemble(ring, k, unknowns, solution, N):
    n = ring.nvars
    phi_terms = [dict() for _ in range(n)]
    h_terms = [[dict() for _ in range(k)] for _ in range(k)]
    for col, val in solution.items():
        key = unknowns.keys[col]
        if key[0] == "phi":
            _, a, i, mono = key
            phi_terms[i].setdefault(a, {})[mono] = val
        else:
            _, a, al, be, mono = key
            h_terms[al][be].setdefault(a, {})[mono] = val

    def series(terms, weight):
        return WeightedSeries(ring, weight, {a: Polynomial(ring, t, True) for a, t in terms.items()}, N)

    phi = [series(t, 2) for t in phi_terms]
    h = [[series(h_terms[al][be], 1) for be in range(k)] for al in range(k)]
    for s in phi + [x for row in h for x in row]:
        s.check()
    return phi, h


def flow_residual(system, phi, h, N):
    """``sum_i Phi_i dF/dx_i - dF/dt - h F`` through degree ``N`` (weight 3), one per generator."""
    F = system.F(N)
    out = []
    for al, Fa in enumerate(F):
        acc = WeightedSeries.zero(system.ring, 3, N)
        for i in range(system.ring.nvars):
            acc = acc + phi[i] * Fa.diff_x(i)
        acc = acc - Fa.diff_t()
        for be, Fb in enumerate(F):
            acc = acc - h[al][be] * Fb
        acc.check()
        out.append(acc)
    return out


@dataclass
class TrivializationData:
    phi: list
    h: list
    psi: list  # weight 1, one per variable
    M: list  # weight 0, square matrix
    degree: int

    def check(self):
        ring = self.psi[0].ring if self.psi else None
        for s in self.phi:
            if s.weight != 2:
                return False
        for i, s in enumerate(self.psi):
            s.check()
            if s.weight != 1 or s.at_zero() != ring.gens[i]:
                return False
        for a, row in enumerate(self.M):
            for b, s in enumerate(row):
                s.check()
                if s.weight != 0 or s.at_zero() != (ring.one() if a == b else ring.zero()):
                    return False
        return True


def integrate_psi_M(phi, h, N, ring):
    """Degree-by-degree solution of the ``Psi`` and ``M`` flows.

    Working at ``t = 1``: a weight-``w`` series ``G`` has ``dG/dt`` equal to
    ``(d - w)`` times its degree-``d`` part, so the degree-``d`` part of
    ``Psi`` (weight 1) is ``-Phi(Psi)_d / (d - 1)`` and that of ``M``
    (weight 0) is ``(sum_i Phi_i dM/dx_i - h M)_d / d``; both right-hand
    sides only involve lower degrees.  ``M`` multiplies quadrics, so it is
    kept through degree ``N - 2``.
    """
    k = len(h)
    phi1 = [s.at_one() for s in phi]
    h1 = [[s.at_one() for s in row] for row in h]
    psi = list(ring.gens)
    for d in range(2, N + 1):
        comp = [compose_trunc(p, psi, d, target=ring).homogeneous_component(d) for p in phi1]
        psi = [p - c * QQ(1, d - 1) for p, c in zip(psi, comp)]
    M = [[ring.one() if a == b else ring.zero() for b in range(k)] for a in range(k)]
    for d in range(1, N - 1):
        new = []
        for a in range(k):
            row = []
            for b in range(k):
                acc = ring.zero()
                for i, v in enumerate(ring.names):
                    dm = M[a][b].diff(v)
                    if dm and phi1[i]:
                        acc = acc + mul_degree(phi1[i], dm, d)
                for c in range(k):
                    if h1[a][c] and M[c][b]:
                        acc = acc - mul_degree(h1[a][c], M[c][b], d)
                row.append(M[a][b] + acc * QQ(1, d))
            new.append(row)
        M = new
    psi_s = [WeightedSeries.from_specialization(p, 1, N) for p in psi]
    M_s = [[WeightedSeries.from_specialization(p, 0, N - 2) for p in row] for row in M]
    triv = TrivializationData(phi, h, psi_s, M_s, N)
    if not triv.check():
        raise ArithmeticError("weights or initial values of Psi, M are wrong")
    return triv


def verify_trivialization(system, triv, N=None):
    """``g_a = F_a(Psi, t) - sum_b M_ab(Psi, t) f_b2`` through degree ``N``, by two routes.

    The series route expands everything as polynomials in ``(x, t)`` with
    ``t`` a genuine variable; the specialized route evaluates at ``t = 1``
    and checks ``f_a(Psi(x)) = sum_b M_ab(Psi(x)) f_b2(x)``.
    """
    N = N if N is not None else triv.degree
    ring = system.ring
    R = xt_ring(ring)
    t = R.gens[-1]
    k = len(system.f)
    F = system.F(N)
    f2 = [WeightedSeries(ring, 2, {0: q}, N).to_xt(R) for q in system.initial_forms()]
    psi_xt = [s.to_xt(R) for s in triv.psi]
    images = psi_xt + [t]
    series_res = []
    for a in range(k):
        lhs = compose_trunc(F[a].to_xt(R), images, N, degree=x_degree, target=R)
        rhs = R.zero()
        for b in range(k):
            mb = compose_trunc(triv.M[a][b].to_xt(R), images, N - 2, degree=x_degree, target=R)
            rhs = rhs + mul_trunc(mb, f2[b], N, degree=x_degree)
        g = WeightedSeries.from_xt(lhs - rhs, ring, 2, N)
        series_res.append(g)
    psi1 = [s.at_one() for s in triv.psi]
    conclusion = []
    printed = []
    for a in range(k):
        lhs = compose_trunc(system.f[a], psi1, N, target=ring)
        rhs = ring.zero()
        plain = ring.zero()
        for b in range(k):
            m1 = triv.M[a][b].at_one()
            f2b = system.initial_forms()[b]
            rhs = rhs + mul_trunc(compose_trunc(m1, psi1, N - 2, target=ring), f2b, N)
            plain = plain + mul_trunc(m1, f2b, N)
        conclusion.append(lhs - rhs)
        printed.append(lhs - plain)
    first_bad = [min((sum(e) for e, _ in g.at_one().items()), default=None) for g in series_res]
    return {
        "series_residual_zero": all(g.is_zero() for g in series_res),
        "series_residual_terms": [len(g.at_one()) for g in series_res],
        "series_residual_lowest_degree": first_bad,
        "t1_identity_holds": all(not p for p in conclusion),
        "t1_identity_with_M_unsubstituted": all(not p for p in printed),
        "degree": N,
    }
