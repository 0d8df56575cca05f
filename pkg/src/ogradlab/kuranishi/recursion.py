"""Order-by-order construction of the Kuranishi data ``(gamma, f)`` of a DG algebra.

Maps on ``H^1`` are vectors of polynomials in coordinates ``u1 .. uh``:
``gamma`` takes values in ``g^1``, ``f`` in ``H^2``.  At order ``n`` the
truncated defect ``x = (d + gamma)^2 - s(f)`` is reduced, coefficientwise,
modulo ``W_n = trunc_n(a m)`` where ``a`` is generated by the components of
``f``.  Reduction walks terms from the lowest degree upward, so the
remainder lies in a fixed monomial complement of ``W_n``; that complement is
the graded section used to pick ``z``.
"""

import heapq
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from ..exactalg import PolyRing, QQ
from ..exactalg.poly import Polynomial
from .dga import TOP, cohomology


class SectionInconsistency(ArithmeticError):
    """The reduced defect kept terms below the current order."""


@dataclass
class KuranishiOutput:
    ring: PolyRing
    degree: int
    gamma: dict  # n -> list of homogeneous g^1 components
    f: dict  # n -> list of homogeneous H^2 components
    defect: list = field(default_factory=list)  # truncated (d + gamma)^2 - s(f) in g^2

    def gamma_total(self):
        return _sum_maps(self.gamma.values(), self.ring)

    def f_total(self):
        return _sum_maps(self.f.values(), self.ring, length=len(next(iter(self.f.values()), [])))

    def term_counts(self):
        return {
            "gamma": {str(n): sum(len(p) for p in v) for n, v in sorted(self.gamma.items())},
            "f": {str(n): sum(len(p) for p in v) for n, v in sorted(self.f.items())},
        }


def _sum_maps(maps, ring, length=None):
    maps = list(maps)
    if not maps:
        return [ring.zero()] * (length or 0)
    out = list(maps[0])
    for m in maps[1:]:
        out = [a + b for a, b in zip(out, m)]
    return out


def coordinate_ring(h1):
    return PolyRing([f"u{a + 1}" for a in range(h1)]) if h1 else PolyRing(["u0"])


def mul_trunc(p, q, max_degree):
    """``p * q`` with every term above ``max_degree`` dropped."""
    if not p or not q:
        return p.ring.zero()
    qt = [(e, sum(e), c) for e, c in q.items()]
    out = {}
    for e1, c1 in p.items():
        d1 = sum(e1)
        for e2, d2, c2 in qt:
            if d1 + d2 > max_degree:
                continue
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e)
            out[e] = c1 * c2 if v is None else v + c1 * c2
    return Polynomial(p.ring, {e: c for e, c in out.items() if c}, True)


def apply_matrix(M, vec, ring):
    """``M @ vec`` for a dense rational matrix and a vector of polynomials."""
    out = []
    for row in M:
        acc = {}
        for c, p in zip(row, vec):
            if c and p:
                for e, v in p.items():
                    w = acc.get(e)
                    acc[e] = c * v if w is None else w + c * v
        out.append(Polynomial(ring, {e: v for e, v in acc.items() if v}, True))
    return out


def square(g, gamma, ring, max_degree):
    """``gamma . gamma`` in ``g^2`` for ``gamma`` in ``g^1``, truncated."""
    out = [ring.zero()] * g.dims[2]
    cache = {}
    for (i, j, v) in g.products_in(1, 1):
        if not gamma[i] or not gamma[j]:
            continue
        key = (i, j)
        prod = cache.get(key)
        if prod is None:
            prod = mul_trunc(gamma[i], gamma[j], max_degree)
            cache[key] = prod
        for l, c in v.items():
            out[l] = out[l] + prod * c
    return out


def cross(g, a, b, ring, max_degree):
    """``a . b`` for two ``g^1``-valued maps, truncated."""
    out = [ring.zero()] * g.dims[2]
    for (i, j, v) in g.products_in(1, 1):
        if not a[i] or not b[j]:
            continue
        prod = mul_trunc(a[i], b[j], max_degree)
        for l, c in v.items():
            out[l] = out[l] + prod * c
    return out


def homogeneous(p, n):
    return p.homogeneous_component(n)


class LowOrderReducer:
    """Echelon basis of a space of polynomials with pivots at their lowest term.

    Terms are ordered by (total degree, ring key) ascending; ``reduce``
    returns the canonical representative in the monomial complement.
    """

    def __init__(self, ring):
        self.ring = ring
        self.rows = {}  # pivot exps -> normalized row dict

    def _order(self, e):
        return (sum(e),) + self.ring.key(e)

    def _reduce_dict(self, f):
        f = dict(f)
        heap = [(self._order(e), e) for e in f]
        heapq.heapify(heap)
        while heap:
            _, e = heapq.heappop(heap)
            c = f.get(e)
            if not c:
                continue
            row = self.rows.get(e)
            if row is None:
                continue
            for e2, v in row.items():
                w = f.get(e2)
                if w is None:
                    f[e2] = -c * v
                    heapq.heappush(heap, (self._order(e2), e2))
                else:
                    w = w - c * v
                    if w:
                        f[e2] = w
                    else:
                        del f[e2]
        return f

    def add(self, p):
        f = self._reduce_dict(dict(p.items()))
        if not f:
            return False
        piv = min(f, key=self._order)
        inv = 1 / f[piv]
        self.rows[piv] = {e: v * inv for e, v in f.items()}
        return True

    def reduce(self, p):
        return Polynomial(self.ring, self._reduce_dict(dict(p.items())), True)

    def __len__(self):
        return len(self.rows)


def ideal_truncation(f_components, ring, n):
    """Reducer for ``trunc_n(a m)``: monomial multiples (degree >= 1) of each component of ``f``."""
    red = LowOrderReducer(ring)
    nv = ring.nvars
    for fb in f_components:
        if not fb:
            continue
        order = min(sum(e) for e, _ in fb.items())
        for dm in range(1, n - order + 1):
            for combo in combinations_with_replacement(range(nv), dm):
                e = [0] * nv
                for i in combo:
                    e[i] += 1
                red.add(fb.mul_term(tuple(e), QQ(1)).truncate(n))
    return red


def kuranishi_recursion(g, sp=None, N=4, check_cocycles=True):
    """Truncated Kuranishi data of ``g`` through order ``N``.

    ``gamma_1 = s(u)`` is the tautological cocycle.  For ``n >= 2``:
    ``x = trunc_n((d + gamma_{<n})^2 - s(f_{<n}))``, ``z`` its reduction
    modulo ``trunc_n(a m)`` (must be homogeneous of degree ``n``),
    ``f_n = pi(z)`` and ``gamma_n = t(s(f_n) - z)``.
    """
    if N < 2:
        raise ValueError("degree must be at least 2")
    sp = sp or cohomology(g)
    h1, h2 = sp.h[1], sp.h[2]
    ring = coordinate_ring(h1)
    n1, n2 = g.dims[1], g.dims[2]
    u = ring.gens if h1 else []
    gamma1 = [ring.zero()] * n1
    for i in range(n1):
        acc = ring.zero()
        for a in range(h1):
            c = sp.s[1][i][a]
            if c:
                acc = acc + u[a] * c
        gamma1[i] = acc
    gamma = {1: gamma1}
    f = {}
    # running truncated defect D = d(gamma) + gamma^2 - s(f), kept through degree N
    defect = apply_matrix(g.d[1], gamma1, ring)
    defect = [a + b for a, b in zip(defect, square(g, gamma1, ring, N))]
    total = list(gamma1)
    for n in range(2, N + 1):
        x = [p.truncate(n) for p in defect]
        f_lower = _sum_maps(f.values(), ring, length=h2) if f else [ring.zero()] * h2
        red = ideal_truncation(f_lower, ring, n)
        z = [red.reduce(p) for p in x]
        for p in z:
            if any(sum(e) != n for e, _ in p.items()):
                raise SectionInconsistency(f"order {n}: reduced defect has terms of other degrees")
        if check_cocycles and TOP > 2 and g.dims[3]:
            dz = apply_matrix(g.d[2], z, ring)
            if any(dz):
                raise SectionInconsistency(f"order {n}: z is not a cocycle")
        fn = apply_matrix(sp.pi[2], z, ring) if h2 else []
        sfn = apply_matrix(sp.s[2], fn, ring) if h2 else [ring.zero()] * n2
        exact = [a - b for a, b in zip(sfn, z)]
        gn = apply_matrix(sp.t[2], exact, ring) if n1 else []
        if check_cocycles and any(a != b for a, b in zip(apply_matrix(g.d[1], gn, ring), exact)):
            raise SectionInconsistency(f"order {n}: s(f_n) - z is not a coboundary")
        gamma[n] = gn
        f[n] = fn
        # D += d(gamma_n) - s(f_n) + gamma_n total + total gamma_n + gamma_n gamma_n
        upd = apply_matrix(g.d[1], gn, ring)
        upd = [a - b for a, b in zip(upd, sfn)]
        if any(gn):
            c1 = cross(g, gn, total, ring, N)
            c2 = cross(g, total, gn, ring, N)
            c3 = cross(g, gn, gn, ring, N)
            upd = [a + b + c + e for a, b, c, e in zip(upd, c1, c2, c3)]
        defect = [a + b for a, b in zip(defect, upd)]
        total = [a + b for a, b in zip(total, gn)]
    return KuranishiOutput(ring, N, gamma, f, defect)


def full_defect(g, sp, out, max_degree=None):
    """``d(gamma) + gamma^2 - s(f)`` recomputed from scratch, truncated at ``max_degree``."""
    ring = out.ring
    N = max_degree if max_degree is not None else out.degree
    gam = out.gamma_total()
    fsum = _sum_maps(out.f.values(), ring, length=sp.h[2]) if out.f else [ring.zero()] * sp.h[2]
    dg = apply_matrix(g.d[1], gam, ring)
    sq = square(g, gam, ring, N)
    sf = apply_matrix(sp.s[2], fsum, ring) if sp.h[2] else [ring.zero()] * g.dims[2]
    return [(a + b - c).truncate(N) for a, b, c in zip(dg, sq, sf)]


def verify_mc_defect(g, sp, out):
    """Whether the recomputed defect lies in ``g^2 (x) (a m + m^(N+1))``; returns (ok, residuals)."""
    ring = out.ring
    N = out.degree
    D = full_defect(g, sp, out, N)
    fsum = _sum_maps(out.f.values(), ring, length=sp.h[2]) if out.f else []
    red = ideal_truncation(fsum, ring, N)
    residual = [red.reduce(p) for p in D]
    return not any(residual), residual


def cup_product_map(g, sp, ring):
    """``e -> pi(s(e) s(e))`` as ``H^2``-valued quadratic polynomials."""
    h1, h2 = sp.h[1], sp.h[2]
    u = ring.gens if h1 else []
    out = [ring.zero()] * h2
    for a in range(h1):
        for b in range(h1):
            sa = {i: sp.s[1][i][a] for i in range(g.dims[1]) if sp.s[1][i][a]}
            sb = {i: sp.s[1][i][b] for i in range(g.dims[1]) if sp.s[1][i][b]}
            prod = g.multiply(1, sa, 1, sb)
            for k in range(h2):
                c = sum((sp.pi[2][k][l] * v for l, v in prod.items()), QQ(0))
                if c:
                    out[k] = out[k] + u[a] * u[b] * c
    return out
