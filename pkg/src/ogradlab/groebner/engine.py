"""Buchberger core shared by ideals and submodules of free modules.

Elements are dicts ``{(pos, exps): coeff}``; an ideal is a submodule of the
rank-one free module (``pos`` always 0).  Module terms are ordered
term-over-position: the ring order decides first and a smaller position
index wins ties.  Passing ``split`` puts every position below ``split``
above every position at or after it (position-over-term between the two
blocks), which is what syzygy and lift computations eliminate with.
"""

import heapq
from operator import add, sub

from ..exactalg.scalar import QQ


class TermOrder:
    def __init__(self, ring, split=None):
        self.ring = ring
        self.split = split
        self._cache = {}
        rk = ring.key
        if split is None:

            def key(t):
                return rk(t[1]) + (-t[0],)

        else:

            def key(t):
                return (int(t[0] < split),) + rk(t[1]) + (-t[0],)

        self._raw = key

    def key(self, t):
        k = self._cache.get(t)
        if k is None:
            k = self._raw(t)
            self._cache[t] = k
        return k

    def negkey(self, t):
        return tuple(-v for v in self.key(t))

    def lead(self, f):
        t = max(f, key=self.key)
        return t, f[t]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(map(max, a, b))


class _Elem:
    __slots__ = ("poly", "pos", "lm", "lc", "sugar", "deg")

    def __init__(self, poly, order, sugar):
        (self.pos, self.lm), self.lc = order.lead(poly)
        self.poly = poly
        self.sugar = sugar
        self.deg = sum(self.lm)


def poly_degree(f):
    return max(sum(e) for _, e in f) if f else -1


def scale(f, c):
    return {t: c * v for t, v in f.items()}


def add_multiple(f, g, c, mono):
    """``f += c * x^mono * g`` in place."""
    for (p, e), v in g.items():
        t = (p, tuple(map(add, e, mono)))
        w = f.get(t)
        if w is None:
            f[t] = c * v
        else:
            w += c * v
            if w:
                f[t] = w
            else:
                del f[t]


def reduce_full(f, basis, order, tail=True):
    """Normal form of ``f`` modulo ``basis`` (list of ``_Elem``).

    With ``tail=False`` only the leading term is reduced (top reduction).
    """
    f = dict(f)
    rem = {}
    heap = [(order.negkey(t), t) for t in f]
    heapq.heapify(heap)
    by_pos = {}
    for g in basis:
        by_pos.setdefault(g.pos, []).append(g)
    while heap:
        _, t = heapq.heappop(heap)
        c = f.get(t)
        if c is None:
            continue
        pos, e = t
        for g in by_pos.get(pos, ()):
            if _divides(g.lm, e):
                mono = tuple(map(sub, e, g.lm))
                fac = -c / g.lc
                for (p, ge), v in g.poly.items():
                    s = (p, tuple(map(add, ge, mono)))
                    w = f.get(s)
                    if w is None:
                        f[s] = fac * v
                        heapq.heappush(heap, (order.negkey(s), s))
                    else:
                        w += fac * v
                        if w:
                            f[s] = w
                        else:
                            del f[s]
                break
        else:
            rem[t] = f.pop(t)
            if not tail:
                rem.update(f)
                return rem
    return rem


def spoly(a, b):
    lcm = _lcm(a.lm, b.lm)
    ma = tuple(map(sub, lcm, a.lm))
    mb = tuple(map(sub, lcm, b.lm))
    out = {}
    add_multiple(out, a.poly, 1 / a.lc, ma)
    add_multiple(out, b.poly, -1 / b.lc, mb)
    return out


def _pair_sugar(a, b, lcm):
    d = sum(lcm)
    return max(a.sugar + d - a.deg, b.sugar + d - b.deg)


def buchberger(gens, order, is_ideal, degree_bound=None):
    """Reduced Groebner basis of the submodule generated by ``gens``.

    ``gens`` are element dicts. ``degree_bound`` truncates the computation
    for homogeneous input (pairs whose lcm exceeds the bound are skipped).
    Returns a list of monic element dicts sorted by decreasing leading term.
    """
    G = []  # every element ever added; pairs may refer to inactive ones
    active = set()
    pairs = []  # heap of (sugar, lcm key, counter, i, j, lcm)
    counter = 0

    def update(h_idx):
        nonlocal counter, pairs
        h = G[h_idx]
        cand = []
        for i in sorted(active):
            g = G[i]
            if g.pos == h.pos:
                cand.append((i, _lcm(g.lm, h.lm)))
        # Gebauer-Moeller: drop (h, g1) when another (h, g2) has an lcm dividing it
        kept = []
        for k, (i, lcm) in enumerate(cand):
            if is_ideal and all(x == 0 or y == 0 for x, y in zip(G[i].lm, h.lm)):
                kept.append((i, lcm, True))
                continue
            dominated = False
            for k2, (i2, lcm2) in enumerate(cand):
                if k2 != k and _divides(lcm2, lcm) and (lcm2 != lcm or k2 < k):
                    dominated = True
                    break
            if not dominated:
                kept.append((i, lcm, False))
        # old pairs (g1, g2) go when lm(h) | lcm(g1, g2) and both new lcms differ
        fresh = []
        for item in pairs:
            i, j, lcm = item[3], item[4], item[5]
            gi, gj = G[i], G[j]
            if (
                gi.pos == h.pos
                and _divides(h.lm, lcm)
                and _lcm(gi.lm, h.lm) != lcm
                and _lcm(gj.lm, h.lm) != lcm
            ):
                continue
            fresh.append(item)
        pairs = fresh
        heapq.heapify(pairs)
        for i, lcm, coprime in kept:
            if coprime:
                continue
            if degree_bound is not None and sum(lcm) > degree_bound:
                continue
            counter += 1
            heapq.heappush(
                pairs,
                (_pair_sugar(G[i], h, lcm), order.key((h.pos, lcm)), counter, i, h_idx, lcm),
            )
        for i in list(active):
            g = G[i]
            if g.pos == h.pos and _divides(h.lm, g.lm):
                active.discard(i)
        active.add(h_idx)

    def add_element(f, sugar):
        lead, lc = order.lead(f)
        G.append(_Elem(scale(f, 1 / lc), order, sugar))
        update(len(G) - 1)

    for f in sorted((g for g in gens if g), key=lambda g: order.key(order.lead(g)[0])):
        r = reduce_full(f, [G[i] for i in active], order)
        if r:
            add_element(r, poly_degree(f))

    while pairs:
        sug, _, _, i, j, lcm = heapq.heappop(pairs)
        s = spoly(G[i], G[j])
        r = reduce_full(s, [G[k] for k in sorted(active)], order)
        if r:
            add_element(r, sug)

    return interreduce([G[i].poly for i in sorted(active)], order)


def interreduce(polys, order):
    """Reduced basis from a Groebner basis: minimal leading terms, reduced tails, monic."""
    elems = [_Elem(scale(p, 1 / order.lead(p)[1]), order, 0) for p in polys if p]
    minimal = []
    for i, a in enumerate(elems):
        dup = False
        for j, b in enumerate(elems):
            if i == j or a.pos != b.pos:
                continue
            if _divides(b.lm, a.lm) and (b.lm != a.lm or j < i):
                dup = True
                break
        if not dup:
            minimal.append(a)
    out = []
    for k, a in enumerate(minimal):
        others = [b for m, b in enumerate(minimal) if m != k]
        r = reduce_full(a.poly, others, order)
        lead, lc = order.lead(r)
        out.append(scale(r, 1 / lc))
    out.sort(key=lambda f: order.key(order.lead(f)[0]), reverse=True)
    return out


def make_elems(polys, order):
    return [_Elem(p, order, poly_degree(p)) for p in polys if p]


def all_spolys_reduce(polys, order):
    """Independent Buchberger-criterion check: every S-pair reduces to zero."""
    elems = make_elems(polys, order)
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            a, b = elems[i], elems[j]
            if a.pos != b.pos:
                continue
            if reduce_full(spoly(a, b), elems, order):
                return False
    return True


def to_elem(poly, pos=0):
    return {(pos, e): c for e, c in poly._terms.items()}


def vector_to_elem(entries):
    out = {}
    for pos, p in enumerate(entries):
        for e, c in p._terms.items():
            out[(pos, e)] = c
    return out


def elem_to_poly(f, ring):
    from ..exactalg.poly import Polynomial

    return Polynomial(ring, {e: c for (_, e), c in f.items()}, True)


def elem_to_vector(f, ring, rank):
    from ..exactalg.poly import Polynomial

    parts = [dict() for _ in range(rank)]
    for (p, e), c in f.items():
        parts[p][e] = c
    return [Polynomial(ring, t, True) for t in parts]


__all__ = [
    "QQ",
    "TermOrder",
    "all_spolys_reduce",
    "buchberger",
    "elem_to_poly",
    "elem_to_vector",
    "interreduce",
    "make_elems",
    "reduce_full",
    "spoly",
    "to_elem",
    "vector_to_elem",
]
