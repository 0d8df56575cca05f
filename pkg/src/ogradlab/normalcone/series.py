"""Weighted series in ``Q[x][t]``, truncated by ``x``-degree.

An element of weight ``k`` has its ``t^m`` coefficient homogeneous of degree
``k + m``.  Such an element is determined by its value at ``t = 1``: the
``t^m`` coefficient is the degree ``k + m`` part.  Products and substitutions
of weighted maps commute with ``t = 1``, which is how the engine computes;
:meth:`WeightedSeries.to_xt` gives the literal two-variable expansion used as
an independent route in verification.
"""

from dataclasses import dataclass, field

from ..exactalg import PolyRing, QQ
from ..exactalg.poly import Polynomial


class WeightError(ValueError):
    """A coefficient is not homogeneous of the degree its weight demands."""


def _buckets(p, degree):
    out = {}
    for e, c in p.items():
        out.setdefault(degree(e), []).append((e, c))
    return out


def mul_trunc(p, q, N, degree=sum):
    """``p * q`` keeping terms whose ``degree(exps) <= N``."""
    if not p or not q:
        return p.ring.zero()
    pb, qb = _buckets(p, degree), _buckets(q, degree)
    out = {}
    for d1, pterms in pb.items():
        for d2, qterms in qb.items():
            if d1 + d2 > N:
                continue
            for e1, c1 in pterms:
                for e2, c2 in qterms:
                    e = tuple(a + b for a, b in zip(e1, e2))
                    v = out.get(e)
                    out[e] = c1 * c2 if v is None else v + c1 * c2
    return Polynomial(p.ring, {e: c for e, c in out.items() if c}, True)


def mul_degree(p, q, d):
    """Degree-``d`` part of ``p * q``."""
    pb, qb = _buckets(p, sum), _buckets(q, sum)
    out = {}
    for d1, pterms in pb.items():
        qterms = qb.get(d - d1, ())
        for e1, c1 in pterms:
            for e2, c2 in qterms:
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
    return Polynomial(p.ring, {e: c for e, c in out.items() if c}, True)


def truncate_by(p, N, degree=sum):
    return Polynomial(p.ring, {e: c for e, c in p.items() if degree(e) <= N}, True)


def compose_trunc(p, images, N, degree=sum, target=None):
    """``p(images)`` with every intermediate product truncated at ``degree <= N``.

    Each image must have no constant term for the truncation to be exact.
    """
    ring = target or (images[0].ring if images else p.ring)
    powers = [{0: ring.one(), 1: truncate_by(im, N, degree)} for im in images]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            half = power(i, k // 2)
            sq = mul_trunc(half, half, N, degree)
            cache[k] = mul_trunc(sq, cache[1], N, degree) if k % 2 else sq
        return cache[k]

    acc = {}
    for e, c in p.items():
        term = None
        for i, k in enumerate(e):
            if not k:
                continue
            pk = power(i, k)
            term = pk if term is None else mul_trunc(term, pk, N, degree)
            if not term:
                break
        if term is None:
            term = ring.one()
        for e2, v in term.items():
            w = acc.get(e2)
            acc[e2] = c * v if w is None else w + c * v
    return Polynomial(ring, {e: v for e, v in acc.items() if v}, True)


@dataclass
class WeightedSeries:
    ring: PolyRing
    weight: int
    coeffs: dict = field(default_factory=dict)  # m -> homogeneous Polynomial of degree weight + m
    bound: int = 0

    def __post_init__(self):
        self.coeffs = {m: p for m, p in self.coeffs.items() if p and self.weight + m <= self.bound}

    def check(self):
        for m, p in self.coeffs.items():
            if m < 0 or self.weight + m < 0:
                raise WeightError(f"weight {self.weight}: bad t-exponent {m}")
            if any(sum(e) != self.weight + m for e, _ in p.items()):
                raise WeightError(f"weight {self.weight}: t^{m} coefficient is not of degree {self.weight + m}")
        return True

    @classmethod
    def zero(cls, ring, weight, bound):
        return cls(ring, weight, {}, bound)

    @classmethod
    def from_specialization(cls, p, weight, bound):
        """The unique weight-``weight`` series whose value at ``t = 1`` is ``p`` (truncated)."""
        coeffs = {}
        for e, c in p.items():
            d = sum(e)
            if d > bound:
                continue
            m = d - weight
            if m < 0:
                raise WeightError(f"degree {d} term cannot carry weight {weight}")
            coeffs.setdefault(m, {})[e] = c
        return cls(p.ring, weight, {m: Polynomial(p.ring, t, True) for m, t in coeffs.items()}, bound)

    def at_one(self):
        acc = {}
        for p in self.coeffs.values():
            acc.update(p.items())
        return Polynomial(self.ring, acc, True)

    def at_zero(self):
        return self.coeffs.get(0, self.ring.zero())

    def coefficient(self, m):
        return self.coeffs.get(m, self.ring.zero())

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return self.weight == other.weight and self.coeffs == other.coeffs

    def _same(self, other):
        if self.weight != other.weight:
            raise WeightError(f"cannot add weights {self.weight} and {other.weight}")

    def __add__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for m, p in other.coeffs.items():
            out[m] = out[m] + p if m in out else p
        return WeightedSeries(self.ring, self.weight, out, min(self.bound, other.bound))

    def __neg__(self):
        return WeightedSeries(self.ring, self.weight, {m: -p for m, p in self.coeffs.items()}, self.bound)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return WeightedSeries(self.ring, self.weight, {m: p * c for m, p in self.coeffs.items()}, self.bound)

    def __mul__(self, other):
        if not isinstance(other, WeightedSeries):
            return self.scale(other)
        N = min(self.bound, other.bound)
        prod = mul_trunc(self.at_one(), other.at_one(), N)
        return WeightedSeries.from_specialization(prod, self.weight + other.weight, N)

    def diff_x(self, i):
        """``d/dx_i``: weight drops by one."""
        name = self.ring.names[i]
        return WeightedSeries(self.ring, self.weight - 1, {m: p.diff(name) for m, p in self.coeffs.items()}, self.bound)

    def diff_t(self):
        """``d/dt``: weight rises by one."""
        out = {m - 1: p * QQ(m) for m, p in self.coeffs.items() if m > 0}
        return WeightedSeries(self.ring, self.weight + 1, out, self.bound)

    def compose(self, images):
        """``self(images(x, t), t)`` for weight-one images, truncated at the common bound."""
        for im in images:
            if im.weight != 1:
                raise WeightError("substituted series must have weight 1")
        N = min([self.bound] + [im.bound for im in images])
        p = compose_trunc(self.at_one(), [im.at_one() for im in images], N, target=self.ring)
        return WeightedSeries.from_specialization(p, self.weight, N)

    # -- the literal (x, t) expansion ----------------------------------------

    def to_xt(self, xt_ring):
        """As a polynomial in ``xt_ring`` (the ``x`` variables followed by ``t``)."""
        out = {}
        for m, p in self.coeffs.items():
            for e, c in p.items():
                out[e + (m,)] = c
        return Polynomial(xt_ring, out, True)

    @classmethod
    def from_xt(cls, q, ring, weight, bound):
        coeffs = {}
        for e, c in q.items():
            x, m = e[:-1], e[-1]
            if sum(x) > bound:
                continue
            if sum(x) != weight + m:
                raise WeightError(f"term of x-degree {sum(x)} at t^{m} has weight {sum(x) - m}, expected {weight}")
            coeffs.setdefault(m, {})[x] = c
        return cls(ring, weight, {m: Polynomial(ring, t, True) for m, t in coeffs.items()}, bound)

    def to_text(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs):
            body = self.coeffs[m].to_text()
            parts.append(f"({body})" if m == 0 else f"t^{m}*({body})")
        return " + ".join(parts)


def xt_ring(ring, tname="t"):
    return PolyRing(list(ring.names) + [tname])


def x_degree(e):
    return sum(e[:-1])


def series_of_components(ring, parts, bound):
    """Weight-2 series ``F = f_2 + t f_3 + t^2 f_4 + ...`` from ``{k: f_k}``."""
    return WeightedSeries(ring, 2, {k - 2: p for k, p in parts.items()}, bound)
