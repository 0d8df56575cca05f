"""Ideals: Groebner bases, normal forms, dimension and Hilbert functions."""

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from ..exactalg.poly import Polynomial
from . import engine


@dataclass(frozen=True)
class IdealBasis:
    """Generators of an ideal; zero generators are dropped."""

    ring: object
    generators: tuple

    def __init__(self, ring, generators):
        gens = []
        for g in generators:
            g = g if isinstance(g, Polynomial) else ring(g)
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if g:
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def to_text(self):
        return "\n".join(g.to_text() for g in self.generators)


@dataclass(frozen=True)
class HilbertData:
    dimension: int
    values: tuple = field(default_factory=tuple)


class GroebnerBasis:
    """Reduced Groebner basis of an ideal for the ring's term order."""

    def __init__(self, ring, basis):
        self.ring = ring
        self.basis = tuple(basis)
        self.order = ring.order
        self._term_order = engine.TermOrder(ring)
        self._elems = engine.make_elems([engine.to_elem(g) for g in self.basis], self._term_order)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self):
        return f"GroebnerBasis({len(self.basis)} elements, order={self.order})"

    def is_unit(self):
        return any(g.is_constant() and g for g in self.basis)

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.basis]

    def normal_form(self, p):
        if p.ring != self.ring:
            raise ValueError("ring mismatch")
        r = engine.reduce_full(engine.to_elem(p), self._elems, self._term_order)
        return engine.elem_to_poly(r, self.ring)

    def contains(self, p):
        return not self.normal_form(p)

    def contains_ideal(self, ideal):
        return all(self.contains(g) for g in ideal)

    def is_groebner(self):
        """Buchberger criterion checked from scratch on the stored basis."""
        return engine.all_spolys_reduce([engine.to_elem(g) for g in self.basis], self._term_order)

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.basis)

    def krull_dimension(self):
        return krull_dimension(self)

    def hilbert_function(self, up_to):
        return hilbert_function(self, up_to)

    def to_text(self):
        return "\n".join(g.to_text() for g in self.basis)


_GB_CACHE = {}


def buchberger(ideal, ring=None):
    """Reduced Groebner basis of ``ideal`` (an :class:`IdealBasis` or a list of polynomials).

    Results are memoized per (ring, generator set); the computation itself
    is deterministic for a fixed term order.
    """
    if not isinstance(ideal, IdealBasis):
        ideal = IdealBasis(ring or ideal[0].ring, ideal)
    ring = ideal.ring
    key = (ring, frozenset(ideal.generators))
    hit = _GB_CACHE.get(key)
    if hit is not None:
        return hit
    order = engine.TermOrder(ring)
    raw = engine.buchberger([engine.to_elem(g) for g in ideal.generators], order, is_ideal=True)
    gb = GroebnerBasis(ring, [engine.elem_to_poly(f, ring) for f in raw])
    _GB_CACHE[key] = gb
    return gb


def normal_form(p, gb):
    return gb.normal_form(p)


def _minimal_supports(gb):
    supports = set()
    for lm in gb.leading_monomials():
        supports.add(frozenset(i for i, k in enumerate(lm) if k))
    minimal = [s for s in supports if not any(t < s for t in supports)]
    return sorted(minimal, key=lambda s: (len(s), sorted(s)))


def krull_dimension(gb):
    """Dimension of ``R / I`` as the largest variable set independent modulo the leading ideal.

    A set of variables is independent when no leading monomial is supported
    inside it; the largest such set is the complement of a minimum hitting
    set of the leading-monomial supports.  Unit ideal gives -1.
    """
    if gb.is_unit():
        return -1
    n = gb.ring.nvars
    supports = _minimal_supports(gb)
    best = [n + 1]

    def search(excluded, count):
        if count >= best[0]:
            return
        for s in supports:
            if not (s & excluded):
                for v in sorted(s):
                    search(excluded | {v}, count + 1)
                return
        best[0] = count

    search(frozenset(), 0)
    return n - best[0]


def independent_sets_bruteforce(gb):
    """Largest independent variable set found by exhaustive subset enumeration."""
    if gb.is_unit():
        return -1
    n = gb.ring.nvars
    lms = gb.leading_monomials()
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if not any(all(k == 0 or i in s for i, k in enumerate(lm)) for lm in lms):
                return size
    return -1


def monomials_of_degree(nvars, d):
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def count_standard_monomials(lms, nvars, d):
    return sum(
        1
        for e in monomials_of_degree(nvars, d)
        if not any(all(a <= b for a, b in zip(lm, e)) for lm in lms)
    )


def hilbert_function(gb, up_to):
    """Graded dimensions of ``R / I`` in degrees ``0..up_to`` for homogeneous ``I``."""
    if not gb.is_homogeneous():
        raise ValueError("hilbert_function needs a homogeneous ideal")
    lms = gb.leading_monomials()
    n = gb.ring.nvars
    values = tuple(count_standard_monomials(lms, n, d) for d in range(up_to + 1))
    return HilbertData(dimension=krull_dimension(gb), values=values)


def standard_monomials(gb, limit=100000):
    """All monomials outside the leading ideal, for a zero-dimensional ideal.

    Raises ``ValueError`` when the quotient is infinite dimensional.
    """
    if gb.is_unit():
        return []
    if krull_dimension(gb) > 0:
        raise ValueError("quotient is infinite dimensional")
    lms = gb.leading_monomials()
    n = gb.ring.nvars
    out = []
    frontier = [tuple([0] * n)]
    seen = set(frontier)
    while frontier:
        e = frontier.pop()
        if any(all(a <= b for a, b in zip(lm, e)) for lm in lms):
            continue
        out.append(e)
        if len(out) > limit:
            raise ValueError("too many standard monomials")
        for i in range(n):
            f = list(e)
            f[i] += 1
            f = tuple(f)
            if f not in seen:
                seen.add(f)
                frontier.append(f)
    return sorted(out)


def ideals_equal(a, b):
    """Two-sided membership of generators (never a basis comparison)."""
    ga, gb = buchberger(a), buchberger(b)
    return ga.contains_ideal(b) and gb.contains_ideal(a)
