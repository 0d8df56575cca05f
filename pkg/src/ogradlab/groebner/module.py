"""Submodules of free modules: syzygies, lifting, subquotients, annihilators."""

from dataclasses import dataclass

from ..exactalg.linalg import rank
from ..exactalg.matrix import PolyMatrix
from . import engine
from .ideal import IdealBasis, buchberger, count_standard_monomials


class NotInSubmodule(ArithmeticError):
    """A target vector is not in the submodule spanned by the given columns."""


def _augmented_basis(m):
    """Groebner basis of the columns ``[m_j ; e_j]`` with the top block eliminated first."""
    r, k = m.shape
    order = engine.TermOrder(m.ring, split=r)
    gens = []
    for j, col in enumerate(m.columns()):
        f = engine.vector_to_elem(col)
        f[(r + j, m.ring.zero_exps)] = engine.QQ(1)
        gens.append(f)
    return engine.buchberger(gens, order, is_ideal=False), order


def syzygy_basis(m):
    """Columns generating ``{v : m v = 0}``; a matrix with zero columns when the kernel is 0.

    Elements of the augmented basis whose top part vanishes form a basis of
    the syzygy module (block elimination order).
    """
    ring = m.ring
    r, k = m.shape
    basis, _ = _augmented_basis(m)
    cols = []
    for f in basis:
        if all(p >= r for p, _ in f):
            shifted = {(p - r, e): c for (p, e), c in f.items()}
            cols.append(engine.elem_to_vector(shifted, ring, k))
    s = PolyMatrix.from_columns(ring, cols, rows=k)
    if cols and not (m * s).is_zero():
        raise AssertionError("syzygy check failed")
    return s


def lift(gens, targets):
    """``C`` with ``gens * C == targets``; raises :class:`NotInSubmodule` otherwise."""
    ring = gens.ring
    r, k = gens.shape
    basis, order = _augmented_basis(gens)
    elems = engine.make_elems(basis, order)
    cols = []
    for j, t in enumerate(targets.columns()):
        rem = engine.reduce_full(engine.vector_to_elem(t), elems, order)
        if any(p < r for p, _ in rem):
            raise NotInSubmodule(f"target column {j} is not in the submodule")
        coeffs = {(p - r, e): -c for (p, e), c in rem.items()}
        cols.append(engine.elem_to_vector(coeffs, ring, k))
    c = PolyMatrix.from_columns(ring, cols, rows=k)
    if cols and gens * c != targets:
        raise AssertionError("lift check failed")
    return c


class ModuleGroebnerBasis:
    """Groebner basis of a submodule of ``R^rank`` (term-over-position order)."""

    def __init__(self, ring, rank_, columns):
        self.ring = ring
        self.rank = rank_
        self.order = engine.TermOrder(ring)
        gens = [engine.vector_to_elem(c) for c in columns]
        self.basis = engine.buchberger(gens, self.order, is_ideal=False) if gens else []
        self._elems = engine.make_elems(self.basis, self.order)

    def reduce(self, vector):
        rem = engine.reduce_full(engine.vector_to_elem(vector), self._elems, self.order)
        return engine.elem_to_vector(rem, self.ring, self.rank)

    def contains(self, vector):
        return not any(self.reduce(vector))

    def leading_terms(self):
        return [self.order.lead(f)[0] for f in self.basis]

    def is_groebner(self):
        return engine.all_spolys_reduce(self.basis, self.order)


@dataclass
class ModulePresentation:
    """The subquotient ``span(generators) / span(relations)`` inside ``R^ambient_rank``.

    ``relation_matrix`` presents the same module as a cokernel on the
    generators: ``R^m -> R^k -> M -> 0``.
    """

    ring: object
    ambient_rank: int
    generators: PolyMatrix
    relations: PolyMatrix
    relation_matrix: PolyMatrix
    generator_degrees: tuple = ()

    @property
    def num_generators(self):
        return self.generators.cols

    def relation_basis(self):
        return ModuleGroebnerBasis(self.ring, self.num_generators, self.relation_matrix.columns())

    def is_zero(self):
        gb = self.relation_basis()
        one, zero = self.ring.one(), self.ring.zero()
        k = self.num_generators
        return all(gb.contains([one if i == j else zero for i in range(k)]) for j in range(k))

    def minimal_generators(self):
        """``dim M / mM`` at the origin: generators minus the rank of the relations at 0."""
        k = self.num_generators
        if self.relation_matrix.cols == 0:
            return k
        zero = [0] * self.ring.nvars
        return k - rank(self.relation_matrix.evaluate(zero))

    def annihilator(self):
        return annihilator(self)

    def hilbert_function(self, up_to):
        """Graded dimensions using ``generator_degrees`` as the twists."""
        degs = self.generator_degrees or (0,) * self.num_generators
        gb = self.relation_basis()
        lead = {}
        for pos, e in gb.leading_terms():
            lead.setdefault(pos, []).append(e)
        n = self.ring.nvars
        values = []
        for d in range(up_to + 1):
            total = 0
            for pos, dg in enumerate(degs):
                if d - dg >= 0:
                    total += count_standard_monomials(lead.get(pos, []), n, d - dg)
            values.append(total)
        return tuple(values)


def quotient_presentation(ker_gens, im_gens, generator_degrees=()):
    """Presentation of ``span(ker_gens) / span(im_gens)``.

    Raises :class:`NotInSubmodule` when an image column is not in the
    kernel span, which upstream means the composition is not zero.
    """
    ring = ker_gens.ring
    r, k = ker_gens.shape
    parts = []
    if im_gens.cols:
        parts.extend(lift(ker_gens, im_gens).columns())
    if k:
        parts.extend(syzygy_basis(ker_gens).columns())
    rel = PolyMatrix.from_columns(ring, parts, rows=k)
    return ModulePresentation(ring, r, ker_gens, im_gens, rel, tuple(generator_degrees))


def cokernel(matrix, generator_degrees=()):
    """``R^k / span(columns)`` as a presentation."""
    k = matrix.rows
    return ModulePresentation(
        matrix.ring, k, PolyMatrix.identity(matrix.ring, k), matrix, matrix, tuple(generator_degrees)
    )


def annihilator(m):
    """Ideal of ``a`` with ``a * g_i`` in the relation span for every generator ``g_i``.

    Solved as one syzygy problem: unknowns ``(a, c_1, ..., c_k)`` with
    ``a e_i - R c_i = 0`` for every ``i``.
    """
    ring = m.ring
    R = m.relation_matrix
    k, s = R.rows, R.cols
    if k == 0:
        return IdealBasis(ring, [ring.one()])
    zero = ring.zero()
    rows = []
    for i in range(k):
        for row in range(k):
            line = [ring.one() if row == i else zero]
            for blk in range(k):
                for col in range(s):
                    line.append(-R[row, col] if blk == i else zero)
            rows.append(line)
    big = PolyMatrix(ring, rows)
    syz = syzygy_basis(big)
    gens = [syz[0, j] for j in range(syz.cols)]
    return IdealBasis(ring, buchberger(IdealBasis(ring, gens)).basis if any(gens) else [])


def verify_annihilator(m, ideal):
    """Each ideal generator kills each module generator modulo relations."""
    gb = m.relation_basis()
    ring = m.ring
    k = m.num_generators
    for a in ideal:
        for i in range(k):
            vec = [a if j == i else ring.zero() for j in range(k)]
            if not gb.contains(vec):
                return False
    return True
