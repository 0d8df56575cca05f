"""The symplectic 4-space, square-zero elements of sp4 and the ideals they cut out."""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..exactalg import PolyMatrix, PolyRing, QQ, independent_subset, span_rank, in_span
from ..groebner import IdealBasis

BLOCK_DIAGONAL = "block-diagonal"
BLOCK_ANTIDIAGONAL = "block-antidiagonal"

# u1 = e1, u1* = e2, u2 = e3, u2* = e4
_PERM = ((1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1))


def _qmat(rows):
    return [[QQ(v) for v in r] for r in rows]


def qmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), QQ(0)) for j in range(len(b[0]))] for i in range(len(a))]


def qtranspose(a):
    return [list(r) for r in zip(*a)]


def qadd(a, b, sign=1):
    return [[x + sign * y for x, y in zip(r, s)] for r, s in zip(a, b)]


def qscale(a, c):
    return [[c * x for x in r] for r in a]


def qzero(a):
    return all(not x for r in a for x in r)


def qrank(a):
    from ..exactalg import rank

    return rank(a)


@dataclass(frozen=True)
class SymplecticSpace:
    """``(Q^4, omega)`` with the form matrix ``J`` in one of two conventions.

    ``to_block_diagonal`` is the permutation ``P`` taking coordinates in this
    convention to block-diagonal ones, ``P^t J_bd P = J``.
    """

    convention: str = BLOCK_DIAGONAL

    @property
    def J(self):
        if self.convention == BLOCK_DIAGONAL:
            return _qmat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
        return _qmat([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])

    @property
    def to_block_diagonal(self):
        if self.convention == BLOCK_DIAGONAL:
            return _qmat([[int(i == j) for j in range(4)] for i in range(4)])
        return _qmat(_PERM)

    def check(self):
        J = self.J
        ident = [[QQ(int(i == j)) for j in range(4)] for i in range(4)]
        antisym = qadd(J, qtranspose(J), 1)
        sq = qadd(qmul(J, J), ident, 1)
        P = self.to_block_diagonal
        compat = qadd(qmul(qmul(qtranspose(P), SymplecticSpace().J), P), J, -1)
        return qzero(antisym) and qzero(sq) and qzero(compat)


SYM_INDEX = [(a, b) for a in range(4) for b in range(a, 4)]
SP4_NAMES = [f"b{a + 1}{b + 1}" for a, b in SYM_INDEX]


def sp4_ring(extra=()):
    return PolyRing(list(extra) + SP4_NAMES) if extra else PolyRing(SP4_NAMES)


def symmetric_from_vars(ring, names):
    """Symmetric 4x4 matrix whose upper triangle is the given variables (row-major)."""
    it = iter(names)
    Y = [[None] * 4 for _ in range(4)]
    for a, b in SYM_INDEX:
        v = ring.gen(next(it))
        Y[a][b] = Y[b][a] = v
    return PolyMatrix(ring, Y)


def const_matrix(ring, rows):
    return PolyMatrix(ring, [[ring.constant(v) for v in r] for r in rows])


@dataclass
class GenericSpElement:
    """``B = Y J`` with ``Y`` a generic symmetric matrix; ring has the 10 coordinates of sp4.

    Other variables in ``ring`` (listed before the sp4 coordinates) are left free.
    """

    ring: PolyRing
    B: PolyMatrix
    space: SymplecticSpace

    def J(self):
        return const_matrix(self.ring, self.space.J)

    def symplectic_defect(self):
        J = self.J()
        return J * self.B + self.B.T * J

    def coordinate_rank(self):
        return span_rank([v for r in self.B.tolist() for v in r])


def build_generic_B(space=None, extra=()):
    space = space or SymplecticSpace()
    ring = sp4_ring(extra)
    Y = symmetric_from_vars(ring, SP4_NAMES)
    B = Y * const_matrix(ring, space.J)
    return GenericSpElement(ring, B, space)


def eplus_basis(space):
    """Basis ``E_ij = J^{-1}(e_i e_j^t - e_j e_i^t)``, ``i < j`` in lexicographic order.

    Coordinates of ``M`` in ``E_+`` (``JM`` antisymmetric) are ``(JM)_ij``.
    """
    J = space.J
    Jinv = qscale(J, QQ(-1))
    out = []
    for i, j in combinations(range(4), 2):
        A = [[QQ(0)] * 4 for _ in range(4)]
        A[i][j] = QQ(1)
        A[j][i] = QQ(-1)
        out.append(((i, j), qmul(Jinv, A)))
    return out


def eplus_coordinates(M, space):
    """``[(JM)_ij for i < j]`` for a polynomial matrix ``M``."""
    JM = const_matrix(M.ring, space.J) * M
    return [JM[i, j] for i, j in combinations(range(4), 2)]


def ideal_I0(elem):
    """The 6 quadrics: coordinates of ``B^2`` in the fixed ``E_+`` basis.

    Raises if ``B^2`` has a component outside ``E_+`` or if some entry of
    ``B^2`` leaves the span of the quadrics.
    """
    B2 = elem.B * elem.B
    JB2 = elem.J() * B2
    sym = JB2 + JB2.T
    if not sym.is_zero():
        raise ArithmeticError("B^2 has a component outside E_+")
    gens = eplus_coordinates(B2, elem.space)
    entries = [v for r in B2.tolist() for v in r]
    if not all(in_span(e, gens) for e in entries):
        raise ArithmeticError("an entry of B^2 leaves the span of the generators")
    return IdealBasis(elem.ring, gens)


def ideal_L0(elem):
    """A linearly independent subset of the 2x2 minors of ``B``."""
    minors = list(elem.B.minors(2).values())
    idx = independent_subset(minors)
    return IdealBasis(elem.ring, [minors[i] for i in idx])


def all_minors(elem):
    return list(elem.B.minors(2).values())


# --- rational points of Z -------------------------------------------------


def random_rational(rng, size=9):
    return QQ(Fraction(rng.randint(-size, size), rng.randint(1, 4)))


def rank1_point(rng, space=None):
    """``v v^t J`` for a nonzero random rational ``v``."""
    space = space or SymplecticSpace()
    while True:
        v = [random_rational(rng) for _ in range(4)]
        if any(v):
            break
    Y = [[a * b for b in v] for a in v]
    return qmul(Y, space.J)


def rank2_point(rng, space=None):
    """``(v v^t + w w^t) J`` with ``v^t J w = 0``, ``v, w`` independent."""
    space = space or SymplecticSpace()
    J = space.J
    while True:
        v = [random_rational(rng) for _ in range(4)]
        w = [random_rational(rng) for _ in range(4)]
        # project w onto the J-orthogonal of v using a vector u with v^t J u != 0
        Jv = [sum(v[i] * J[i][j] for i in range(4)) for j in range(4)]
        vw = sum(a * b for a, b in zip(Jv, w))
        k = next((j for j in range(4) if Jv[j]), None)
        if k is None:
            continue
        w = list(w)
        w[k] -= vw / Jv[k]
        if qrank([v, w]) < 2:
            continue
        Y = [[v[a] * v[b] + w[a] * w[b] for b in range(4)] for a in range(4)]
        B = qmul(Y, J)
        if qrank(B) == 2:
            return B


def is_square_zero(B):
    return qzero(qmul(B, B))


def is_in_sp(B, space=None):
    J = (space or SymplecticSpace()).J
    return qzero(qadd(qmul(J, B), qmul(qtranspose(B), J)))


def seeded(seed):
    return random.Random(seed)
