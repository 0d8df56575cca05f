"""Matrices with polynomial entries."""

from itertools import combinations, permutations

from .poly import Polynomial


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class PolyMatrix:
    """Rectangular matrix of polynomials over one ring (immutable)."""

    __slots__ = ("ring", "rows", "cols", "_e")

    def __init__(self, ring, entries):
        entries = [list(r) for r in entries]
        self.ring = ring
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        grid = []
        for r in entries:
            if len(r) != self.cols:
                raise ValueError("ragged matrix")
            row = []
            for v in r:
                if isinstance(v, Polynomial):
                    if v.ring != ring:
                        raise ValueError("entry ring differs from matrix ring")
                    row.append(v)
                else:
                    row.append(ring.constant(v))
            grid.append(tuple(row))
        self._e = tuple(grid)

    @classmethod
    def zeros(cls, ring, rows, cols):
        z = ring.zero()
        return cls(ring, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, ring, columns, rows=None):
        columns = [list(c) for c in columns]
        if not columns:
            return cls(ring, [[] for _ in range(rows or 0)])
        n = len(columns[0])
        return cls(ring, [[c[i] for c in columns] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i):
        return self._e[i]

    def column(self, j):
        return tuple(r[j] for r in self._e)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def tolist(self):
        return [list(r) for r in self._e]

    @property
    def shape(self):
        return self.rows, self.cols

    def map(self, fn):
        return PolyMatrix(self.ring, [[fn(v) for v in r] for r in self._e])

    def __add__(self, other):
        self._check(other, same_shape=True)
        return PolyMatrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)])

    def __sub__(self, other):
        self._check(other, same_shape=True)
        return PolyMatrix(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)])

    def __neg__(self):
        return self.map(lambda v: -v)

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            self._check(other)
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
            cols = other.columns()
            zero = self.ring.zero()
            out = []
            for r in self._e:
                row = []
                for c in cols:
                    acc = zero
                    for a, b in zip(r, c):
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return PolyMatrix(self.ring, out)
        return self.map(lambda v: v * other)

    def __rmul__(self, other):
        return self.map(lambda v: v * other)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.ring == other.ring and self._e == other._e

    def __hash__(self):
        return hash((self.ring, self._e))

    def _check(self, other, same_shape=False):
        if other.ring != self.ring:
            raise ValueError("ring mismatch")
        if same_shape and other.shape != self.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def transpose(self):
        return PolyMatrix(self.ring, [list(c) for c in zip(*self._e)] if self.rows else [])

    T = property(transpose)

    def is_zero(self):
        return all(not v for r in self._e for v in r)

    def is_symmetric(self):
        return self.rows == self.cols and self == self.transpose()

    def trace(self):
        acc = self.ring.zero()
        for i in range(min(self.rows, self.cols)):
            acc = acc + self._e[i][i]
        return acc

    def submatrix(self, rows, cols):
        return PolyMatrix(self.ring, [[self._e[i][j] for j in cols] for i in rows])

    def det(self):
        """Leibniz expansion; fine for the small (<= 6x6) matrices used here."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return self.ring.one()
        if n == 1:
            return self._e[0][0]
        if n == 2:
            return self._e[0][0] * self._e[1][1] - self._e[0][1] * self._e[1][0]
        acc = self.ring.zero()
        # Laplace along the first row keeps intermediate products small
        for j in range(n):
            a = self._e[0][j]
            if not a:
                continue
            minor = self.submatrix(range(1, n), [c for c in range(n) if c != j]).det()
            acc = acc + a * minor if j % 2 == 0 else acc - a * minor
        return acc

    def adjugate(self):
        """Classical adjugate: ``adj(A) * A == det(A) * Id``."""
        n = self.rows
        if n != self.cols:
            raise ValueError("adjugate of a non-square matrix")
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                m = self.submatrix([r for r in range(n) if r != j], [c for c in range(n) if c != i]).det()
                out[i][j] = m if (i + j) % 2 == 0 else -m
        return PolyMatrix(self.ring, out)

    def minors(self, k):
        """``{(row_tuple, col_tuple): minor}`` for all k x k minors, rows/cols ascending."""
        out = {}
        for rs in combinations(range(self.rows), k):
            for cs in combinations(range(self.cols), k):
                out[(rs, cs)] = self.submatrix(rs, cs).det()
        return out

    def evaluate(self, point):
        return [[v.evaluate(point) for v in r] for r in self._e]

    def compose(self, images):
        target = images[0].ring
        return PolyMatrix(target, [[v.compose(images) for v in r] for r in self._e])

    def to_ring(self, ring):
        return PolyMatrix(ring, [[v.to_ring(ring) for v in r] for r in self._e])

    def to_text(self):
        return "\n".join("[" + ", ".join(v.to_text() for v in r) + "]" for r in self._e)

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"


def hstack(*mats):
    ring = mats[0].ring
    rows = mats[0].rows
    return PolyMatrix(ring, [sum((list(m.row(i)) for m in mats), []) for i in range(rows)])


def vstack(*mats):
    ring = mats[0].ring
    out = []
    for m in mats:
        out.extend(list(r) for r in m._e)
    return PolyMatrix(ring, out)


def leibniz_det(entries):
    """Determinant of a square list-of-lists of ring elements by full permutation sum."""
    n = len(entries)
    total = 0
    for perm in permutations(range(n)):
        term = _perm_sign(perm)
        for i, j in enumerate(perm):
            term = term * entries[i][j]
        total = total + term
    return total
