"""Exact linear algebra over QQ.

Dense routines work on lists of lists; :func:`sparse_solve` handles the
large, very sparse systems produced by degreewise solvers.
"""

import heapq

from .scalar import QQ, to_qq


class InconsistentSystem(ArithmeticError):
    """Raised by :func:`sparse_solve`; ``row`` is the index of a contradicting equation."""

    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row


def rref(matrix):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``."""
    rows = [[to_qq(v) for v in r] for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix):
    return len(rref(matrix)[1])


def nullspace(matrix, ncols=None):
    """Basis of ``{v : M v = 0}`` as a list of vectors."""
    if not matrix:
        n = ncols or 0
        return [[QQ(int(i == j)) for i in range(n)] for j in range(n)]
    ncols = len(matrix[0])
    red, piv = rref(matrix)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [QQ(0)] * ncols
        v[f] = QQ(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """One solution of ``M x = rhs`` (free variables zero) or ``None``."""
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    red, piv = rref(aug)
    if ncols in piv:
        return None
    x = [QQ(0)] * ncols
    for row, p in zip(red, piv):
        x[p] = row[-1]
    return x


def sparse_solve(rows, rhs, ncols=None, info=None):
    """Solve a sparse system exactly.

    ``rows`` is a list of ``{column: coeff}`` dicts, ``rhs`` the right-hand
    sides.  Elimination uses a Markowitz-style pivot choice (shortest row,
    then sparsest column).  Returns ``{column: value}`` with free columns set
    to zero, or raises :class:`InconsistentSystem`.  When ``info`` is a
    dict it receives the rank of the system.
    """
    rows = [{c: to_qq(v) for c, v in r.items() if v} for r in rows]
    rhs = [to_qq(b) for b in rhs]
    col_rows = {}
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    active = set(range(len(rows)))
    heap = [(len(r), i) for i, r in enumerate(rows)]
    heapq.heapify(heap)
    order = []  # (row, pivot col)
    while heap:
        n, i = heapq.heappop(heap)
        if i not in active or n != len(rows[i]):
            continue
        active.discard(i)
        row = rows[i]
        if not row:
            if rhs[i]:
                raise InconsistentSystem("equation reduces to 0 = nonzero", row=i)
            continue
        pc = min(row, key=lambda c: (len(col_rows[c]), c))
        inv = 1 / row[pc]
        for c in row:
            row[c] *= inv
            col_rows[c].discard(i)
        rhs[i] *= inv
        order.append((i, pc))
        for j in list(col_rows[pc]):
            other = rows[j]
            f = other[pc]
            for c, v in row.items():
                w = other.get(c)
                if w is None:
                    other[c] = -f * v
                    col_rows[c].add(j)
                else:
                    w = w - f * v
                    if w:
                        other[c] = w
                    else:
                        del other[c]
                        col_rows[c].discard(j)
            rhs[j] -= f * rhs[i]
            heapq.heappush(heap, (len(other), j))
    if info is not None:
        info["rank"] = len(order)
    sol = {}
    for i, pc in reversed(order):
        acc = rhs[i]
        for c, v in rows[i].items():
            if c != pc:
                x = sol.get(c)
                if x:
                    acc -= v * x
        if acc:
            sol[pc] = acc
    return sol


def coefficient_matrix(polys):
    """Rows of coefficients of ``polys`` over the union of their monomials.

    Returns ``(matrix, monomials)`` with monomials sorted for determinism.
    """
    monos = sorted({e for p in polys for e in p._terms})
    index = {e: i for i, e in enumerate(monos)}
    mat = []
    for p in polys:
        row = [QQ(0)] * len(monos)
        for e, c in p._terms.items():
            row[index[e]] = c
        mat.append(row)
    return mat, monos


def span_rank(polys):
    """Dimension of the QQ-span of ``polys``."""
    polys = [p for p in polys if p]
    if not polys:
        return 0
    return rank(coefficient_matrix(polys)[0])


def in_span(target, polys):
    """Whether ``target`` is a QQ-linear combination of ``polys``."""
    return span_rank(list(polys) + [target]) == span_rank(polys)


def independent_subset(polys):
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    chosen = []
    current = 0
    for i, p in enumerate(polys):
        if not p:
            continue
        r = span_rank([polys[j] for j in chosen] + [p])
        if r > current:
            chosen.append(i)
            current = r
    return chosen
