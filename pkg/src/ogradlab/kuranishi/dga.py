"""Finite-dimensional differential graded associative algebras.

Components ``g^0 .. g^3`` with explicit bases.  Products are structure
constants ``(k1, i) * (k2, j) -> {l: c}`` landing in degree ``k1 + k2``;
``d[k]`` is the matrix of ``g^k -> g^(k+1)`` (rows index ``g^(k+1)``).
"""

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactalg import QQ, to_qq
from ..exactalg.linalg import rref

TOP = 3


def _zeros(r, c):
    return [[QQ(0)] * c for _ in range(r)]


def _identity(n):
    return [[QQ(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a or not b:
        return _zeros(len(a), len(b[0]) if b else 0)
    cols = len(b[0])
    out = []
    for row in a:
        acc = [QQ(0)] * cols
        for k, v in enumerate(row):
            if v:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += v * bk[j]
        out.append(acc)
    return out


def kron_identity(n, m):
    """``I_n (x) m`` for a dense matrix ``m``."""
    r = len(m)
    c = len(m[0]) if m else 0
    out = _zeros(n * r, n * c)
    for p in range(n):
        for i in range(r):
            for j in range(c):
                if m[i][j]:
                    out[p * r + i][p * c + j] = m[i][j]
    return out


@dataclass
class DGAlgebra:
    dims: list
    products: dict  # ((k1, i), (k2, j)) -> {l: coeff}
    d: list  # d[k]: dims[k+1] x dims[k] matrix, k = 0..TOP-1
    name: str = "model"
    unit: tuple = None  # basis index in g^0 of the unit, if any

    def __post_init__(self):
        self.dims = list(self.dims) + [0] * (TOP + 1 - len(self.dims))
        if len(self.d) < TOP:
            self.d = list(self.d) + [_zeros(self.dims[k + 1], self.dims[k]) for k in range(len(self.d), TOP)]

    # -- element arithmetic (elements are {index: coeff} within one degree) --

    def multiply(self, k1, a, k2, b):
        out = {}
        if k1 + k2 > TOP:
            return out
        for i, x in a.items():
            for j, y in b.items():
                for l, c in self.products.get(((k1, i), (k2, j)), {}).items():
                    v = out.get(l, QQ(0)) + x * y * c
                    if v:
                        out[l] = v
                    else:
                        out.pop(l, None)
        return out

    def differential(self, k, a):
        out = {}
        if k >= TOP:
            return out
        M = self.d[k]
        for j, x in a.items():
            for i in range(self.dims[k + 1]):
                c = M[i][j]
                if c:
                    v = out.get(i, QQ(0)) + c * x
                    if v:
                        out[i] = v
                    else:
                        out.pop(i, None)
        return out

    def basis(self, k):
        return [{i: QQ(1)} for i in range(self.dims[k])]

    def products_in(self, k1, k2):
        """``[(i, j, {l: c})]`` for basis pairs of degrees ``k1, k2`` with nonzero product."""
        return [(i, j, v) for ((a, i), (b, j)), v in self.products.items() if a == k1 and b == k2 and v]

    # -- axioms ----------------------------------------------------------

    def check_d_squared(self):
        for k in range(TOP - 1):
            if any(any(r) for r in matmul(self.d[k + 1], self.d[k])):
                return False
        return True

    def check_leibniz(self):
        for (k1, i), (k2, j) in list(self.products):
            if k1 + k2 >= TOP:
                continue
            a, b = {i: QQ(1)}, {j: QQ(1)}
            lhs = self.differential(k1 + k2, self.multiply(k1, a, k2, b))
            r1 = self.multiply(k1 + 1, self.differential(k1, a), k2, b)
            r2 = self.multiply(k1, a, k2 + 1, self.differential(k2, b))
            sign = -1 if k1 % 2 else 1
            rhs = dict(r1)
            for l, c in r2.items():
                v = rhs.get(l, QQ(0)) + sign * c
                if v:
                    rhs[l] = v
                else:
                    rhs.pop(l, None)
            if lhs != rhs:
                return False
        # pairs with zero product still need d(a)b + (-1)^k a d(b) = 0
        for k1 in range(TOP):
            for k2 in range(TOP - k1):
                for i in range(self.dims[k1]):
                    for j in range(self.dims[k2]):
                        if ((k1, i), (k2, j)) in self.products:
                            continue
                        a, b = {i: QQ(1)}, {j: QQ(1)}
                        r1 = self.multiply(k1 + 1, self.differential(k1, a), k2, b)
                        r2 = self.multiply(k1, a, k2 + 1, self.differential(k2, b))
                        sign = -1 if k1 % 2 else 1
                        tot = dict(r1)
                        for l, c in r2.items():
                            v = tot.get(l, QQ(0)) + sign * c
                            if v:
                                tot[l] = v
                            else:
                                tot.pop(l, None)
                        if tot:
                            return False
        return True

    def check_associative(self):
        for (x, y), xy in self.products.items():
            kx, ky = x[0], y[0]
            for kz in range(TOP + 1 - kx - ky):
                for zi in range(self.dims[kz]):
                    z = {zi: QQ(1)}
                    left = self.multiply(kx + ky, xy, kz, z)
                    yz = self.multiply(ky, {y[1]: QQ(1)}, kz, z)
                    right = self.multiply(kx, {x[1]: QQ(1)}, ky + kz, yz)
                    if left != right:
                        return False
        # x*y = 0 but x*(y*z) could still be nonzero
        for (y, z), yz in self.products.items():
            ky, kz = y[0], z[0]
            for kx in range(TOP + 1 - ky - kz):
                for xi in range(self.dims[kx]):
                    if ((kx, xi), y) in self.products:
                        continue
                    right = self.multiply(kx, {xi: QQ(1)}, ky + kz, yz)
                    if right:
                        return False
        return True

    def check(self):
        return {
            "d_squared_zero": self.check_d_squared(),
            "leibniz": self.check_leibniz(),
            "associative": self.check_associative(),
        }

    # -- serialization ----------------------------------------------------

    def to_json(self):
        prods = []
        for ((k1, i), (k2, j)), v in sorted(self.products.items()):
            if v:
                prods.append([[k1, i], [k2, j], [[l, str(c)] for l, c in sorted(v.items())]])
        diff = {}
        for k in range(TOP):
            entries = [[i, j, str(self.d[k][i][j])] for i in range(self.dims[k + 1]) for j in range(self.dims[k]) if self.d[k][i][j]]
            if entries:
                diff[str(k)] = entries
        doc = {"name": self.name, "dims": self.dims, "products": prods, "differential": diff}
        if self.unit is not None:
            doc["unit"] = self.unit
        return json.dumps(doc, indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        dims = list(doc["dims"])
        dims += [0] * (TOP + 1 - len(dims))
        prods = {}
        for left, right, res in doc.get("products", []):
            key = (tuple(left), tuple(right))
            prods[key] = {int(l): to_qq(c) for l, c in res if to_qq(c)}
        d = [_zeros(dims[k + 1], dims[k]) for k in range(TOP)]
        for k, entries in doc.get("differential", {}).items():
            for i, j, c in entries:
                d[int(k)][i][j] = to_qq(c)
        unit = doc.get("unit")
        return cls(dims, prods, d, doc.get("name", "model"), tuple(unit) if unit else None)


@dataclass
class Splittings:
    """Per degree: ``s[k]`` (g^k x H^k), ``pi[k]`` (H^k x g^k, exact on cocycles), ``t[k]`` (g^(k-1) x g^k, exact on coboundaries)."""

    h: list
    s: list
    pi: list
    t: list
    z_dims: list = field(default_factory=list)
    b_dims: list = field(default_factory=list)


def _left_inverse(cols, n):
    """Left inverse of the ``n x m`` matrix with the given independent columns."""
    m = len(cols)
    if m == 0:
        return []
    M = [[cols[j][i] for j in range(m)] for i in range(n)]
    Mt = [list(r) for r in zip(*M)]
    G = matmul(Mt, M)
    aug = [G[i] + _identity(m)[i] for i in range(m)]
    red, piv = rref(aug)
    Ginv = [r[m:] for r in red]
    return matmul(Ginv, Mt)


def cohomology(g):
    """Cocycles, coboundaries and default splittings by row reduction."""
    from ..exactalg import nullspace

    if not g.check_d_squared():
        raise ValueError("d^2 != 0")
    h, s, pi, t, zd, bd = [], [], [], [], [], []
    for k in range(TOP + 1):
        n = g.dims[k]
        Z = nullspace(g.d[k], ncols=n) if k < TOP else [[QQ(int(i == j)) for i in range(n)] for j in range(n)]
        # coboundaries: independent columns of d[k-1], remembering their source basis vector
        bsrc = []
        if k > 0 and g.dims[k - 1] and n:
            bsrc = rref(g.d[k - 1])[1]
        bcols = [[g.d[k - 1][i][j] for i in range(n)] for j in bsrc]
        reps = []
        if Z:
            cand = bcols + Z
            piv = rref([[v[i] for v in cand] for i in range(n)])[1]
            reps = [cand[j] for j in piv if j >= len(bcols)]
        L = _left_inverse(bcols + reps, n)
        nb = len(bcols)
        h.append(len(reps))
        s.append([[reps[a][i] for a in range(len(reps))] for i in range(n)])
        pi.append(L[nb:] if L else [])
        tk = _zeros(g.dims[k - 1] if k > 0 else 0, n)
        for r, src in enumerate(bsrc):
            tk[src] = L[r]
        t.append(tk)
        zd.append(len(Z))
        bd.append(nb)
    return Splittings(h, s, pi, t, zd, bd)


# -- models -------------------------------------------------------------


def abelian_model():
    """``g^0 = <1>``, ``g^1 = <a, b>``, ``g^2 = <c>``, every product of positive degree zero."""
    prods = {((0, 0), (k, i)): {i: QQ(1)} for k, n in enumerate([1, 2, 1]) for i in range(n)}
    prods.update({((k, i), (0, 0)): {i: QQ(1)} for k, n in enumerate([1, 2, 1]) for i in range(n)})
    return DGAlgebra([1, 2, 1], prods, [], "abelian", (0, 0))


def cup_model():
    """``a a = c``, ``a b = c``, other degree-one products zero, ``d = 0``."""
    g = abelian_model()
    g.products[((1, 0), (1, 0))] = {0: QQ(1)}
    g.products[((1, 0), (1, 1))] = {0: QQ(1)}
    g.name = "cup"
    return g


def unobstructed_model():
    """``H^2 = 0``: the product lands in ``g^2`` which is all coboundary."""
    dims = [1, 3, 1]
    prods = {((0, 0), (k, i)): {i: QQ(1)} for k, n in enumerate(dims) for i in range(n)}
    prods.update({((k, i), (0, 0)): {i: QQ(1)} for k, n in enumerate(dims) for i in range(n)})
    prods[((1, 0), (1, 1))] = {0: QQ(1)}
    prods[((1, 1), (1, 0))] = {0: QQ(-1)}
    prods[((1, 0), (1, 0))] = {0: QQ(2)}
    d = [_zeros(3, 1), [[QQ(0), QQ(0), QQ(1)]], _zeros(0, 1)]
    return DGAlgebra(dims, prods, d, "unobstructed", (0, 0))


def random_model(seed, h1=3, extra=2, g2=3, dense=0.6):
    """Unital model with ``g^3 = 0``, random ``d: g^1 -> g^2`` and random products ``g^1 x g^1 -> g^2``.

    With ``g^3 = 0`` the axioms hold for any choice.
    """
    rng = random.Random(seed)
    n1 = h1 + extra
    dims = [1, n1, g2]
    prods = {((0, 0), (k, i)): {i: QQ(1)} for k, n in enumerate(dims) for i in range(n)}
    prods.update({((k, i), (0, 0)): {i: QQ(1)} for k, n in enumerate(dims) for i in range(n)})

    def rq():
        return QQ(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))

    for i in range(n1):
        for j in range(n1):
            if rng.random() < dense:
                v = {l: rq() for l in range(g2)}
                v = {l: c for l, c in v.items() if c}
                if v:
                    prods[((1, i), (1, j))] = v
    d1 = _zeros(g2, n1)
    for j in range(h1, n1):
        for i in range(g2):
            d1[i][j] = rq()
    return DGAlgebra(dims, prods, [_zeros(n1, 1), d1, _zeros(0, g2)], f"random-{seed}", (0, 0))


def endomorphism_model(dims=(3, 4, 1), ranks=(1, 1), seed=None):
    """``End(I)`` in degrees ``>= 0`` for a three-term complex ``I`` of the given dimensions.

    Degree-``k`` basis: matrix units ``Hom(I^p, I^(p+k))``; product is
    composition, ``d(phi) = delta phi - (-1)^k phi delta``.
    """
    offs = [0, dims[0], dims[0] + dims[1]]
    total = sum(dims)
    rng = random.Random(seed) if seed is not None else None
    delta = [[QQ(0)] * total for _ in range(total)]
    # d0: I^0 -> I^1, d1: I^1 -> I^2 with d1 d0 = 0
    r0, r1 = ranks
    for a in range(r0):
        delta[offs[1] + a][offs[0] + a] = QQ(1)
    for a in range(r1):
        delta[offs[2] + a][offs[1] + r0 + a] = QQ(1)
    if rng is not None:
        for a in range(r0):
            for b in range(dims[0]):
                if b >= r0:
                    delta[offs[1] + a][offs[0] + b] = QQ(rng.randint(-2, 2))

    units = {k: [] for k in range(TOP + 1)}
    for k in range(TOP + 1):
        for p in range(3):
            if p + k > 2:
                continue
            for row in range(dims[p + k]):
                for col in range(dims[p]):
                    units[k].append((offs[p + k] + row, offs[p] + col))
    index = {k: {u: i for i, u in enumerate(units[k])} for k in units}
    gdims = [len(units[k]) for k in range(TOP + 1)]

    def degree_of(row, col):
        pr = 0 if row < offs[1] else (1 if row < offs[2] else 2)
        pc = 0 if col < offs[1] else (1 if col < offs[2] else 2)
        return pr - pc

    prods = {}
    for k1 in range(TOP + 1):
        for i, (a, b) in enumerate(units[k1]):
            for k2 in range(TOP + 1 - k1):
                for j, (c, e) in enumerate(units[k2]):
                    if b == c:
                        prods[((k1, i), (k2, j))] = {index[k1 + k2][(a, e)]: QQ(1)}
    d = []
    for k in range(TOP):
        M = _zeros(gdims[k + 1], gdims[k])
        sign = -1 if k % 2 else 1
        for j, (a, b) in enumerate(units[k]):
            # delta * E_ab = sum_r delta[r][a] E_rb ; E_ab * delta = sum_c delta[b][c] E_ac
            for r in range(total):
                if delta[r][a] and degree_of(r, b) == k + 1:
                    M[index[k + 1][(r, b)]][j] += delta[r][a]
            for c in range(total):
                if delta[b][c] and degree_of(a, c) == k + 1:
                    M[index[k + 1][(a, c)]][j] -= sign * delta[b][c]
        d.append(M)
    unit_elem = None
    g = DGAlgebra(gdims, prods, d, f"End{tuple(dims)}", unit_elem)
    return g


def tensor_glr(h, r, sp=None):
    """``gl_r (x) h`` with ``(E_ab x)(E_cd y) = delta_bc E_ad (x y)``, ``d = id (x) d_h``.

    Basis index ``p * dim h^k + x`` with ``p = a * r + b``.  Returns the
    algebra and, when ``sp`` is given, the block-diagonal splittings.
    """
    dims = [r * r * n for n in h.dims]
    prods = {}
    for ((k1, x), (k2, y)), v in h.products.items():
        for a in range(r):
            for b in range(r):
                for e in range(r):
                    p, q, o = a * r + b, b * r + e, a * r + e
                    prods[((k1, p * h.dims[k1] + x), (k2, q * h.dims[k2] + y))] = {
                        o * h.dims[k1 + k2] + l: c for l, c in v.items()
                    }
    d = [kron_identity(r * r, h.d[k]) for k in range(TOP)]
    g = DGAlgebra(dims, prods, d, f"gl{r}x{h.name}")
    if sp is None:
        return g
    n = r * r
    tsp = Splittings(
        [n * v for v in sp.h],
        [kron_identity(n, m) for m in sp.s],
        [kron_identity(n, m) for m in sp.pi],
        [kron_identity(n, m) for m in sp.t],
        [n * v for v in sp.z_dims],
        [n * v for v in sp.b_dims],
    )
    return g, tsp


def permuted(g, sp, perms):
    """Reindex every component by ``perms[k]`` (new index of old basis vector ``i``) and transport ``sp``."""
    prods = {}
    for ((k1, i), (k2, j)), v in g.products.items():
        prods[((k1, perms[k1][i]), (k2, perms[k2][j]))] = {perms[k1 + k2][l]: c for l, c in v.items()}
    d = []
    for k in range(TOP):
        M = _zeros(g.dims[k + 1], g.dims[k])
        for i in range(g.dims[k + 1]):
            for j in range(g.dims[k]):
                M[perms[k + 1][i]][perms[k][j]] = g.d[k][i][j]
        d.append(M)
    s, pi, t = [], [], []
    for k in range(TOP + 1):
        sk = _zeros(g.dims[k], sp.h[k])
        for i in range(g.dims[k]):
            sk[perms[k][i]] = list(sp.s[k][i])
        s.append(sk)
        pk = _zeros(sp.h[k], g.dims[k])
        for a in range(sp.h[k]):
            for i in range(g.dims[k]):
                pk[a][perms[k][i]] = sp.pi[k][a][i]
        pi.append(pk)
        src = g.dims[k - 1] if k > 0 else 0
        tk = _zeros(src, g.dims[k])
        for i in range(src):
            for j in range(g.dims[k]):
                tk[perms[k - 1][i]][perms[k][j]] = sp.t[k][i][j]
        t.append(tk)
    unit = None
    if g.unit is not None:
        unit = (g.unit[0], perms[g.unit[0]][g.unit[1]])
    return DGAlgebra(g.dims, prods, d, g.name + "-permuted", unit), Splittings(sp.h, s, pi, t, sp.z_dims, sp.b_dims)
