"""Sparse multivariate polynomials with exact rational coefficients."""

from operator import add

from .scalar import QQ, to_qq


def _madd(a, b):
    return tuple(map(add, a, b))


class Polynomial:
    """Immutable polynomial: a map from dense exponent tuples to nonzero ``QQ``.

    Arithmetic requires both operands to live in the same ring; scalars
    (ints, ``QQ``, ``Fraction``) are coerced.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring, terms=None, _trusted=False):
        self.ring = ring
        self._hash = None
        if _trusted:
            self._terms = terms
            return
        clean = {}
        n = ring.nvars
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has wrong length for {ring}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = to_qq(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean

    # -- basic access -------------------------------------------------

    @property
    def terms(self):
        """Copy of the term map ``{exps: coeff}``."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self):
        """Terms in decreasing ring order."""
        key = self.ring.key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and self.ring.zero_exps in self._terms)

    def constant_coeff(self):
        return self._terms.get(self.ring.zero_exps, QQ(0))

    def coeff(self, exps):
        return self._terms.get(tuple(exps), QQ(0))

    def leading_term(self):
        """``(exps, coeff)`` of the largest term in the ring order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = self.ring.key
        e = max(self._terms, key=key)
        return e, self._terms[e]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coeff(self):
        return self.leading_term()[1]

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree(self, var):
        i = var if isinstance(var, int) else self.ring.index(var)
        if not self._terms:
            return -1
        return max(e[i] for e in self._terms)

    def variables(self):
        """Indices of variables that actually occur."""
        used = set()
        for e in self._terms:
            used.update(i for i, k in enumerate(e) if k)
        return sorted(used)

    def is_homogeneous(self):
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    # -- graded pieces -----------------------------------------------

    def homogeneous_component(self, d):
        if d < 0:
            raise ValueError("degree must be non-negative")
        return Polynomial(self.ring, {e: c for e, c in self._terms.items() if sum(e) == d}, True)

    def homogeneous_components(self):
        """``{degree: component}`` for every nonzero component."""
        out = {}
        for e, c in self._terms.items():
            out.setdefault(sum(e), {})[e] = c
        return {d: Polynomial(self.ring, t, True) for d, t in sorted(out.items())}

    def initial_form(self):
        """Lowest total degree ``nu`` with a nonzero component, and that component."""
        if not self._terms:
            raise ValueError("the zero polynomial has no initial form")
        nu = min(sum(e) for e in self._terms)
        return nu, self.homogeneous_component(nu)

    def truncate(self, max_degree):
        """Drop every term of total degree above ``max_degree``."""
        return Polynomial(
            self.ring, {e: c for e, c in self._terms.items() if sum(e) <= max_degree}, True
        )

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, float):
            raise TypeError("floating point values are not exact scalars")
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for e, c in b.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.ring, out, True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()}, True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = to_qq(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: c * v for e, v in self._terms.items()}, True)

    def mul_term(self, exps, c):
        """Multiply by the single term ``c * x^exps``."""
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring, {_madd(e, exps): c * v for e, v in self._terms.items()}, True
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = _madd(ea, eb)
                v = get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return Polynomial(self.ring, {e: c for e, c in out.items() if c}, True)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            q, r = self.divmod(other)
            if r:
                raise ArithmeticError("inexact polynomial division")
            return q
        c = to_qq(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / c)

    def divmod(self, other):
        """Multivariate division by a single polynomial in the ring order.

        Returns ``(q, r)`` with ``self == q * other + r`` and no term of ``r``
        divisible by the leading monomial of ``other``.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = other.leading_term()
        key = self.ring.key
        rest = dict(self._terms)
        quot, rem = {}, {}
        while rest:
            e = max(rest, key=key)
            c = rest[e]
            if all(a >= b for a, b in zip(e, lm)):
                m = tuple(a - b for a, b in zip(e, lm))
                f = c / lc
                quot[m] = quot.get(m, 0) + f
                for eo, co in other._terms.items():
                    t = _madd(eo, m)
                    v = rest.get(t, 0) - f * co
                    if v:
                        rest[t] = v
                    else:
                        rest.pop(t, None)
            else:
                rem[e] = c
                del rest[e]
        return Polynomial(self.ring, quot), Polynomial(self.ring, rem, True)

    def monic(self):
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coeff())

    def content(self):
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        from math import gcd

        if not self._terms:
            return QQ(0)
        num = 0
        den = 1
        for c in self._terms.values():
            num = gcd(num, int(c.numerator))
            d = int(c.denominator)
            den = den * d // gcd(den, d)
        return QQ(num, den)

    def primitive(self):
        """Integer-coefficient associate with coprime coefficients and positive leading coefficient."""
        if not self._terms:
            return self
        p = self.scale(1 / self.content())
        return -p if p.leading_coeff() < 0 else p

    # -- calculus and substitution -------------------------------------

    def diff(self, var):
        i = var if isinstance(var, int) else self.ring.index(var)
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                out[tuple(ne)] = c * k
        return Polynomial(self.ring, out, True)

    def evaluate(self, point):
        """Exact value at a rational point (sequence of length ``nvars``)."""
        pt = [to_qq(v) for v in point]
        if len(pt) != self.ring.nvars:
            raise ValueError("point has wrong length")
        total = QQ(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x**k
            total += v
        return total

    def eval_mod_prime(self, point, prime):
        """Value modulo ``prime`` at an integer/rational point.

        Raises ``ZeroDivisionError`` when a coefficient or point denominator
        is divisible by ``prime``; callers resample.
        """
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong length")
        pt = []
        for v in point:
            v = to_qq(v)
            d = int(v.denominator) % prime
            if d == 0:
                raise ZeroDivisionError("point denominator divisible by prime")
            pt.append(int(v.numerator) * pow(d, -1, prime) % prime)
        total = 0
        for e, c in self._terms.items():
            d = int(c.denominator) % prime
            if d == 0:
                raise ZeroDivisionError("coefficient denominator divisible by prime")
            v = int(c.numerator) * pow(d, -1, prime)
            for x, k in zip(pt, e):
                if k:
                    v = v * pow(x, k, prime) % prime
            total = (total + v) % prime
        return total

    def compose(self, images, ring=None, max_degree=None):
        """Substitute ``images[i]`` for variable ``i``.

        ``images`` are polynomials of a common target ring (``ring`` is used
        when all images are scalars).  With ``max_degree`` every intermediate
        product is truncated above that total degree.
        """
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = ring
        for im in images:
            if isinstance(im, Polynomial):
                target = im.ring
                break
        if target is None:
            raise ValueError("cannot infer target ring")
        imgs = [im if isinstance(im, Polynomial) else target.constant(im) for im in images]

        def trunc(p):
            return p if max_degree is None else p.truncate(max_degree)

        powers = [dict() for _ in imgs]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = imgs[i] if k == 1 else trunc(power(i, k - 1) * imgs[i])
            return cache[k]

        total = target.zero()
        for e, c in self._terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = trunc(term * power(i, k))
                    if not term:
                        break
            total = total + term
        return total

    def subs(self, mapping):
        """Substitute a subset of variables (by name or index) with polynomials/scalars of the same ring."""
        images = list(self.ring.gens)
        for k, v in mapping.items():
            i = k if isinstance(k, int) else self.ring.index(k)
            images[i] = v if isinstance(v, Polynomial) else self.ring.constant(v)
        return self.compose(images)

    def to_ring(self, ring):
        """Re-express in ``ring`` by matching variable names."""
        if ring == self.ring:
            return self
        idx = []
        for i, n in enumerate(self.ring.names):
            if n in ring._index:
                idx.append(ring.index(n))
            else:
                idx.append(None)
        out = {}
        for e, c in self._terms.items():
            ne = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    if idx[i] is None:
                        raise ValueError(f"variable {self.ring.names[i]} missing from {ring}")
                    ne[idx[i]] = k
            out[tuple(ne)] = c
        return Polynomial(ring, out, True)

    # -- comparison and text ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, QQ)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def to_text(self):
        from .text import format_poly

        return format_poly(self)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"
