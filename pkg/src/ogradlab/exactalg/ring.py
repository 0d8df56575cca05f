"""Polynomial rings and monomial orders."""

ORDERS = ("degrevlex", "lex", "block")


def _degrevlex_key(exps):
    return (sum(exps),) + tuple(-e for e in reversed(exps))


def _lex_key(exps):
    return tuple(exps)


class PolyRing:
    """Commutative polynomial ring over QQ with named variables.

    ``order`` is one of ``degrevlex`` (default), ``lex`` or ``block``.  The
    block order compares the first ``block`` variables by degrevlex and
    breaks ties with degrevlex on the remaining ones, so it eliminates the
    leading block.
    """

    def __init__(self, names, order="degrevlex", block=None):
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",") if n.strip()]
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if order not in ORDERS:
            raise ValueError(f"unknown term order {order!r}; expected one of {ORDERS}")
        if order == "block":
            if block is None or not 0 < block < len(names):
                raise ValueError("block order needs 0 < block < nvars")
        self.names = names
        self.order = order
        self.block = block if order == "block" else None
        self.nvars = len(names)
        self._index = {n: i for i, n in enumerate(names)}
        self._zero = (0,) * self.nvars
        if order == "degrevlex":
            self.key = _degrevlex_key
        elif order == "lex":
            self.key = _lex_key
        else:
            k = self.block

            def key(exps):
                return _degrevlex_key(exps[:k]) + _degrevlex_key(exps[k:])

            self.key = key

    def __repr__(self):
        extra = f", block={self.block}" if self.block else ""
        return f"PolyRing({','.join(self.names)}, order={self.order!r}{extra})"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.order == other.order
            and self.block == other.block
        )

    def __hash__(self):
        return hash((self.names, self.order, self.block))

    def index(self, name):
        return self._index[name]

    @property
    def zero_exps(self):
        return self._zero

    @property
    def gens(self):
        from .poly import Polynomial

        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Polynomial(self, {tuple(e): 1}))
        return tuple(out)

    def gen(self, name):
        return self.gens[self.index(name)]

    def zero(self):
        from .poly import Polynomial

        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        from .poly import Polynomial

        return Polynomial(self, {self._zero: c})

    def __call__(self, value):
        """Coerce a scalar, a polynomial of a subring or a text expression."""
        from .poly import Polynomial
        from .text import parse_poly

        if isinstance(value, Polynomial):
            return value.to_ring(self)
        if isinstance(value, str):
            return parse_poly(value, self)
        return self.constant(value)

    def with_order(self, order, block=None):
        return PolyRing(self.names, order=order, block=block)

    def extend(self, names, order=None, block=None):
        """Ring with ``names`` appended after the existing variables."""
        return PolyRing(
            self.names + tuple(names),
            order=order or self.order,
            block=block if block is not None else self.block,
        )
