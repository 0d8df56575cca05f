"""Canonical text format for polynomials.

A polynomial prints as its terms in decreasing ring order, each written
``±c*v1^e1*v2^e2``; the coefficient is omitted when it is 1 and the term is
not constant.  ``0`` prints as ``0``.  The parser accepts any whitespace,
``^`` or ``**`` for powers, and implicit unit coefficients.
"""

import re

from .scalar import QQ

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|\^|[-+*/()]))")


def format_poly(p):
    if not p._terms:
        return "0"
    names = p.ring.names
    parts = []
    for exps, c in p.sorted_terms():
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        factors = []
        for n, k in zip(names, exps):
            if k == 1:
                factors.append(n)
            elif k > 1:
                factors.append(f"{n}^{k}")
        if not factors:
            body = str(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = str(a) + "*" + "*".join(factors)
        if parts:
            parts.append(f"{sign} {body}")
        else:
            parts.append(body if sign == "+" else "-" + body)
    return " ".join(parts)


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:pos + 20]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    # expr := term (('+'|'-') term)* ; term := unary ('*'|'/' unary)*
    # unary := ('+'|'-') unary | power ; power := atom ('^' int)?

    def __init__(self, tokens, ring):
        self.toks = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if not rhs.is_constant() or not rhs:
                    raise ValueError("division only by nonzero constants")
                val = val / rhs.constant_coeff()
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise ValueError("exponent must be a non-negative integer")
            base = base ** int(val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring.constant(QQ(*map(int, val.split("/"))) if "/" in val else QQ(int(val)))
        if kind == "name":
            try:
                return self.ring.gens[self.ring.index(val)]
            except KeyError:
                raise ValueError(f"unknown variable {val!r} for {self.ring}") from None
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        raise ValueError(f"unexpected token {val!r}")


def parse_poly(text, ring):
    """Parse ``text`` into a polynomial of ``ring``."""
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty polynomial text")
    parser = _Parser(toks, ring)
    val = parser.expr()
    if parser.i != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return val


def format_system(ring, polys):
    """Serialize a ring and a list of polynomials, one per line."""
    lines = [f"ring: {', '.join(ring.names)}", f"order: {ring.order}"]
    lines.extend(p.to_text() for p in polys)
    return "\n".join(lines) + "\n"


def parse_system(text):
    """Inverse of :func:`format_system`; returns ``(ring, polys)``."""
    from .ring import PolyRing

    names = None
    order = "degrevlex"
    body = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring:"):
            names = [n.strip() for n in line[5:].split(",") if n.strip()]
        elif line.startswith("order:"):
            order = line[6:].strip()
        else:
            body.append(line)
    if names is None:
        raise ValueError("system text lacks a 'ring:' line")
    ring = PolyRing(names, order=order)
    return ring, [parse_poly(line, ring) for line in body]
