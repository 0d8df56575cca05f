"""Exact multivariate polynomial arithmetic over the rationals."""

import random

from .linalg import (
    InconsistentSystem,
    coefficient_matrix,
    in_span,
    independent_subset,
    nullspace,
    rank,
    rref,
    solve,
    span_rank,
    sparse_solve,
)
from .matrix import PolyMatrix, hstack, vstack
from .poly import Polynomial
from .ring import PolyRing
from .scalar import QQ, to_qq
from .text import format_poly, format_system, parse_poly, parse_system

# 2**61 - 1, a Mersenne prime; used for every randomized identity check.
DEFAULT_PRIME = 2305843009213693951


def homogeneous_component(p, d):
    return p.homogeneous_component(d)


def initial_form(p):
    return p.initial_form()


def eval_mod_prime(p, point, prime=DEFAULT_PRIME):
    if prime <= 2**30:
        raise ValueError("prime must exceed 2**30")
    return p.eval_mod_prime(point, prime)


def random_point(nvars, rng, bound=10**6):
    """Integer point with coordinates in ``[-bound, bound]``."""
    return [rng.randint(-bound, bound) for _ in range(nvars)]


def vanishes_mod_prime(p, trials=100, seed=0, prime=DEFAULT_PRIME):
    """Randomized zero test: ``p`` evaluated at ``trials`` seeded random points.

    Returns the number of points where ``p`` vanished (equal to ``trials``
    for an identically zero polynomial).
    """
    rng = random.Random(seed)
    hits = 0
    for _ in range(trials):
        while True:
            pt = random_point(p.ring.nvars, rng, bound=prime - 1)
            try:
                v = p.eval_mod_prime(pt, prime)
                break
            except ZeroDivisionError:
                continue
        hits += v == 0
    return hits


def univariate_gcd(p, q, var):
    """GCD of two polynomials that only involve the single variable ``var``.

    Returned monic (or zero).
    """
    ring = p.ring
    i = var if isinstance(var, int) else ring.index(var)
    for f in (p, q):
        if any(k for e in f._terms for j, k in enumerate(e) if j != i and k):
            raise ValueError("univariate_gcd needs polynomials in one variable")
    lex = ring.with_order("lex")
    a, b = p.to_ring(lex), q.to_ring(lex)
    while b:
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic().to_ring(ring) if a else ring.zero()


__all__ = [
    "DEFAULT_PRIME",
    "InconsistentSystem",
    "PolyMatrix",
    "PolyRing",
    "Polynomial",
    "QQ",
    "coefficient_matrix",
    "eval_mod_prime",
    "format_poly",
    "format_system",
    "homogeneous_component",
    "hstack",
    "in_span",
    "independent_subset",
    "initial_form",
    "nullspace",
    "parse_poly",
    "parse_system",
    "random_point",
    "rank",
    "rref",
    "solve",
    "span_rank",
    "sparse_solve",
    "to_qq",
    "univariate_gcd",
    "vanishes_mod_prime",
    "vstack",
]
