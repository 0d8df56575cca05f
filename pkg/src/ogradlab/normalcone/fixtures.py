"""Test systems: the node toy, pullbacks of quadrics along tangent-to-identity germs, corruptions."""

import random

from ..exactalg import PolyRing, QQ
from ..groebner import IdealBasis
from .engine import DeformationSystem, NotTangentToIdentity, monomials
from .series import compose_trunc


def node_system():
    ring = PolyRing("x,y")
    x, y = ring.gens
    return DeformationSystem(ring, [x * y + x ** 3])


def node_closed_form():
    """``Psi = (x, y - t x^2)`` and ``M = 1`` as polynomials in ``x, y, t``."""
    ring = PolyRing("x,y,t")
    x, y, t = ring.gens
    return ring, [x, y - t * x * x], [[ring.one()]]


def check_tangent(auto, ring):
    for i, p in enumerate(auto):
        if p.homogeneous_component(0):
            raise NotTangentToIdentity(f"image of {ring.names[i]} has a constant term")
        if p.homogeneous_component(1) != ring.gens[i]:
            raise NotTangentToIdentity(f"linear part of the image of {ring.names[i]} is not {ring.names[i]}")


def pullback_perturbation(base, auto, N):
    """``f_a = g_a(auto(x))`` truncated at degree ``N``, for quadrics ``g_a`` and a germ tangent to the identity."""
    gens = base.generators if isinstance(base, IdealBasis) else list(base)
    ring = gens[0].ring
    check_tangent(auto, ring)
    for g in gens:
        if not g.is_homogeneous() or g.total_degree() != 2:
            raise ValueError("base generators must be homogeneous quadrics")
    return DeformationSystem(ring, [compose_trunc(g, auto, N, target=ring) for g in gens])


def random_tangent_germ(ring, seed, terms=2, degree=2, bound=3):
    """``x_i -> x_i + (a few random monomials of degree 2 .. degree)`` with small integer coefficients."""
    rng = random.Random(seed)
    out = []
    for v in ring.gens:
        p = v
        for _ in range(terms):
            d = rng.randint(2, degree)
            mono = rng.choice(monomials(ring.nvars, d))
            c = QQ(rng.choice([c for c in range(-bound, bound + 1) if c]))
            p = p + ring.one().mul_term(mono, c)
        out.append(p)
    return out


def i0_base():
    """The six quadrics of the square-zero ideal in ``Q[X1..X4, sp4]`` (14 variables, 4 of them free)."""
    from ..ograd_model import build_generic_B, ideal_I0

    elem = build_generic_B(extra=("X1", "X2", "X3", "X4"))
    return ideal_I0(elem)


def i0_pullback(N, seed=0):
    base = i0_base()
    ring = base.generators[0].ring
    return pullback_perturbation(base, random_tangent_germ(ring, seed), N), base


def corrupted_i0(seed=0):
    """I0 quadrics plus random cubics: not a pullback, generically obstructed in degree 3."""
    base = i0_base()
    ring = base.generators[0].ring
    rng = random.Random(seed)
    cubics = monomials(ring.nvars, 3)
    f = []
    for g in base.generators:
        p = g
        for _ in range(2):
            p = p + ring.one().mul_term(rng.choice(cubics), QQ(rng.randint(1, 5)))
        f.append(p)
    return DeformationSystem(ring, f), base


def shear_system():
    """``x -> x + x^2`` pulled back onto ``(x^2)``: ``x^2 + 2 x^3 + x^4``."""
    ring = PolyRing("x")
    (x,) = ring.gens
    return pullback_perturbation([x * x], [x + x * x], 4)
