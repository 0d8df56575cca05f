import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ogradlab.exactalg import PolyRing, QQ
from ogradlab.exactalg.poly import Polynomial

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("OGRADLAB_EXAMPLES", "40")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("default")

R3 = PolyRing("x,y,z")

coefficients = st.fractions(min_value=-20, max_value=20, max_denominator=6).map(QQ)


@st.composite
def polynomials(draw, ring=R3, max_degree=3, max_terms=5):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exps = tuple(draw(st.integers(0, max_degree)) for _ in range(ring.nvars))
        if sum(exps) > max_degree:
            continue
        c = draw(coefficients)
        if c:
            terms[exps] = c
    return Polynomial(ring, terms)


@st.composite
def homogeneous_polynomials(draw, ring=R3, degree=2, max_terms=4):
    from ogradlab.groebner import monomials_of_degree

    monos = list(monomials_of_degree(ring.nvars, degree))
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=max_terms, unique=True))
    terms = {e: draw(coefficients.filter(bool)) for e in chosen}
    return Polynomial(ring, terms)
