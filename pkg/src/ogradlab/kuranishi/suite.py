"""Checks for the Kuranishi engine on the bundled models."""

import random
from itertools import combinations_with_replacement

from ..exactalg import rank
from ..groebner import IdealBasis, buchberger
from ..report import SuiteReport, timed
from .dga import abelian_model, cohomology, cup_model, permuted, random_model, tensor_glr, unobstructed_model
from .diagonal import verify_diagonal_vanishing
from .recursion import cup_product_map, full_defect, kuranishi_recursion, verify_mc_defect


def standard_models(seed=0):
    from . import diagonal_test_model

    return [
        abelian_model(),
        cup_model(),
        unobstructed_model(),
        random_model(seed),
        random_model(seed + 1, h1=2, extra=2, g2=2),
        diagonal_test_model(seed),
    ]


def defect_in_ideal_groebner(g, sp, out):
    """Second route for the defect containment: Groebner membership in ``a m + m^(N+1)``."""
    ring = out.ring
    N = out.degree
    fsum = [sum((p[b] for p in out.f.values()), ring.zero()) for b in range(sp.h[2])]
    gens = [u * fb for fb in fsum if fb for u in ring.gens]
    for combo in combinations_with_replacement(ring.gens, N + 1):
        m = ring.one()
        for v in combo:
            m = m * v
        gens.append(m)
    gb = buchberger(IdealBasis(ring, gens))
    D = full_defect(g, sp, out, N + 1)
    return all(gb.contains(p) for p in D)


def cohomology_dims_by_rank(g):
    """``dim H^k = dim g^k - rank d_k - rank d_(k-1)``, independent of the splittings."""
    ranks = [rank(g.d[k]) if g.dims[k] and g.dims[k + 1] else 0 for k in range(len(g.d))]
    out = []
    for k, n in enumerate(g.dims):
        out.append(n - (ranks[k] if k < len(ranks) else 0) - (ranks[k - 1] if k > 0 else 0))
    return out


def permutation_determinism(g, sp, N, seed):
    rng = random.Random(seed)
    perms = []
    for n in g.dims:
        p = list(range(n))
        rng.shuffle(p)
        perms.append(p)
    gp, spp = permuted(g, sp, perms)
    a = kuranishi_recursion(g, sp, N)
    b = kuranishi_recursion(gp, spp, N)
    same_f = all(a.f[n] == b.f[n] for n in a.f)
    same_gamma = all(b.gamma[n][perms[1][i]] == a.gamma[n][i] for n in a.gamma for i in range(g.dims[1]))
    return same_f and same_gamma


def run_suite(seed=0, timeout=None, degree=5):
    rep = SuiteReport("kuranishi")
    models = standard_models(seed)
    splits = {}

    def axioms():
        out = {}
        for g in models:
            out[g.name] = g.check()
            splits[g.name] = cohomology(g)
        ok = all(all(v.values()) for v in out.values())
        out["cohomology"] = {g.name: splits[g.name].h for g in models}
        return ok, out

    timed(rep, "model_axioms", "d^2 = 0, Leibniz rule and associativity of each model", axioms, timeout)

    def abelian():
        g = models[0]
        out = kuranishi_recursion(g, splits.get(g.name), degree)
        zero_f = not any(p for v in out.f.values() for p in v)
        higher = not any(p for n, v in out.gamma.items() if n > 1 for p in v)
        return zero_f and higher, {"f_zero": zero_f, "gamma_is_gamma1": higher}

    timed(rep, "abelian_f_zero", "all products zero: f = 0 and gamma = gamma_1", abelian, timeout)

    def unobstructed():
        g = models[2]
        out = kuranishi_recursion(g, splits.get(g.name), degree)
        return not any(p for v in out.f.values() for p in v), {"H": splits[g.name].h}

    timed(rep, "unobstructed_f_zero", "H^2 = 0: f vanishes at every order", unobstructed, timeout)

    def cup():
        details = {}
        ok = True
        for g in models:
            sp = splits.get(g.name) or cohomology(g)
            out = kuranishi_recursion(g, sp, 2)
            expect = cup_product_map(g, sp, out.ring)
            same = out.f[2] == expect
            ok = ok and same
            details[g.name] = {"f2": [p.to_text() for p in out.f[2]], "equals_cup": same}
        return ok, details

    timed(rep, "f2_is_cup_product", "f_2(e) = e u e", cup, timeout)

    def defect():
        details = {}
        ok = True
        for g in models:
            sp = splits.get(g.name) or cohomology(g)
            out = kuranishi_recursion(g, sp, degree)
            fast, _ = verify_mc_defect(g, sp, out)
            slow = defect_in_ideal_groebner(g, sp, out)
            ok = ok and fast and slow
            details[g.name] = {"reducer": fast, "groebner": slow, "terms": out.term_counts()}
        return ok, details

    timed(rep, "mc_defect_containment", f"(d + gamma)^2 - s(f) lies in g^2 (x) a m through degree {degree}", defect, timeout)

    def determinism():
        results = {g.name: permutation_determinism(g, splits.get(g.name) or cohomology(g), 4, seed) for g in models}
        return all(results.values()), results

    timed(rep, "basis_permutation", "recursion output is independent of basis ordering", determinism, timeout)

    def tensor_dims():
        h = models[-1]
        sp = splits.get(h.name) or cohomology(h)
        g, tsp = tensor_glr(h, 2, sp)
        by_rank = cohomology_dims_by_rank(g)
        expect = [4 * v for v in sp.h]
        computed = cohomology(g).h
        axioms_ok = all(g.check().values())
        ok = by_rank == expect == computed == tsp.h and axioms_ok and g.dims == [4 * n for n in h.dims]
        return ok, {"by_rank": by_rank, "expected": expect, "splittings": computed, "axioms": axioms_ok}

    timed(rep, "tensor_cohomology", "dim H(gl_2 (x) h) = 4 dim H(h)", tensor_dims, timeout)

    def diag():
        h = models[-1]
        sp = splits.get(h.name) or cohomology(h)
        two = verify_diagonal_vanishing(h, 2, 4, sp)
        one = verify_diagonal_vanishing(h, 1, 4, sp)
        keys = (
            "f_restricted_zero",
            "gamma_blocks_equal_single_run",
            "gamma_off_diagonal_zero",
            "block_swap_symmetric",
            "single_block_flat",
            "tensor_defect_ok",
        )
        ok = all(two[k] for k in keys) and all(one[k] for k in keys)
        return ok, {"r2": two, "r1": one}

    timed(rep, "diagonal_vanishing", "f vanishes on diagonal matrices and (d + gamma~)^2 = 0", diag, timeout)
    return rep
