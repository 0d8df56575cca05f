"""End-to-end runs of the normal-cone engine and its checks."""

from ..exactalg import PolyRing
from ..groebner import IdealBasis, ideals_equal
from ..report import SuiteReport, timed
from .engine import DeformationSystem, flow_residual, integrate_psi_M, solve_phi_h, verify_trivialization
from .fixtures import corrupted_i0, i0_pullback, node_closed_form, node_system, shear_system
from .series import WeightedSeries, xt_ring


def run_pipeline(system, N):
    """Solve, integrate and verify; returns a dict of findings (``ok`` summarises)."""
    res = solve_phi_h(system, N)
    out = {"degree": N, "levels": res.levels}
    if not res.ok:
        out["ok"] = False
        out["obstruction"] = res.obstruction.to_dict()
        return out, None
    sol = res.solution
    residual = flow_residual(system, sol.phi, sol.h, N)
    triv = integrate_psi_M(sol.phi, sol.h, N, system.ring)
    ver = verify_trivialization(system, triv, N)
    out["flow_residual_zero"] = all(r.is_zero() for r in residual)
    out["weights_ok"] = triv.check()
    out["verification"] = ver
    out["ok"] = out["flow_residual_zero"] and out["weights_ok"] and ver["series_residual_zero"] and ver["t1_identity_holds"]
    return out, triv


def node_check(N=4):
    system = node_system()
    out, triv = run_pipeline(system, N)
    R, psi_ref, M_ref = node_closed_form()
    XT = xt_ring(system.ring)
    rename = dict(zip(R.names, XT.names))
    if triv is None:
        return False, out
    psi = [s.to_xt(XT) for s in triv.psi]
    M = [[s.to_xt(XT) for s in row] for row in triv.M]
    ref_psi = [p.compose([XT.gen(rename[v]) for v in R.names]) for p in psi_ref]
    ref_M = [[p.compose([XT.gen(rename[v]) for v in R.names]) for p in row] for row in M_ref]
    out["psi"] = [s.to_text() for s in triv.psi]
    out["M"] = [[s.to_text() for s in row] for row in triv.M]
    out["closed_form_psi"] = psi == ref_psi
    out["closed_form_M"] = M == ref_M
    # the same flow with the hand solution Phi = (0, x^2), h = 0
    x, y = system.ring.gens
    hand_phi = [WeightedSeries.zero(system.ring, 2, N), WeightedSeries(system.ring, 2, {0: x * x}, N)]
    hand_h = [[WeightedSeries.zero(system.ring, 1, N)]]
    hand = integrate_psi_M(hand_phi, hand_h, N, system.ring)
    out["hand_solution_flow_residual_zero"] = all(r.is_zero() for r in flow_residual(system, hand_phi, hand_h, N))
    out["hand_solution_psi_matches"] = [s.to_xt(XT) for s in hand.psi] == ref_psi
    ok = out["ok"] and out["closed_form_psi"] and out["closed_form_M"] and out["hand_solution_flow_residual_zero"] and out["hand_solution_psi_matches"]
    return ok, out


def trivial_check(N=4):
    ring = PolyRing("x,y,z")
    x, y, z = ring.gens
    system = DeformationSystem(ring, [x * z - y * y, x * y])
    out, triv = run_pipeline(system, N)
    ident = triv is not None and [s.at_one() for s in triv.psi] == list(ring.gens)
    unit = triv is not None and all(
        s.at_one() == (ring.one() if a == b else ring.zero()) for a, row in enumerate(triv.M) for b, s in enumerate(row)
    )
    out["psi_identity"] = ident
    out["M_identity"] = unit
    return out["ok"] and ident and unit, out


def shear_check():
    system = shear_system()
    out, _ = run_pipeline(system, 4)
    out["f"] = system.f[0].to_text()
    x = system.ring.gens[0]
    return out["ok"] and system.f[0] == x * x + x ** 3 * 2 + x ** 4, out


def end_to_end_pullback(N=4, seed=0):
    """Pullback of the six square-zero quadrics along a random tangent-to-identity germ, trivialized at degree ``N``."""
    system, base = i0_pullback(N, seed)
    ini = IdealBasis(system.ring, system.initial_forms())
    same_ini = ideals_equal(ini, base)
    out, triv = run_pipeline(system, N)
    out["variables"] = system.ring.nvars
    out["generators"] = len(system.f)
    out["generator_terms"] = [len(p) for p in system.f]
    out["initial_forms_generate_I0"] = same_ini
    if triv is not None:
        out["psi_terms"] = [len(s.at_one()) for s in triv.psi]
    out["ok"] = out["ok"] and same_ini
    return out


def corrupted_check(seed=0):
    system, _ = corrupted_i0(seed)
    res = solve_phi_h(system, 4)
    out = {"levels": res.levels}
    if res.ok:
        out["obstruction"] = None
        return False, out
    obs = res.obstruction.to_dict()
    out["obstruction"] = obs
    return obs["degree"] == 3 and obs["residual_terms"] > 0, out


def load_system(path):
    from ..exactalg import parse_system

    with open(path) as fh:
        ring, polys = parse_system(fh.read())
    return DeformationSystem(ring, polys)


def run_suite(degree=4, seed=0, timeout=None):
    rep = SuiteReport("normal-cone")
    timed(rep, "node_toy", "Psi = (x, y - t x^2), M = 1 trivializes xy + x^3", lambda: node_check(degree), timeout)
    timed(rep, "quadratic_system", "a purely quadratic system is trivialized by Psi = id, M = Id", lambda: trivial_check(degree), timeout)
    timed(rep, "shear_pullback", "x -> x + x^2 pulled back onto (x^2)", shear_check, timeout)

    def e2e():
        out = end_to_end_pullback(degree, seed)
        return out["ok"], out

    timed(rep, "pullback_of_I0", f"f_a(Psi(x)) = sum_b M_ab(Psi(x)) f_b2(x) through degree {degree}", e2e, timeout)
    timed(rep, "corrupted_cubic", "a random cubic perturbation is obstructed in a localized graded piece", lambda: corrupted_check(seed), timeout)
    return rep


def run_system(system, degree):
    """Single-system run used by the command line."""
    rep = SuiteReport("normal-cone")

    def go():
        out, _ = run_pipeline(system, degree)
        return out["ok"], out

    timed(rep, "system", "flow equation solved and trivialization verified", go)
    return rep

