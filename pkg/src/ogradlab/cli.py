"""Command line entry point: ``ogradlab <suite> [options]``.

Exit status is 0 when no check failed (flagged checks are fine), 1 when a
check failed and 2 for usage or input errors.
"""

import argparse
import sys

import jsonschema

from . import __version__
from .exactalg import DEFAULT_PRIME
from .report import load_schema, to_json, to_markdown

SUITES = ("verify-model", "verify-invariants", "verify-t1", "kuranishi", "normal-cone")
DEFAULT_DEGREES = {"kuranishi": 5, "normal-cone": 4}


class UsageError(Exception):
    pass


def _common(p):
    p.add_argument("--degree-bound", type=int, default=None, help="truncation degree for kuranishi / normal-cone")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME, help="prime for modular cross-checks")
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--dump-basis", default=None, help="write the Groebner bases of I0 and L0 (text format)")
    p.add_argument("--dump-presentation", default=None, help="write the strand presentations of T1 (text format)")
    p.add_argument("--timeout", type=float, default=None, help="per-check time limit in seconds")
    p.add_argument("--timings", action="store_true", help="record per-check wall time (breaks byte-identical output)")


def build_parser():
    parser = argparse.ArgumentParser(prog="ogradlab", description="Exact verification suites for square-zero sp4 elements.")
    parser.add_argument("--version", action="version", version=f"ogradlab {__version__}")
    sub = parser.add_subparsers(dest="suite", required=True)
    for name in SUITES + ("all",):
        p = sub.add_parser(name)
        _common(p)
        if name == "kuranishi":
            p.add_argument("action", nargs="?", choices=("run",), help="run a single model")
            p.add_argument("--model", default=None, help="builtin name, bundled model or JSON model file")
            p.add_argument("--degree", type=int, default=None)
        if name == "normal-cone":
            p.add_argument("action", nargs="?", choices=("run",), help="run a single system")
            p.add_argument("--system", default=None, help="system file in the exactalg text format")
            p.add_argument("--degree", type=int, default=None)
            p.add_argument("--fixture", choices=("pullback", "node", "custom"), default=None)
    return parser


def _degree(args, suite):
    explicit = getattr(args, "degree", None)
    if explicit is not None:
        return explicit
    if args.degree_bound is not None:
        return args.degree_bound
    return DEFAULT_DEGREES[suite]


def _kuranishi_run(args):
    from .kuranishi import cohomology, kuranishi_recursion, load_model, verify_mc_defect
    from .report import SuiteReport, timed

    if not args.model:
        raise UsageError("kuranishi run needs --model")
    try:
        g = load_model(args.model)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read model {args.model!r}: {exc}") from exc
    N = _degree(args, "kuranishi")
    if N < 2:
        raise UsageError("degree must be at least 2")
    rep = SuiteReport("kuranishi")

    def go():
        axioms = g.check()
        sp = cohomology(g)
        out = kuranishi_recursion(g, sp, N)
        ok, residual = verify_mc_defect(g, sp, out)
        details = {
            "model": g.name,
            "dims": g.dims,
            "cohomology": sp.h,
            "axioms": axioms,
            "terms": out.term_counts(),
            "f": {str(n): [p.to_text() for p in v] for n, v in sorted(out.f.items())},
            "defect_in_am": ok,
        }
        return ok and all(axioms.values()), details

    timed(rep, "run", "(d + gamma)^2 - s(f) lies in g^2 (x) a m", go, args.timeout)
    return rep


def _normal_cone_run(args):
    from .normalcone import i0_pullback, load_system, node_system, run_system

    N = _degree(args, "normal-cone")
    if N < 3:
        raise UsageError("degree must be at least 3")
    fixture = args.fixture or ("custom" if args.system else "pullback")
    if fixture == "custom":
        if not args.system:
            raise UsageError("--fixture custom needs --system")
        try:
            system = load_system(args.system)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read system {args.system!r}: {exc}") from exc
    elif fixture == "node":
        system = node_system()
    else:
        system, _ = i0_pullback(N, args.seed)
    return run_system(system, N)


def run_suite(name, args, dumps):
    if name == "verify-model":
        from .ograd_model import run_suite as go

        return go(seed=args.seed, timeout=args.timeout, dump=dumps["basis"])
    if name == "verify-invariants":
        from .invariants import run_suite as go

        return go(seed=args.seed, prime=args.prime, timeout=args.timeout)
    if name == "verify-t1":
        from .t1_fiber import run_suite as go

        return go(timeout=args.timeout, dump=dumps["presentation"])
    if name == "kuranishi":
        if getattr(args, "action", None) == "run":
            return _kuranishi_run(args)
        from .kuranishi.suite import run_suite as go

        return go(seed=args.seed, timeout=args.timeout, degree=_degree(args, "kuranishi"))
    if name == "normal-cone":
        if getattr(args, "action", None) == "run":
            return _normal_cone_run(args)
        from .normalcone import run_suite as go

        return go(degree=_degree(args, "normal-cone"), seed=args.seed, timeout=args.timeout)
    raise UsageError(f"unknown suite {name!r}")


def build_document(args, reports):
    return {
        "tool": "ogradlab",
        "version": __version__,
        "config": {"seed": args.seed, "prime": args.prime, "degree_bound": args.degree_bound},
        "status": "pass" if all(r.ok for r in reports) else "fail",
        "suites": [r.to_dict(timings=args.timings) for r in reports],
    }


def _write_dumps(args, dumps):
    from .exactalg import format_system

    for key, path in (("basis", args.dump_basis), ("presentation", args.dump_presentation)):
        if not path or not dumps[key]:
            continue
        blocks = []
        for name in sorted(dumps[key]):
            obj = dumps[key][name]
            if hasattr(obj, "basis"):
                ring, polys = obj.ring, list(obj.basis)
            elif hasattr(obj, "generators"):
                ring, polys = obj.generators[0].ring, list(obj.generators)
            else:  # a matrix, flattened column by column
                ring = obj.ring
                polys = [p for col in obj.columns() for p in col]
                name = f"{name} ({obj.rows}x{obj.cols}, column-major)"
            blocks.append(f"# {name}\n" + format_system(ring, polys))
        with open(path, "w") as fh:
            fh.write("\n".join(blocks))


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.prime < 2**30:
        parser.error("--prime must exceed 2**30")
    names = SUITES if args.suite == "all" else (args.suite,)
    dumps = {"basis": {} if args.dump_basis else None, "presentation": {} if args.dump_presentation else None}
    try:
        reports = [run_suite(name, args, dumps) for name in names]
    except UsageError as exc:
        print(f"ogradlab: error: {exc}", file=sys.stderr)
        return 2
    document = build_document(args, reports)
    jsonschema.validate(document, load_schema())
    text = to_json(document) if args.format == "json" else to_markdown(document) + "\n"
    _write_dumps(args, dumps)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if document["status"] == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
