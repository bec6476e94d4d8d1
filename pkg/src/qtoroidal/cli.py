"""Command-line front end.

Every command prints one JSON document on stdout.  Exit status is 0 on
success, 1 when a verification fails on the instance and 2 on bad input.
"""

import argparse
import json
import sys

from . import suites
from .errors import InvalidInput, ToroidalError, VerificationFailure
from .fiber import EvalPoints, build_fiber, crt_check, fiber_reps, wedderburn, block_reps
from .graded_modules import (
    FinRep,
    GradedModule,
    check_weyl_invariance,
    decompose_window,
    highest_central_operator,
    hdot_weights,
    loop_vanishing_report,
    vplus,
    vplus_is_dominant,
    weight_multiplicities,
)
from .hc1 import TensorQuotient, graded_dim
from .roots_weyl import simple_roots
from .scalars import as_cyclotomic
from .toroidal import ToroidalElement, bracket, validate_membership
from .torus_form import QMatrix, min_central_power, radf_basis

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(InvalidInput):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    # argparse prints to stderr and exits; we want a JSON error instead
    def error(self, message):
        raise UsageError(message)


# -- input helpers ------------------------------------------------------------


def _load(path):
    if path is None:
        raise UsageError("--config is required")
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}", code="io-error") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}", code="invalid-json") from exc


def _torus(cfg):
    if not isinstance(cfg, dict):
        raise InvalidInput("config must be a JSON object", code="invalid-config")
    return QMatrix.from_json(cfg["torus"] if "torus" in cfg else cfg)


def _degree(text, n):
    if text is None:
        raise UsageError("--r is required")
    try:
        r = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InvalidInput(f"--r expects comma-separated integers, got {text!r}", code="invalid-degree") from exc
    if len(r) != n:
        raise InvalidInput(f"--r has {len(r)} entries, the torus has rank {n}", code="invalid-degree")
    return r


def _d(args, cfg, default=None):
    d = args.d if args.d is not None else cfg.get("d", default) if isinstance(cfg, dict) else default
    if d is None:
        raise UsageError("matrix size missing: pass --d or set \"d\" in the config")
    return int(d)


def _points(args, cfg, q):
    if args.points is not None:
        return EvalPoints.from_json(q, _load(args.points))
    if isinstance(cfg, dict) and "points" in cfg:
        obj = cfg["points"]
        return EvalPoints.from_json(q, obj if isinstance(obj, dict) else {"points": obj})
    return EvalPoints.ones(q)


def _rep(args, cfg, q):
    d = _d(args, cfg, 2)
    name = args.rep or (cfg.get("rep") if isinstance(cfg, dict) else None) or "natural"
    return FinRep.by_name(name, d, q, _points(args, cfg, q))


def _window(args, cfg, default):
    if args.window is not None:
        return args.window
    if isinstance(cfg, dict) and "window" in cfg:
        return int(cfg["window"])
    return default


def _cyc(x):
    return as_cyclotomic(x).to_json()


# -- commands ----------------------------------------------------------------


def torus_describe(args):
    q = _torus(_load(args.config))
    lattice = radf_basis(q)
    return {
        "n": q.n,
        "conductor": q.conductor,
        "exps": [list(r) for r in q.exps],
        "radf_basis": [list(r) for r in lattice.basis],
        "radf_index": lattice.index(),
        "elementary_divisors": list(lattice.elementary_divisors()),
        "N": [min_central_power(q, j) for j in range(q.n)],
    }


def torus_verify(args):
    q = _torus(_load(args.config))
    trials = args.trials or 200
    out = {
        "cocycle": suites.cocycle_suite(q, trials, args.seed),
        "center": suites.center_suite(q, min(trials, 100), 20, args.seed),
        "hc1": suites.hc1_suite(q, min(trials, 50), args.seed),
    }
    out["failures"] = sum(v["failures"] for v in out.values())
    return out


def hc1_dim(args):
    q = _torus(_load(args.config))
    r = _degree(args.r, q.n)
    return {"r": list(r), "dim": graded_dim(q, r)}


def hc1_oracle(args):
    q = _torus(_load(args.config))
    r = _degree(args.r, q.n)
    D = _window(args, {}, 4)
    quotient = TensorQuotient(q, r, D)
    dim = graded_dim(q, r)
    brute = quotient.hc1_dim
    return {
        "r": list(r),
        "support_bound": D,
        "dim": dim,
        "bruteforce": brute,
        "quotient_dim": quotient.dim,
        "unknowns": len(quotient.variables),
        "agree": dim == brute,
        "failures": int(dim != brute),
    }


def bracket_cmd(args):
    cfg = _load(args.config)
    q = _torus(cfg)
    d = _d(args, cfg)
    try:
        x = ToroidalElement.from_json(d, q, cfg["x"])
        y = ToroidalElement.from_json(d, q, cfg["y"])
    except KeyError as exc:
        raise InvalidInput(f"config needs elements \"x\" and \"y\": missing {exc}", code="invalid-config") from exc
    for name, z in (("x", x), ("y", y)):
        if not validate_membership(z):
            raise InvalidInput(f"{name} is not in sl_d(C_q): its trace has a central part", code="not-in-sl")
    z = bracket(x, y)
    return {"d": d, "result": z.to_json(), "in_sl": validate_membership(z)}


def fiber_decompose(args):
    cfg = _load(args.config)
    q = _torus(cfg)
    pts = _points(args, cfg, q)
    fibers = []
    for k in pts.tuples():
        F = build_fiber(q, pts, k)
        w = wedderburn(F)
        entry = {"k": list(k), "values": [_cyc(c) for c in F.values]}
        entry.update(w.to_json())
        fibers.append(entry)
    ok = crt_check(q, pts)
    return {"N": list(pts.N), "fibers": fibers, "crt": ok, "failures": int(not ok)}


def fiber_rep(args):
    cfg = _load(args.config)
    q = _torus(cfg)
    pts = _points(args, cfg, q)
    out = []
    for k in pts.tuples():
        for rep in block_reps(build_fiber(q, pts, k)):
            rep.verify()
            out.append(rep.to_json())
    return {"reps": out, "verified": True}


def _module(args):
    cfg = _load(args.config)
    q = _torus(cfg)
    return cfg, q, _rep(args, cfg, q)


def module_build(args):
    cfg, q, rep = _module(args)
    module = GradedModule(rep)
    trials = args.trials or 50
    axiom = suites.module_axiom_suite(module, trials, args.seed)
    central = suites.central_action_suite(module)
    pi = suites.pi_suite(rep.d, q, rep.reps, trials, args.seed)
    return {
        "rep": rep.label,
        "d": rep.d,
        "dim": rep.dim,
        "fiber_blocks": [r.size for r in rep.reps],
        "module_axiom": axiom,
        "central_action": central,
        "homomorphism": pi,
        "failures": axiom["failures"] + central["failures"] + pi["failures"],
    }


def module_vplus(args):
    cfg, q, rep = _module(args)
    basis = vplus(rep)
    ops = []
    for i in range(q.n):
        op = highest_central_operator(rep, i)
        ops.append(op.to_json() if op is not None else None)
    dominant = vplus_is_dominant(rep)
    labels = hdot_weights(rep, basis)
    # with zero highest weight nothing in H (x) C_q acts, so no operator is expected
    expect_ops = any(x != 0 for key in labels for x in key)
    return {
        "rep": rep.label,
        "dim": len(basis),
        "basis": [[_cyc(x) for x in v] for v in basis],
        "labels": [[str(x) for x in key] for key in labels],
        "dominant": dominant,
        "central_operators": ops,
        "failures": int(not basis) + int(not dominant) + (sum(op is None for op in ops) if expect_ops else 0),
    }


def module_weights(args):
    cfg, q, rep = _module(args)
    mult = weight_multiplicities(rep)
    grades = [tuple(int(i == j) for i in range(q.n)) for j in range(q.n)] + [(0,) * q.n]
    ok = check_weyl_invariance(rep, simple_roots(rep.d, q.n), grades)
    return {
        "rep": rep.label,
        "multiplicities": [{"labels": [str(x) for x in k], "mult": m} for k, m in sorted(mult.items(), reverse=True)],
        "weyl_invariant": ok,
        "failures": int(not ok),
    }


def module_decompose(args):
    cfg, q, rep = _module(args)
    dec = decompose_window(GradedModule(rep), _window(args, cfg, 3))
    out = {"rep": rep.label}
    out.update(dec.to_json())
    return out


def module_lambda(args):
    cfg, q, rep = _module(args)
    K = args.trials or 6
    report = loop_vanishing_report(rep, 0, K)
    report["rep"] = rep.label
    report["failures"] = sum(not r["holds"] for r in report["vectors"])
    return report


def verify_jacobi(args):
    cfg = _load(args.config)
    q = _torus(cfg)
    return suites.jacobi_suite(_d(args, cfg, 2), q, args.trials or 100, args.seed)


def verify_pi(args):
    cfg = _load(args.config)
    q = _torus(cfg)
    pts = _points(args, cfg, q)
    return suites.pi_suite(_d(args, cfg, 2), q, fiber_reps(q, pts), args.trials or 100, args.seed)


def verify_module(args):
    cfg, q, rep = _module(args)
    return suites.module_axiom_suite(GradedModule(rep), args.trials or 100, args.seed)


COMMANDS = {
    ("torus", "describe"): torus_describe,
    ("torus", "verify"): torus_verify,
    ("hc1", "dim"): hc1_dim,
    ("hc1", "oracle"): hc1_oracle,
    ("bracket", None): bracket_cmd,
    ("fiber", "decompose"): fiber_decompose,
    ("fiber", "rep"): fiber_rep,
    ("module", "build"): module_build,
    ("module", "vplus"): module_vplus,
    ("module", "weights"): module_weights,
    ("module", "decompose"): module_decompose,
    ("module", "lambda"): module_lambda,
    ("verify", "jacobi"): verify_jacobi,
    ("verify", "pi"): verify_pi,
    ("verify", "module"): verify_module,
}


def _add_flags(p):
    p.add_argument("--config", metavar="PATH", help="torus config or module config JSON")
    p.add_argument("--r", metavar="a,b,...", help="degree in Z^n")
    p.add_argument("--d", type=int, metavar="INT", help="matrix size d")
    p.add_argument("--window", type=int, metavar="INT", help="window bound B, or the support bound for hc1 oracle")
    p.add_argument("--trials", type=int, metavar="INT", help="trial count (truncation K for module lambda)")
    p.add_argument("--seed", type=int, default=suites.DEFAULT_SEED, metavar="INT", help="random seed")
    p.add_argument("--points", metavar="PATH", help="evaluation points JSON")
    p.add_argument("--rep", metavar="NAME", help="natural, dual, trivial, adjoint, tensor or sum")


def build_parser():
    parser = _Parser(prog="qtoroidal", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)
    actions = {}
    for group, action in COMMANDS:
        actions.setdefault(group, []).append(action)
    for group, acts in actions.items():
        g = groups.add_parser(group)
        if acts == [None]:
            _add_flags(g)
            continue
        sub = g.add_subparsers(dest="action", required=True, parser_class=_Parser)
        for action in acts:
            _add_flags(sub.add_parser(action))
    return parser


def run(argv=None):
    """Execute one command; returns (exit status, JSON-ready dict)."""
    try:
        args = build_parser().parse_args(argv)
        key = (args.group, getattr(args, "action", None))
        result = COMMANDS[key](args)
        status = EXIT_FAIL if result.get("failures", 0) else EXIT_OK
        body = {"schema_version": SCHEMA_VERSION, "command": " ".join(k for k in key if k)}
        body.update(result)
        return status, body
    except VerificationFailure as exc:
        return EXIT_FAIL, {"schema_version": SCHEMA_VERSION, **exc.to_json()}
    except ToroidalError as exc:
        return EXIT_INPUT, {"schema_version": SCHEMA_VERSION, **exc.to_json()}
    except (KeyError, TypeError, ValueError) as exc:
        # malformed but parseable JSON that slipped past the typed loaders
        return EXIT_INPUT, {"schema_version": SCHEMA_VERSION, "error": "invalid-config", "message": repr(exc)}


def main(argv=None):
    status, body = run(argv)
    json.dump(body, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
