"""Command-line front end.

Subcommands::

    exact-c        exact l_1 polarization constant as a fraction
    harris         exact Harris bound for a block profile
    roots          k-th roots of exact l_1 constants
    estimate       norm estimate (poly / multilinear / blocked) for a polynomial file
    ratio          multilinear-to-poly norm ratio for a polynomial file
    bochnak        complexification ratio for a real polynomial file
    quotient-demo  eta-net, lifting, and transfer audit summary
    verify         run a named experiment; exit 0 iff all claims pass

Exit codes: 0 success / all claims pass, 1 a claim failed, 2 usage or input
errors (including malformed polynomial files).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import constants as cn
from . import experiments as xp
from . import optimize as opt
from . import poly as pl
from . import quotient as qt
from .spaces import Field, SpaceSpec

__all__ = ["main", "build_parser"]


def _parse_p(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"p must be a number or 'inf', got {text!r}")
    if p < 1.0:
        raise argparse.ArgumentTypeError(f"p must satisfy p >= 1, got {p}")
    return p


def _parse_parts(text: str):
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _load_poly(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SystemExitError(2, f"{path}: {exc}")
    try:
        return pl.loads_polynomial(text)
    except json.JSONDecodeError as exc:
        raise SystemExitError(2, f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}")
    except ValueError as exc:
        raise SystemExitError(2, f"{path}: {exc}")


class SystemExitError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code
        self.message = message


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polarconst", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("exact-c", help="exact l_1 polarization constant")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--d", type=int, required=True)

    h = sub.add_parser("harris", help="exact Harris bound for a block profile")
    h.add_argument("--parts", type=_parse_parts, required=True, metavar="k1,k2,...")

    r = sub.add_parser("roots", help="k-th roots of exact l_1 constants")
    r.add_argument("--d", type=int, required=True)
    r.add_argument("--k-list", type=_parse_parts, required=True, metavar="k1,k2,...")

    e = sub.add_parser("estimate", help="norm estimate for a polynomial file")
    e.add_argument("--poly", required=True)
    e.add_argument("--p", type=_parse_p, required=True)
    e.add_argument("--field", choices=["real", "complex"])
    e.add_argument("--target", choices=["poly", "multilinear", "blocked"], default="poly")
    e.add_argument("--blocks", type=_parse_parts, metavar="k1,k2,...")
    e.add_argument("--starts", type=int, default=60)
    e.add_argument("--max-iters", type=int, default=400)
    e.add_argument("--seed", type=int, default=0)

    t = sub.add_parser("ratio", help="multilinear / poly norm ratio")
    t.add_argument("--poly", required=True)
    t.add_argument("--p", type=_parse_p, required=True)
    t.add_argument("--field", choices=["real", "complex"])
    t.add_argument("--exact-denominator", type=float)
    t.add_argument("--starts", type=int, default=60)
    t.add_argument("--seed", type=int, default=0)

    b = sub.add_parser("bochnak", help="complexification ratio for a real polynomial")
    b.add_argument("--poly", required=True)
    b.add_argument("--p", type=_parse_p, required=True)
    b.add_argument("--starts", type=int, default=60)
    b.add_argument("--seed", type=int, default=0)

    q = sub.add_parser("quotient-demo", help="eta-net and transfer audit summary")
    q.add_argument("--p", type=_parse_p, required=True)
    q.add_argument("--dim", type=int, required=True)
    q.add_argument("--eta", type=float, required=True)
    q.add_argument("--epsilon", type=float, required=True)
    q.add_argument("--field", choices=["real", "complex"], default="real")
    q.add_argument("--lifts", type=int, default=100)
    q.add_argument("--seed", type=int, default=0)

    v = sub.add_parser("verify", help="run a named experiment")
    v.add_argument("name", choices=sorted(xp.EXPERIMENTS))
    v.add_argument("--json", dest="json_out")
    v.add_argument("--csv", dest="csv_out")
    v.add_argument("--seed", type=int)
    v.add_argument("--force-fail", type=int, help=argparse.SUPPRESS)
    return ap


def _fraction_line(k, d, value) -> str:
    root = float(cn.root_sequence(d, [k])[0][1])
    return f"c({k}, l1^{d}) = {value.numerator}/{value.denominator} = {float(value):.15g}   k-th root {root:.15g}"


def _cmd_exact_c(args) -> int:
    if args.k < 1 or args.d < 1:
        raise SystemExitError(2, "exact-c needs --k >= 1 and --d >= 1")
    print(_fraction_line(args.k, args.d, cn.exact_c_l1(args.k, args.d)))
    return 0


def _cmd_harris(args) -> int:
    try:
        value = cn.harris_bound(args.parts)
    except ValueError as exc:
        raise SystemExitError(2, str(exc))
    print(f"harris{tuple(args.parts)} = {value.numerator}/{value.denominator} = {float(value):.15g}")
    return 0


def _cmd_roots(args) -> int:
    if args.d < 1:
        raise SystemExitError(2, "roots needs --d >= 1")
    try:
        rows = cn.root_sequence(args.d, args.k_list)
    except ValueError as exc:
        raise SystemExitError(2, str(exc))
    for k, root in rows:
        print(f"{k} {root:.15g}")
    return 0


def _space_for(args, P) -> SpaceSpec:
    fld = Field(args.field) if args.field else P.field
    if fld is not P.field:
        raise SystemExitError(2, f"--field {fld.value} does not match the {P.field.value} polynomial")
    return SpaceSpec(P.dim, args.p, fld)


def _cmd_estimate(args) -> int:
    P = _load_poly(args.poly)
    spec = _space_for(args, P)
    cfg = opt.OptimConfig(starts=args.starts, max_iters=args.max_iters, seed=args.seed)
    try:
        if args.target == "poly":
            est = opt.estimate_poly_norm(P, spec, cfg)
        elif args.target == "multilinear":
            est = opt.estimate_multilinear_norm(P, spec, cfg)
        else:
            if not args.blocks:
                raise SystemExitError(2, "--target blocked requires --blocks k1,k2,...")
            est = opt.estimate_blocked_norm(P, args.blocks, spec, cfg)
    except ValueError as exc:
        raise SystemExitError(2, str(exc))
    print(json.dumps(est.to_json_dict(), indent=2))
    return 0


def _cmd_ratio(args) -> int:
    P = _load_poly(args.poly)
    spec = _space_for(args, P)
    cfg = opt.OptimConfig(starts=args.starts, seed=args.seed)
    try:
        est = opt.estimate_ratio(P, spec, cfg, exact_poly_norm=args.exact_denominator)
    except ValueError as exc:
        raise SystemExitError(2, str(exc))
    print(json.dumps(est.to_json_dict(), indent=2))
    return 0


def _cmd_bochnak(args) -> int:
    P = _load_poly(args.poly)
    if P.field is not Field.REAL:
        raise SystemExitError(2, "bochnak needs a real polynomial")
    spec = SpaceSpec(P.dim, args.p, Field.REAL)
    cfg = opt.OptimConfig(starts=args.starts, seed=args.seed)
    try:
        est = opt.estimate_bochnak_ratio(P, spec, cfg)
    except ValueError as exc:
        raise SystemExitError(2, str(exc))
    print(json.dumps(est.to_json_dict(), indent=2))
    return 0


def _cmd_quotient_demo(args) -> int:
    import numpy as np

    spec = SpaceSpec(args.dim, args.p, Field(args.field))
    try:
        Q = qt.build_quotient(spec, args.eta, args.epsilon, args.seed)
    except ValueError as exc:
        raise SystemExitError(2, str(exc))
    rng = np.random.default_rng(args.seed + 1)
    max_l1 = max_res = 0.0
    from .spaces import norm as sp_norm

    for _ in range(args.lifts):
        x = qt._random_unit_rows(spec, 1, rng)[0]
        z = qt.greedy_preimage(Q, x)
        max_l1 = max(max_l1, qt.lift_l1_norm(z))
        max_res = max(max_res, sp_norm(Q.apply(z) - x, spec))
    P = pl.random_polynomial(2, spec.dim, spec.field, args.seed)
    cfg = opt.OptimConfig(starts=30, max_iters=300, seed=args.seed)
    rep = qt.verify_transfer_bound(P, Q, cfg, samples=10, seed=args.seed + 2)
    print(
        json.dumps(
            {
                "d": Q.d,
                "eta": Q.eta,
                "epsilon": Q.epsilon,
                "max_l1_ratio": max_l1,
                "max_residual": max_res,
                "transfer_slack": rep.max_ratio,
            },
            indent=2,
        )
    )
    return 0


def _cmd_verify(args) -> int:
    report = xp.run(args.name, seed=args.seed, perturb_claim=args.force_fail)
    for c in report.claims:
        status = "PASS" if c.passed else "FAIL"
        print(
            f"[{status}] {c.description}: observed {c.observed:.12g} vs expected "
            f"{c.expected:.12g} ({c.direction}, tol {c.tolerance:g})"
        )
    n_fail = sum(not c.passed for c in report.claims)
    print(
        f"{report.name}: {len(report.claims) - n_fail}/{len(report.claims)} claims pass "
        f"in {report.wall_time:.2f}s (seed {report.seed})"
    )
    if args.json_out:
        report.write_json(args.json_out)
    if args.csv_out:
        report.write_csv(args.csv_out)
    return 0 if n_fail == 0 else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    handlers = {
        "exact-c": _cmd_exact_c,
        "harris": _cmd_harris,
        "roots": _cmd_roots,
        "estimate": _cmd_estimate,
        "ratio": _cmd_ratio,
        "bochnak": _cmd_bochnak,
        "quotient-demo": _cmd_quotient_demo,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except SystemExitError as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    except KeyError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
