"""Named, seeded, end-to-end reproductions of the library's numeric claims.

Each experiment produces an :class:`ExperimentReport` -- a list of claims
with expected value, observed value, tolerance, and direction ("two-sided",
"lower" for observed >= expected - tol, "upper" for observed <= expected +
tol).  Reports are deterministic given (name, params, seed), serialize to
JSON and CSV, and reproduce bit-identically.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
import time
from dataclasses import dataclass

import numpy as np

from . import constants as cn
from . import optimize as opt
from . import poly as pl
from . import quotient as qt
from .polarize import BlockTuple, polarize_blocked, polarize_sign_sum
from .spaces import Field, SpaceSpec
from .spaces import norm as sp_norm

__all__ = ["Claim", "ExperimentReport", "EXPERIMENTS", "default_params", "default_seed", "run"]

DIRECTIONS = ("two-sided", "lower", "upper")


@dataclass
class Claim:
    description: str
    expected: float
    observed: float
    tolerance: float
    direction: str = "two-sided"

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise ValueError(f"direction must be one of {DIRECTIONS}")

    @property
    def passed(self) -> bool:
        if self.direction == "lower":
            return self.observed >= self.expected - self.tolerance
        if self.direction == "upper":
            return self.observed <= self.expected + self.tolerance
        return abs(self.observed - self.expected) <= self.tolerance

    def to_json_dict(self) -> dict:
        return {
            "description": self.description,
            "expected": self.expected,
            "observed": self.observed,
            "tolerance": self.tolerance,
            "direction": self.direction,
            "pass": self.passed,
        }


@dataclass
class ExperimentReport:
    name: str
    params: dict
    claims: list
    seed: int
    wall_time: float = 0.0

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "seed": self.seed,
            "wall_time": self.wall_time,
            "claims": [c.to_json_dict() for c in self.claims],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ExperimentReport":
        claims = [
            Claim(
                description=c["description"],
                expected=c["expected"],
                observed=c["observed"],
                tolerance=c["tolerance"],
                direction=c["direction"],
            )
            for c in d["claims"]
        ]
        return cls(
            name=d["name"],
            params=d["params"],
            claims=claims,
            seed=d["seed"],
            wall_time=d["wall_time"],
        )

    def write_json(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, indent=2)
            fh.write("\n")

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["claim", "expected", "observed", "tolerance", "direction", "pass"])
            for c in self.claims:
                w.writerow(
                    [c.description, repr(c.expected), repr(c.observed), repr(c.tolerance),
                     c.direction, c.passed]
                )


def default_seed(name: str) -> int:
    """Stable per-experiment seed: the first eight digest bytes of the name."""
    digest = hashlib.sha256(name.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") % (2**63)


# -- experiment bodies -----------------------------------------------------------


def _exp_l1_constants_table(params, seed):
    k_max, d_max = params["k_max"], params["d_max"]
    claims = []
    for k in range(1, k_max + 1):
        for d in range(1, d_max + 1):
            closed = cn.exact_c_l1(k, d)
            brute = cn.exact_c_l1_bruteforce(k, d)
            # exact rational equality; the float images then agree exactly
            obs = float(brute) if brute == closed else float("nan")
            claims.append(
                Claim(f"c({k}, l1^{d}) closed form equals enumeration", float(closed), obs, 0.0)
            )
    from fractions import Fraction

    spot = [
        ("c(2, l1^2) = 2", cn.exact_c_l1(2, 2), Fraction(2)),
        ("c(8, l1^2) = 128/35", cn.exact_c_l1(8, 2), Fraction(128, 35)),
        ("c(3, l1^3) = 27/6", cn.exact_c_l1(3, 3), Fraction(27, 6)),
        ("c(5, l1^7) = 5^5/5!", cn.exact_c_l1(5, 7), Fraction(5**5, math.factorial(5))),
    ]
    for text, got, want in spot:
        claims.append(Claim(text, float(want), float(got) if got == want else float("nan"), 0.0))
    return claims


def _exp_l1_roots_convergence(params, seed):
    claims = []
    for d, k, threshold in params["thresholds"]:
        (_, root), = cn.root_sequence(d, [k])
        claims.append(Claim(f"c({k}, l1^{d})^(1/{k}) below {threshold}", threshold, root, 0.0, "upper"))
        claims.append(Claim(f"c({k}, l1^{d})^(1/{k}) at least 1", 1.0, root, 0.0, "lower"))
    d = params["ladder_d"]
    roots = cn.root_sequence(d, params["ladder"])
    for (k1, r1), (k2, r2) in zip(roots, roots[1:]):
        claims.append(
            Claim(f"root at k={k2} not above root at k={k1} (d={d})", r1, r2, 0.0, "upper")
        )
    return claims


def _cfg(params, seed, starts=60, max_iters=400, tol=1e-12):
    return opt.OptimConfig(
        starts=params.get("starts", starts),
        max_iters=params.get("max_iters", max_iters),
        tol=params.get("tol", tol),
        seed=seed,
    )


def _exp_varopoulos_lp3(params, seed):
    V = pl.varopoulos()
    cfg = _cfg(params, seed)
    claims = []
    for p in params["p_values"]:
        pv = math.inf if p == "inf" else float(p)
        spec = SpaceSpec(3, pv, Field.COMPLEX)
        if math.isinf(pv):
            pe = opt.estimate_poly_norm(V, spec, cfg)
            me = opt.estimate_multilinear_norm(V, spec, cfg)
            claims.append(Claim("sup norm on l_inf^3 reaches 5", 5.0, pe.value, 1e-4, "lower"))
            claims.append(Claim("sup norm on l_inf^3 stays below 5", 5.0, pe.value, 1e-6, "upper"))
            claims.append(Claim("multilinear norm on l_inf^3 reaches 6", 6.0, me.value, 1e-4, "lower"))
            claims.append(
                Claim("spectral value on l_2^3 is 2", 2.0, opt.spectral_norm_quadratic(V), 1e-10)
            )
        else:
            be = opt.estimate_blocked_norm(V, (1, 1), spec, cfg)
            re = opt.estimate_ratio(V, spec, cfg)
            lower = 6.0 / 3.0 ** (2.0 / pv)
            claims.append(
                Claim(f"blocked norm on l_{p}^3 reaches 6/3^(2/p)", lower, be.value, 1e-3, "lower")
            )
            claims.append(
                Claim(
                    f"sup norm on l_{p}^3 below interpolation bound",
                    cn.lp3_interpolation_upper_bound(pv),
                    re.poly.value,
                    1e-6,
                    "upper",
                )
            )
            claims.append(
                Claim(
                    f"norm ratio on l_{p}^3 reaches (6/5)^(1-2/p)",
                    cn.lp3_lower_bound(pv),
                    re.ratio,
                    1e-3,
                    "lower",
                )
            )
    return claims


def _exp_real_l1_bochnak(params, seed):
    cfg = _cfg(params, seed)
    spec = SpaceSpec(2, 1.0, Field.REAL)
    claims = []
    for m in params["m_values"]:
        P = pl.real_l1_example(m)
        pe = opt.estimate_poly_norm(P, spec, cfg)
        claims.append(
            Claim(f"real sup norm on l_1^2 is 2^-{6 * m} (m={m})", 2.0 ** (-6 * m), pe.value, 1e-8)
        )
        val = abs(pl.evaluate(pl.complexify(P), np.array([0.5, 0.5j])))
        claims.append(
            Claim(
                f"complex extension at (1/2, i/2) has modulus 2^-{4 * m + 1} (m={m})",
                2.0 ** (-(4 * m + 1)),
                val,
                1e-12,
            )
        )
        br = opt.estimate_bochnak_ratio(P, spec, cfg)
        claims.append(
            Claim(
                f"complexification ratio reaches 2^{2 * m - 1} (m={m})",
                2.0 ** (2 * m - 1),
                br.ratio,
                1e-3,
                "lower",
            )
        )
    return claims


def _exp_banach_hilbert(params, seed):
    n, trials = params["n"], params["trials"]
    spec = SpaceSpec(n, 2.0, Field.COMPLEX)
    cfg = _cfg(params, seed, starts=12, max_iters=300)
    rng = np.random.default_rng(seed)
    dev_poly = dev_multi = dev_ratio = 0.0
    for _ in range(trials):
        P = pl.random_polynomial(2, n, Field.COMPLEX, int(rng.integers(2**62)))
        sigma = opt.spectral_norm_quadratic(P)
        if sigma == 0.0:
            continue
        pe = opt.estimate_poly_norm(P, spec, cfg)
        me = opt.estimate_multilinear_norm(P, spec, cfg)
        dev_poly = max(dev_poly, abs(pe.value - sigma))
        dev_multi = max(dev_multi, abs(me.value - sigma))
        dev_ratio = max(dev_ratio, abs(me.value / pe.value - 1.0))
    claims = [
        Claim("sup-norm estimates match the spectral value", 0.0, dev_poly, 1e-6),
        Claim("multilinear estimates match the spectral value", 0.0, dev_multi, 1e-6),
        Claim("norm ratios on Hilbert space equal 1", 0.0, dev_ratio, 1e-6),
    ]
    # sampling sanity check on l_inf^2, where the degree-2 constant is also 1
    spec_inf = SpaceSpec(2, math.inf, Field.COMPLEX)
    worst = 0.0
    for t in range(params.get("linf2_trials", 10)):
        P = pl.random_polynomial(2, 2, Field.COMPLEX, int(rng.integers(2**62)))
        r = opt.estimate_ratio(P, spec_inf, cfg)
        worst = max(worst, r.ratio)
    claims.append(
        Claim("sampled degree-2 ratios on l_inf^2 stay at 1", 1.0, worst, 1e-3, "upper")
    )
    return claims


def _exp_quotient_lemma(params, seed):
    p = math.inf if params["p"] == "inf" else float(params["p"])
    spec = SpaceSpec(params["dim"], p, Field.REAL)
    eta, eps = params["eta"], params["epsilon"]
    Q = qt.build_quotient(spec, eta, eps, seed)
    claims = []
    covering = qt.verify_net_covering(Q.points, spec, eta, samples=100_000, seed=seed + 1)
    claims.append(Claim("fresh samples are covered within eta", eta, covering, 0.0, "upper"))

    rng = np.random.default_rng(seed + 2)
    max_l1 = max_res = 0.0
    for _ in range(params["lifts"]):
        x = qt._random_unit_rows(spec, 1, rng)[0]
        z = qt.greedy_preimage(Q, x)
        max_l1 = max(max_l1, qt.lift_l1_norm(z))
        max_res = max(max_res, sp_norm(Q.apply(z) - x, spec))
    claims.append(Claim("lift l_1 norms within 1+epsilon", 1.0 + eps, max_l1, 0.0, "upper"))
    claims.append(Claim("lift residuals below 1e-12", 1e-12, max_res, 0.0, "upper"))

    cfg = _cfg(params, seed, starts=30, max_iters=300, tol=1e-11)
    violations = 0
    max_ratio = 0.0
    for i in range(params["polys_per_degree"]):
        for deg in (2, 3):
            P = pl.random_polynomial(deg, spec.dim, Field.REAL, seed + 100 * deg + i)
            rep = qt.verify_transfer_bound(P, Q, cfg, samples=params["tuples_per_poly"],
                                           seed=seed + i)
            violations += rep.violations
            max_ratio = max(max_ratio, rep.max_ratio)
    claims.append(Claim("transfer inequality violations", 0.0, float(violations), 0.0))
    claims.append(Claim("transfer slack ratio stays below 1", 1.0, max_ratio, 0.0, "upper"))
    return claims


def _exp_harris_audit(params, seed):
    cfg = _cfg(params, seed, starts=30)
    claims = []
    V = pl.varopoulos()
    spec_inf = SpaceSpec(3, math.inf, Field.COMPLEX)
    exact_norm = 5.0
    for parts in ((1, 1), (2,)):
        be = opt.estimate_blocked_norm(V, parts, spec_inf, cfg)
        bound = float(cn.harris_bound(parts)) * exact_norm
        claims.append(
            Claim(
                f"Varopoulos blocked {parts} within Harris bound on l_inf^3",
                1.0,
                be.value / bound,
                1e-9,
                "upper",
            )
        )
    n = params["n"]
    spec2 = SpaceSpec(n, 2.0, Field.COMPLEX)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(params["trials"]):
        P = pl.random_polynomial(2, n, Field.COMPLEX, int(rng.integers(2**62)))
        sigma = opt.spectral_norm_quadratic(P)
        if sigma == 0.0:
            continue
        for parts in ((1, 1), (2,)):
            be = opt.estimate_blocked_norm(P, parts, spec2, cfg)
            bound = float(cn.harris_bound(parts)) * sigma
            worst = max(worst, be.value / bound)
    claims.append(
        Claim("random quadratics stay within Harris bounds on l_2", 1.0, worst, 1e-9, "upper")
    )
    return claims


def _exp_polarization_oracle(params, seed):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(params["trials"]):
        k = int(rng.integers(1, params["k_max"] + 1))
        n = int(rng.integers(1, params["n_max"] + 1))
        fld = Field.COMPLEX if rng.integers(2) else Field.REAL
        P = pl.random_polynomial(k, n, fld, int(rng.integers(2**62)))
        args = rng.standard_normal((k, n))
        if fld is Field.COMPLEX:
            args = args + 1j * rng.standard_normal((k, n))
        args = [a / np.linalg.norm(a) for a in args]
        ss = polarize_sign_sum(P, args)
        bl = polarize_blocked(P, BlockTuple(tuple((a, 1) for a in args)))
        worst = max(worst, abs(ss - bl) / (1.0 + abs(bl)))
    return [Claim("sign-sum and blocked evaluators agree", 0.0, worst, 1e-9)]


EXPERIMENTS = {
    "l1-constants-table": _exp_l1_constants_table,
    "l1-roots-convergence": _exp_l1_roots_convergence,
    "varopoulos-lp3": _exp_varopoulos_lp3,
    "real-l1-bochnak": _exp_real_l1_bochnak,
    "banach-hilbert": _exp_banach_hilbert,
    "quotient-lemma": _exp_quotient_lemma,
    "harris-audit": _exp_harris_audit,
    "polarization-oracle": _exp_polarization_oracle,
}

_DEFAULT_PARAMS = {
    "l1-constants-table": {"k_max": 12, "d_max": 6},
    "l1-roots-convergence": {
        "thresholds": [[3, 999, 1.01], [2, 10000, 1.002]],
        "ladder_d": 3,
        "ladder": [12, 48, 192, 768],
    },
    "varopoulos-lp3": {"p_values": ["inf", 3, 4, 8]},
    "real-l1-bochnak": {"m_values": [1, 2]},
    "banach-hilbert": {"n": 4, "trials": 50},
    "quotient-lemma": {
        "p": 2,
        "dim": 2,
        "eta": 0.1,
        "epsilon": 0.2,
        "lifts": 100,
        "polys_per_degree": 10,
        "tuples_per_poly": 5,
    },
    "harris-audit": {"n": 3, "trials": 20},
    "polarization-oracle": {"trials": 200, "k_max": 6, "n_max": 4},
}


def default_params(name: str) -> dict:
    return json.loads(json.dumps(_DEFAULT_PARAMS[name]))


def run(name: str, params: dict | None = None, seed: int | None = None,
        perturb_claim: int | None = None) -> ExperimentReport:
    """Run a registered experiment; deterministic given (name, params, seed).

    ``perturb_claim`` is a test hook: it shifts one claim's expected value by
    10 * (tolerance + 1) so that failure handling can be exercised.
    """
    if name not in EXPERIMENTS:
        raise KeyError(f"unknown experiment {name!r}; known: {sorted(EXPERIMENTS)}")
    merged = default_params(name)
    merged.update(params or {})
    if seed is None:
        seed = default_seed(name)
    t0 = time.perf_counter()
    claims = EXPERIMENTS[name](merged, seed)
    wall = time.perf_counter() - t0
    if perturb_claim is not None:
        c = claims[perturb_claim]
        shift = 10.0 * (c.tolerance + 1.0)
        shifted = shift if c.direction != "upper" else -shift
        claims[perturb_claim] = Claim(
            c.description + " [perturbed]", c.expected + shifted, c.observed,
            c.tolerance, c.direction
        )
    return ExperimentReport(name=name, params=merged, claims=claims, seed=seed, wall_time=wall)
