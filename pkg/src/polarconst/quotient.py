"""Eta-nets on unit spheres and the induced norm-one surjection from l_1^d.

Any finite-dimensional space X is "almost" a quotient of a finite l_1 space:
put an eta-net {h_1, ..., h_d} on the unit sphere of X and map the canonical
l_1^d basis onto it.  The operator has norm <= 1 by the triangle inequality,
and every x in X lifts greedily to z in l_1^d with q(z) = x and
||z||_1 <= ||x|| / (1 - eta) < (1 + epsilon) ||x||: repeatedly subtract the
nearest net point of the normalized residual, whose norm shrinks by a factor
eta per step.

:func:`verify_transfer_bound` audits the resulting relation between
multilinear-form values on X and the exact l_1^d polarization constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import exact_c_l1
from .poly import HomogeneousPolynomial, compose_linear, evaluate
from .polarize import BlockTuple, BudgetError, polarize_blocked
from .spaces import SpaceSpec, as_vector, norm, project_to_sphere

__all__ = [
    "ConvergenceError",
    "QuotientMap",
    "TransferReport",
    "build_eta_net",
    "build_quotient",
    "verify_net_covering",
    "greedy_preimage",
    "lift_l1_norm",
    "apply_quotient",
    "verify_transfer_bound",
]

TRANSFER_MAX_DEGREE = 8


class ConvergenceError(RuntimeError):
    """Greedy lifting did not reach the residual tolerance."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


@dataclass(eq=False)
class QuotientMap:
    """The operator q: l_1^d -> X with q(e_j) = h_j for an eta-net (h_j)."""

    target: SpaceSpec
    points: np.ndarray  # (d, n): net points as rows
    eta: float
    epsilon: float

    def __post_init__(self):
        if not 0.0 < self.eta < 1.0:
            raise ValueError(f"eta must lie in (0, 1), got {self.eta}")
        if 1.0 / (1.0 - self.eta) >= 1.0 + self.epsilon:
            raise ValueError(
                f"need 1/(1-eta) < 1+epsilon; got eta={self.eta}, epsilon={self.epsilon}"
            )

    @property
    def d(self) -> int:
        return self.points.shape[0]

    @property
    def net(self) -> list:
        return [self.points[i] for i in range(self.d)]

    @property
    def matrix(self) -> np.ndarray:
        """(n, d) matrix whose columns are the net points."""
        return self.points.T

    def apply(self, z) -> np.ndarray:
        """q(z) for z given densely or as sparse (index, coefficient) pairs."""
        return apply_quotient(self, z)


def _dist_to_net(points, X, p):
    """Min over net rows of ||x - h||_p, for each row x of X; also argmins."""
    diff = np.abs(X[:, None, :] - points[None, :, :])
    if math.isinf(p):
        d = diff.max(axis=2)
    elif p == 1.0:
        d = diff.sum(axis=2)
    elif p == 2.0:
        d = np.sqrt((diff**2).sum(axis=2))
    else:
        d = (diff**p).sum(axis=2) ** (1.0 / p)
    j = np.argmin(d, axis=1)
    return d[np.arange(len(X)), j], j


def _normalize_rows(V, p):
    A = np.abs(V)
    if math.isinf(p):
        n = A.max(axis=1)
    elif p == 1.0:
        n = A.sum(axis=1)
    elif p == 2.0:
        n = np.sqrt((A * A).sum(axis=1))
    else:
        n = (A**p).sum(axis=1) ** (1.0 / p)
    keep = n > 0
    return V[keep] / n[keep, None]


def _random_unit_rows(spec, count, rng):
    rows = []
    have = 0
    while have < count:
        v = rng.standard_normal((count - have, spec.dim))
        if spec.is_complex:
            v = v + 1j * rng.standard_normal((count - have, spec.dim))
        u = _normalize_rows(v, spec.p)
        if len(u):
            rows.append(u)
            have += len(u)
    return np.concatenate(rows)


def _angular_grid(spec):
    """A deterministic structured sample of the unit sphere."""
    n, cplx = spec.dim, spec.is_complex
    if not cplx and n == 1:
        pts = np.array([[1.0], [-1.0]])
    elif not cplx and n == 2:
        t = np.linspace(0.0, 2.0 * np.pi, 1024, endpoint=False)
        pts = np.stack([np.cos(t), np.sin(t)], axis=1)
    elif not cplx and n == 3:
        # Fibonacci spiral on the 2-sphere
        m = 4096
        i = np.arange(m)
        z = 1.0 - 2.0 * (i + 0.5) / m
        r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
        phi = np.pi * (1.0 + math.sqrt(5.0)) * i
        pts = np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)
    elif cplx and n == 1:
        t = np.linspace(0.0, 2.0 * np.pi, 1024, endpoint=False)
        pts = np.exp(1j * t)[:, None]
    elif cplx and n == 2:
        amps = np.linspace(0.0, np.pi / 2.0, 18)
        phs = np.linspace(0.0, 2.0 * np.pi, 24, endpoint=False)
        a, p1, p2 = np.meshgrid(amps, phs, phs, indexing="ij")
        pts = np.stack(
            [np.cos(a) * np.exp(1j * p1), np.sin(a) * np.exp(1j * p2)], axis=-1
        ).reshape(-1, 2)
    else:
        raise ValueError(
            "net construction supports real dimension <= 3 and complex dimension <= 2"
        )
    return _normalize_rows(pts, spec.p)


def build_eta_net(spec: SpaceSpec, eta: float, seed, sample_size=100_000) -> np.ndarray:
    """An eta-net of the unit sphere, as an array of unit rows.

    Farthest-point insertion over a dense sample (``sample_size`` seeded
    random unit vectors plus a deterministic angular grid) until every sample
    point is within 0.95 * eta of the net; the safety factor keeps fresh
    verification samples covered as well.
    """
    if not 0.0 < eta < 1.0:
        raise ValueError(f"eta must lie in (0, 1), got {eta}")
    if (spec.is_complex and spec.dim > 2) or (not spec.is_complex and spec.dim > 3):
        raise ValueError(
            "net construction supports real dimension <= 3 and complex dimension <= 2 "
            "(covering verification budget)"
        )
    rng = np.random.default_rng(seed)
    grid = _angular_grid(spec)
    sample = np.concatenate([grid, _random_unit_rows(spec, sample_size, rng)])

    threshold = 0.95 * eta
    net = [sample[0]]
    mind, _ = _dist_to_net(np.stack(net), sample, spec.p)
    while True:
        i = int(np.argmax(mind))
        if mind[i] < threshold:
            break
        new = sample[i]
        net.append(new)
        d_new, _ = _dist_to_net(new[None, :], sample, spec.p)
        mind = np.minimum(mind, d_new)
    return np.stack(net)


def verify_net_covering(points, spec: SpaceSpec, eta: float, samples=100_000, seed=1) -> float:
    """Max over fresh random unit samples of the distance to the net."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    chunk = 4096
    left = samples
    while left > 0:
        X = _random_unit_rows(spec, min(chunk, left), rng)
        d, _ = _dist_to_net(points, X, spec.p)
        worst = max(worst, float(d.max()))
        left -= len(X)
    return worst


def build_quotient(spec: SpaceSpec, eta: float, epsilon: float, seed) -> QuotientMap:
    """Net + induced operator, after checking 1/(1-eta) < 1+epsilon."""
    if not 0.0 < eta < 1.0:
        raise ValueError(f"eta must lie in (0, 1), got {eta}")
    if 1.0 / (1.0 - eta) >= 1.0 + epsilon:
        raise ValueError(f"need 1/(1-eta) < 1+epsilon; got eta={eta}, epsilon={epsilon}")
    points = build_eta_net(spec, eta, seed)
    return QuotientMap(target=spec, points=points, eta=eta, epsilon=epsilon)


def apply_quotient(Q: QuotientMap, z) -> np.ndarray:
    if isinstance(z, (list, tuple)) and (len(z) == 0 or isinstance(z[0], tuple)):
        x = np.zeros(Q.target.dim, dtype=Q.target.dtype)
        for j, coeff in z:
            x += coeff * Q.points[j]
        return x
    z = np.asarray(z)
    if z.shape != (Q.d,):
        raise ValueError(f"expected a dense vector of length {Q.d}, got shape {z.shape}")
    return Q.matrix @ z


def greedy_preimage(Q: QuotientMap, x, residual_tol=1e-12, max_steps=200):
    """Sparse z (list of (index, coefficient) pairs) with q(z) = x.

    Step j subtracts delta_j times the net point nearest to the normalized
    residual; delta_{j+1} < eta * delta_j, so ||z||_1 <= ||x|| / (1 - eta)
    and the residual decays geometrically.
    """
    v = as_vector(x, Q.target)
    scale = norm(v, Q.target)
    if scale == 0.0:
        return []
    r = v / scale
    coeffs: dict[int, float] = {}
    delta = 1.0
    for _ in range(max_steps):
        dist, j = _dist_to_net(Q.points, r[None, :] / delta, Q.target.p)
        dist, j = float(dist[0]), int(j[0])
        coeffs[j] = coeffs.get(j, 0.0) + delta
        r = r - delta * Q.points[j]
        res = norm(r, Q.target)
        if res * scale <= residual_tol:
            return sorted((j, c * scale) for j, c in coeffs.items())
        if dist >= Q.eta:
            raise ConvergenceError(
                f"net does not cover the residual direction (step distance {dist:.3e} >= "
                f"eta = {Q.eta}); residual {res * scale:.3e}",
                res * scale,
            )
        delta = res
    raise ConvergenceError(
        f"residual {norm(r, Q.target) * scale:.3e} above {residual_tol} after {max_steps} steps",
        norm(r, Q.target) * scale,
    )


def lift_l1_norm(z) -> float:
    """||z||_1 of a sparse lift."""
    return float(sum(abs(c) for _, c in z))


@dataclass(eq=False)
class TransferReport:
    """Numerical audit of |T(x_1..x_k)| <= (1+eps)^k c(k, l_1^d) ||P||."""

    samples: int
    violations: int
    max_ratio: float
    max_lift_l1_ratio: float
    max_residual: float
    compose_error: float
    d: int
    eta: float
    epsilon: float
    c_l1: float
    poly_norm: float

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_json_dict(self) -> dict:
        return {
            "samples": self.samples,
            "violations": self.violations,
            "max_ratio": self.max_ratio,
            "max_lift_l1_ratio": self.max_lift_l1_ratio,
            "max_residual": self.max_residual,
            "compose_error": self.compose_error,
            "d": self.d,
            "eta": self.eta,
            "epsilon": self.epsilon,
            "c_l1": self.c_l1,
            "poly_norm": self.poly_norm,
        }


def verify_transfer_bound(P: HomogeneousPolynomial, Q: QuotientMap, cfg,
                          samples=20, seed=7, residual_tol=1e-12) -> TransferReport:
    """Check |T(x_1, ..., x_k)| <= (1+eps)^k c(k, l_1^d) ||P||_est (1 + 1e-6)
    on a seeded batch of random unit tuples, lifting each x_i through Q.

    Also forms the composed polynomial on l_1^d and spot-checks that it
    evaluates consistently with P at lifted points.
    """
    from .optimize import estimate_poly_norm  # deferred: avoid a module cycle

    spec = Q.target
    k = P.degree
    if k > TRANSFER_MAX_DEGREE:
        raise BudgetError(f"transfer audit capped at degree {TRANSFER_MAX_DEGREE}, got {k}")
    poly_est = estimate_poly_norm(P, spec, cfg)
    c_val = float(exact_c_l1(k, Q.d)) if k >= 1 else 1.0
    rhs = (1.0 + Q.epsilon) ** k * c_val * poly_est.value * (1.0 + 1e-6)

    composed = compose_linear(P, Q.matrix)
    rng = np.random.default_rng(seed)
    max_ratio = 0.0
    max_lift = 0.0
    max_res = 0.0
    compose_err = 0.0
    violations = 0
    first_lift = None
    for _ in range(samples):
        xs = _random_unit_rows(spec, k, rng)
        for x in xs:
            z = greedy_preimage(Q, x, residual_tol=residual_tol)
            if first_lift is None:
                first_lift = z
            max_lift = max(max_lift, lift_l1_norm(z) / norm(x, spec))
            qz = apply_quotient(Q, z)
            max_res = max(max_res, norm(qz - x, spec))
        lhs = abs(polarize_blocked(P, BlockTuple(tuple((x, 1) for x in xs))))
        if rhs > 0:
            max_ratio = max(max_ratio, lhs / rhs)
        if lhs > rhs:
            violations += 1
    if first_lift is not None:
        # spot-check the composed polynomial at one lifted point
        z0 = np.zeros(Q.d, dtype=np.complex128 if spec.is_complex else np.float64)
        for j, c in first_lift:
            z0[j] = c
        compose_err = abs(
            complex(evaluate(composed, z0)) - complex(evaluate(P, apply_quotient(Q, z0)))
        )
    return TransferReport(
        samples=samples,
        violations=violations,
        max_ratio=max_ratio,
        max_lift_l1_ratio=max_lift,
        max_residual=max_res,
        compose_error=compose_err,
        d=Q.d,
        eta=Q.eta,
        epsilon=Q.epsilon,
        c_l1=c_val,
        poly_norm=poly_est.value,
    )
