"""Deterministic multistart maximizers for sup-type polynomial norms.

Every estimator returns a certified lower bound: the reported value is the
objective re-evaluated at the stored witness, which is a feasible point, so
the bound is true by construction.  Exact shortcuts are used where they
exist: degree-1 norms via dual alignment, degree-2 norms on l_2 via the
spectral oracle, and multiplicity-1 slots of the alternating optimizer via
dual alignment of the induced linear functional.

The generic path maximizes the scale-invariant objective |P(x)| / ||x||^k by
gradient ascent on |P|^2 with renormalization to the sphere and backtracking
line search; complex spaces are handled through 2n real coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .poly import (
    HomogeneousPolynomial,
    complexify,
    compose_linear,
    evaluate,
    gradient,
)
from .polarize import BlockTuple, polarize_blocked, _factorial_ratio
from .spaces import Field, SpaceSpec, dual_align, norm, project_to_sphere

__all__ = [
    "OptimConfig",
    "NormEstimate",
    "RatioEstimate",
    "BochnakEstimate",
    "estimate_poly_norm",
    "estimate_multilinear_norm",
    "estimate_blocked_norm",
    "spectral_norm_quadratic",
    "estimate_ratio",
    "estimate_bochnak_ratio",
]


@dataclass(frozen=True)
class OptimConfig:
    starts: int = 200
    max_iters: int = 500
    tol: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if self.starts < 1 or self.max_iters < 1 or self.tol <= 0:
            raise ValueError("need starts >= 1, max_iters >= 1, tol > 0")


@dataclass(eq=False)
class NormEstimate:
    """Certified lower bound, its witness, and optimizer telemetry."""

    value: float
    witness: object  # unit vector, list of vectors, or BlockTuple
    kind: str  # "poly" | "multilinear" | "blocked"
    converged_starts: int
    config: OptimConfig

    def witness_vectors(self) -> list:
        """The witness expanded to a flat list of vectors (blocks repeated)."""
        if isinstance(self.witness, BlockTuple):
            out = []
            for v, m in self.witness:
                out.extend([v] * m)
            return out
        if isinstance(self.witness, np.ndarray):
            return [self.witness]
        return list(self.witness)

    def to_json_dict(self) -> dict:
        def enc(v):
            v = np.asarray(v, dtype=np.complex128)
            return [[float(z.real), float(z.imag)] for z in v]

        if isinstance(self.witness, np.ndarray):
            wit = enc(self.witness)
        else:
            wit = [enc(v) for v in self.witness_vectors()]
        return {
            "value": self.value,
            "kind": self.kind,
            "witness": wit,
            "converged_starts": self.converged_starts,
            "seed": self.config.seed,
        }


@dataclass(eq=False)
class RatioEstimate:
    poly: NormEstimate
    multilinear: NormEstimate
    ratio: float
    rigorous: bool
    exact_poly_norm: float | None = None

    def to_json_dict(self) -> dict:
        d = {
            "poly": self.poly.to_json_dict(),
            "multilinear": self.multilinear.to_json_dict(),
            "ratio": self.ratio,
            "rigorous": self.rigorous,
        }
        if self.exact_poly_norm is not None:
            d["exact_denominator"] = self.exact_poly_norm
        return d


@dataclass(eq=False)
class BochnakEstimate:
    real_norm: NormEstimate
    complex_norm: NormEstimate
    ratio: float

    def to_json_dict(self) -> dict:
        return {
            "real_norm": self.real_norm.to_json_dict(),
            "complex_norm": self.complex_norm.to_json_dict(),
            "ratio": self.ratio,
        }


# -- shared helpers ------------------------------------------------------------


def _check_compatible(P: HomogeneousPolynomial, spec: SpaceSpec):
    if P.dim != spec.dim:
        raise ValueError(f"polynomial dimension {P.dim} does not match space dimension {spec.dim}")
    if P.field is not spec.field:
        raise ValueError(
            f"{P.field.value} polynomial on a {spec.field.value} space; complexify first"
        )


def _unit_ones(spec: SpaceSpec) -> np.ndarray:
    return project_to_sphere(np.ones(spec.dim, dtype=spec.dtype), spec)


def _unit_basis(spec: SpaceSpec, j=0) -> np.ndarray:
    e = np.zeros(spec.dim, dtype=spec.dtype)
    e[j] = 1.0
    return e


def _random_unit(rng, spec: SpaceSpec) -> np.ndarray:
    while True:
        v = rng.standard_normal(spec.dim)
        if spec.is_complex:
            v = v + 1j * rng.standard_normal(spec.dim)
        if np.any(v != 0):
            return project_to_sphere(v, spec)


def _scalar_phase(z) -> complex:
    a = abs(z)
    return z / a if a != 0 else 1.0


def _witness_key(vectors):
    flat = np.concatenate([np.asarray(v, dtype=np.complex128) for v in vectors])
    return tuple(np.stack([flat.real, flat.imag], axis=1).ravel())


def _coordinate_profile(P: HomogeneousPolynomial, x, j):
    """Coefficients of P as a univariate polynomial in x_j, others frozen."""
    A, c = P.monomial_tables()
    others = [l for l in range(P.dim) if l != j]
    xc = np.asarray(x, dtype=np.complex128)
    base = np.prod(xc[None, others] ** A[:, others], axis=1) * c
    q = np.zeros(P.degree + 1, dtype=np.complex128)
    np.add.at(q, A[:, j], base)
    return q


def _max_abs_on_circle(q, samples=1024):
    """(z*, |q(z*)|) maximizing |q| over the unit circle: grid + Newton polish."""
    qd = np.polynomial.polynomial.polyder(q)
    qdd = np.polynomial.polynomial.polyder(qd)
    theta = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
    z = np.exp(1j * theta)
    vals = np.abs(np.polynomial.polynomial.polyval(z, q))
    i = int(np.argmax(vals))
    best_t, best_v = theta[i], float(vals[i])
    t = best_t
    for _ in range(30):
        e = np.exp(1j * t)
        w = np.polynomial.polynomial.polyval(e, q)
        wd = 1j * e * np.polynomial.polynomial.polyval(e, qd)
        wdd = -(e**2) * np.polynomial.polynomial.polyval(e, qdd) - e * np.polynomial.polynomial.polyval(e, qd)
        # f = |w|^2, f' = 2 Re(conj(w) w'), f'' = 2 Re(|w'|^2 + conj(w) w'')
        f1 = 2.0 * np.real(np.conj(w) * wd)
        f2 = 2.0 * np.real(np.abs(wd) ** 2 + np.conj(w) * wdd)
        if f2 >= 0.0 or f1 == 0.0:
            break
        step = f1 / f2
        t_new = t - step
        v_new = float(abs(np.polynomial.polynomial.polyval(np.exp(1j * t_new), q)))
        if v_new >= best_v:
            best_t, best_v = t_new, v_new
        if abs(step) < 1e-15:
            break
        t = t_new
    return np.exp(1j * best_t), best_v


def _max_abs_on_interval(q):
    """(t*, |q(t*)|) maximizing |q| over [-1, 1] for real coefficients q."""
    qr = np.real(q)
    cands = [-1.0, 1.0]
    if len(qr) > 1:
        der = np.polynomial.polynomial.polyder(qr)
        if np.any(der != 0):
            roots = np.polynomial.polynomial.polyroots(der)
            for r in roots:
                if abs(np.imag(r)) < 1e-9 and -1.0 <= np.real(r) <= 1.0:
                    cands.append(float(np.real(r)))
    vals = [abs(float(np.polynomial.polynomial.polyval(t, qr))) for t in cands]
    i = int(np.argmax(vals))
    return cands[i], vals[i]


def _polydisc_max(P: HomogeneousPolynomial, spec: SpaceSpec, x0, max_iters, tol):
    """Cyclic exact coordinate maximization of |P| over the sup-norm ball.

    Each coordinate subproblem is one-dimensional: max |q| over the unit
    circle (complex) or over [-1, 1] (real), both solved exactly.  The plain
    renormalized gradient scheme stalls on the sup-norm sphere's kinks, so
    p = inf requests route here instead.
    """
    x = project_to_sphere(x0, spec).copy()
    f = abs(evaluate(P, x))
    for _ in range(max_iters):
        f0 = f
        for j in range(P.dim):
            q = _coordinate_profile(P, x, j)
            if not np.any(q[1:] != 0):
                continue
            if spec.is_complex:
                zj, val = _max_abs_on_circle(q)
            else:
                zj, val = _max_abs_on_interval(q)
            if val > f:
                x[j] = zj
                f = val
        if f - f0 <= tol * max(f, 1e-300):
            x = project_to_sphere(x, spec)
            return x, abs(evaluate(P, x)), True
    x = project_to_sphere(x, spec)
    return x, abs(evaluate(P, x)), False


def _sphere_max(P: HomogeneousPolynomial, spec: SpaceSpec, x0, max_iters, tol):
    """Dispatch the single-polynomial sphere maximization by norm geometry."""
    if math.isinf(spec.p):
        return _polydisc_max(P, spec, x0, max_iters, tol)
    return _ascend(P, spec, x0, max_iters, tol)


def _ascend(P: HomogeneousPolynomial, spec: SpaceSpec, x0, max_iters, tol):
    """Maximize |P(x)| / ||x||^k from x0; returns (unit x, |P(x)|, converged)."""
    x = project_to_sphere(x0, spec)
    f = abs(evaluate(P, x))
    step = 0.5
    for _ in range(max_iters):
        val = evaluate(P, x)
        g = gradient(P, x)
        d = _scalar_phase(val) * np.conj(g)
        dn = float(np.sqrt((np.abs(d) ** 2).sum()))
        if dn == 0.0:
            return x, f, True
        d = d / dn
        if not spec.is_complex:
            d = d.real
        step = min(step * 2.0, 1.0)
        fn, xn = f, x
        improved = False
        while step > 1e-18:
            cand = x + step * d
            n = norm(cand, spec)
            if n > 0.0:
                cand = cand / n
                fc = abs(evaluate(P, cand))
                if fc > f:
                    xn, fn, improved = cand, fc, True
                    break
            step /= 2.0
        if not improved:
            return x, f, True
        gain = fn - f
        x, f = xn, fn
        if gain <= tol * max(f, 1e-300):
            return x, f, True
    return x, f, False


# -- spectral oracle for quadratics on l_2 ---------------------------------------


def _quadratic_matrix(P: HomogeneousPolynomial) -> np.ndarray:
    """The symmetric coefficient matrix A with P(x) = x^T A x."""
    if P.degree != 2:
        raise ValueError(f"need a degree-2 polynomial, got degree {P.degree}")
    n = P.dim
    A = np.zeros((n, n), dtype=np.complex128)
    for alpha, c in P.terms.items():
        idx = [j for j, e in enumerate(alpha) if e > 0]
        if len(idx) == 1:
            A[idx[0], idx[0]] = c
        else:
            i, j = idx
            A[i, j] = A[j, i] = c / 2.0
    return A


def _top_singular(A, tol=1e-13, max_iters=20000):
    """Largest singular value of A and a top right-singular vector.

    Power iteration on A* A with a fixed seeded start; deterministic.  A
    real matrix is iterated with a real start, so the vector stays real.
    """
    n = A.shape[0]
    B = A.conj().T @ A
    rng = np.random.default_rng(0x5EED)
    v = rng.standard_normal(n)
    if np.iscomplexobj(A):
        v = v + 1j * rng.standard_normal(n)
    v = v / np.linalg.norm(v)
    mu_old = -1.0
    for _ in range(max_iters):
        w = B @ v
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0, v
        v = w / nw
        mu = float(np.real(np.vdot(v, B @ v)))
        if abs(mu - mu_old) <= tol * max(mu, 1e-300):
            break
        mu_old = mu
    return math.sqrt(max(mu, 0.0)), v


def spectral_norm_quadratic(P: HomogeneousPolynomial, n=None) -> float:
    """||P|| = ||T|| = sigma_max(A) for degree-2 P on complex l_2^n.

    A is the symmetric coefficient matrix; by the classical Hilbert-space
    identity both the sup norm and the bilinear norm equal its largest
    singular value.  Real polynomials must be complexified first.
    """
    if P.field is not Field.COMPLEX:
        raise ValueError("spectral oracle expects a complex polynomial; complexify first")
    if n is not None and n != P.dim:
        raise ValueError(f"n = {n} does not match polynomial dimension {P.dim}")
    A = _quadratic_matrix(P)
    sigma, _ = _top_singular(A)
    return sigma


def _quadratic_l2_witness(P: HomogeneousPolynomial, spec: SpaceSpec):
    """A unit vector w on l_2 with |P(w)| = sigma_max.

    With T(v) = conj(A v) / sigma (antilinear, an involution on the top
    singular space), v + T(v) is a fixed point and v - T(v) an anti-fixed
    point; either yields |w^T A w| = sigma ||w||^2, and their norms cannot
    both be small, so the larger one is kept.
    """
    A = _quadratic_matrix(P)
    if not spec.is_complex:
        A = A.real
    sigma, v = _top_singular(A)
    if sigma == 0.0:
        return _unit_basis(spec), 0.0
    t = np.conj(A @ v) / sigma
    if np.linalg.norm(v + t) >= np.linalg.norm(v - t):
        w = v + t
    else:
        w = 1j * (v - t) if spec.is_complex else v - t
    w = w / np.linalg.norm(w)
    return w.astype(spec.dtype, copy=False), sigma


# -- norm of the polynomial ------------------------------------------------------


def estimate_poly_norm(P: HomogeneousPolynomial, spec: SpaceSpec, cfg: OptimConfig,
                       _extra_starts=()) -> NormEstimate:
    """Lower bound for sup_{||x||=1} |P(x)| with a unit witness."""
    _check_compatible(P, spec)
    k = P.degree

    def done(value, witness, converged):
        return NormEstimate(float(value), witness, "poly", converged, cfg)

    if P.is_zero:
        return done(0.0, _unit_basis(spec), cfg.starts)
    if k == 0:
        w = _unit_basis(spec)
        return done(abs(evaluate(P, w)), w, cfg.starts)
    if k == 1:
        c = np.zeros(spec.dim, dtype=np.complex128)
        for alpha, coeff in P.terms.items():
            c[alpha.index(1)] = coeff
        if not spec.is_complex:
            c = c.real
        w = dual_align(c, spec)
        return done(abs(evaluate(P, w)), w, cfg.starts)
    if k == 2 and spec.p == 2.0:
        Pc = P if P.field is Field.COMPLEX else complexify(P)
        w, _ = _quadratic_l2_witness(Pc, spec)
        return done(abs(evaluate(P, w)), w, cfg.starts)

    rng = np.random.default_rng(cfg.seed)
    starts = [_unit_ones(spec)]
    starts.extend(np.asarray(v) for v in _extra_starts)
    while len(starts) < cfg.starts:
        starts.append(_random_unit(rng, spec))
    starts = starts[: max(cfg.starts, len(starts))]

    best_f, best_x, best_key, converged_n = -1.0, None, None, 0
    for x0 in starts:
        x, f, conv = _sphere_max(P, spec, x0, cfg.max_iters, cfg.tol)
        converged_n += int(conv)
        key = None
        if f > best_f:
            best_f, best_x, best_key = f, x, key
        elif f == best_f and best_x is not None:
            key = _witness_key([x])
            if best_key is None:
                best_key = _witness_key([best_x])
            if key < best_key:
                best_x, best_key = x, key
    return done(abs(evaluate(P, best_x)), best_x, converged_n)


# -- alternating optimizer for blocked / multilinear norms ------------------------


def _slot_slice(P, vectors, mults, i, spec):
    """The slot-i objective as (scale, polynomial in the slot variable).

    Freezing every block but i, y -> T(x_1^{k_1}, ..., y^{k_i}, ...) equals
    scale * h(y) for the polynomial h read off one expansion of P along the
    frozen block vectors and the coordinate directions.
    """
    k = P.degree
    s = len(mults)
    n = P.dim
    if s == 1:
        return 1.0, P
    others = [vectors[l] for l in range(s) if l != i]
    M = np.column_stack([*others, np.eye(n)])
    if spec.is_complex:
        M = M.astype(np.complex128)
    Q = compose_linear(P, M)
    prefix = tuple(mults[l] for l in range(s) if l != i)
    terms = {}
    for key, c in Q.terms.items():
        if key[: s - 1] == prefix:
            terms[key[s - 1 :]] = c
    scale = _factorial_ratio(mults, k)
    h = HomogeneousPolynomial(mults[i], n, Q.field, terms)
    return scale, h


def _blocked_multistart(P, parts, spec, cfg, kind):
    _check_compatible(P, spec)
    k = P.degree
    if k < 1:
        raise ValueError("blocked norms need degree >= 1")
    mults = tuple(int(m) for m in parts)
    if any(m < 1 for m in mults):
        raise ValueError("all block multiplicities must be >= 1")
    if sum(mults) != k:
        raise ValueError(f"multiplicities {mults} sum to {sum(mults)}, degree is {k}")
    s = len(mults)

    def finish(value, vectors, converged):
        witness = (
            list(vectors) if kind == "multilinear" else BlockTuple(tuple(zip(vectors, mults)))
        )
        return NormEstimate(float(value), witness, kind, converged, cfg)

    if P.is_zero:
        return finish(0.0, [_unit_basis(spec)] * s, cfg.starts)

    poly_est = estimate_poly_norm(P, spec, cfg)
    rng = np.random.default_rng([cfg.seed, 0xB10C])
    start_tuples = [tuple(_unit_ones(spec) for _ in range(s)),
                    tuple(np.array(poly_est.witness) for _ in range(s))]
    while len(start_tuples) < max(cfg.starts, 2):
        start_tuples.append(tuple(_random_unit(rng, spec) for _ in range(s)))
    start_tuples = start_tuples[: max(cfg.starts, 2)]

    inner_iters = min(cfg.max_iters, 80)
    bilinear_A = _quadratic_matrix(P) if (k == 2 and s == 2) else None
    if bilinear_A is not None and not spec.is_complex:
        bilinear_A = bilinear_A.real

    def sweep_bilinear(vectors, val):
        # degree-2, two free slots: the slot functional is just A @ other
        for i in (0, 1):
            phi = bilinear_A @ vectors[1 - i]
            if not np.any(phi != 0):
                continue
            y = dual_align(phi, spec)
            vectors[i] = y
            val = abs(complex(np.dot(phi, y)))
        return val

    def sweep_generic(vectors, val):
        for i in range(s):
            scale, h = _slot_slice(P, vectors, mults, i, spec)
            if h.is_zero:
                continue
            if mults[i] == 1:
                phi = np.zeros(P.dim, dtype=np.complex128)
                for alpha, c in h.terms.items():
                    phi[alpha.index(1)] = c
                if not spec.is_complex:
                    phi = phi.real
                y = dual_align(phi, spec)
                val = scale * abs(complex(np.dot(phi, y)))
            else:
                y, fh, _ = _sphere_max(h, spec, vectors[i], inner_iters, cfg.tol)
                val = scale * fh
            vectors[i] = y
        return val

    sweep = sweep_bilinear if bilinear_A is not None else sweep_generic
    best_f, best_vecs, best_key, converged_n = -1.0, None, None, 0
    for tup in start_tuples:
        vectors = [v.copy() for v in tup]
        val = 0.0
        converged = False
        for _ in range(cfg.max_iters):
            cur = sweep(vectors, val)
            gain = cur - val
            val = cur
            if gain <= cfg.tol * max(val, 1e-300):
                converged = True
                break
        converged_n += int(converged)
        if val > best_f:
            best_f, best_vecs, best_key = val, vectors, None
        elif val == best_f and best_vecs is not None:
            key = _witness_key(vectors)
            if best_key is None:
                best_key = _witness_key(best_vecs)
            if key < best_key:
                best_vecs, best_key = vectors, key
    certified = abs(polarize_blocked(P, BlockTuple(tuple(zip(best_vecs, mults)))))
    return finish(certified, best_vecs, converged_n)


def estimate_multilinear_norm(P: HomogeneousPolynomial, spec: SpaceSpec,
                              cfg: OptimConfig) -> NormEstimate:
    """Lower bound for sup |T(x_1, ..., x_k)| over unit vectors.

    Alternating maximization: with all slots but one frozen the objective is
    linear in the free slot, so each update is an exact dual alignment.
    """
    return _blocked_multistart(P, (1,) * P.degree, spec, cfg, "multilinear")


def estimate_blocked_norm(P: HomogeneousPolynomial, parts, spec: SpaceSpec,
                          cfg: OptimConfig) -> NormEstimate:
    """Lower bound for sup |T(x_1^{k_1}, ..., x_s^{k_s})| over unit vectors."""
    return _blocked_multistart(P, tuple(parts), spec, cfg, "blocked")


# -- derived ratio estimators ------------------------------------------------------


def estimate_ratio(P: HomogeneousPolynomial, spec: SpaceSpec, cfg: OptimConfig,
                   exact_poly_norm: float | None = None) -> RatioEstimate:
    """multilinear / poly norm ratio; a rigorous constant lower bound only
    when an exact denominator is supplied (the estimated one is itself a
    lower bound)."""
    poly_est = estimate_poly_norm(P, spec, cfg)
    multi_est = estimate_multilinear_norm(P, spec, cfg)
    denom = exact_poly_norm if exact_poly_norm is not None else poly_est.value
    if denom == 0:
        raise ValueError("degenerate ratio: the polynomial norm is zero")
    return RatioEstimate(
        poly=poly_est,
        multilinear=multi_est,
        ratio=multi_est.value / denom,
        rigorous=exact_poly_norm is not None,
        exact_poly_norm=exact_poly_norm,
    )


def estimate_bochnak_ratio(P: HomogeneousPolynomial, spec: SpaceSpec,
                           cfg: OptimConfig) -> BochnakEstimate:
    """||P~|| / ||P||: norm growth of the complex extension of a real P.

    The complexification of a real l_p^n is l_p^n over C, so the numerator is
    the sup norm of the same coefficient map on the complex sphere.
    """
    if P.field is not Field.REAL or spec.field is not Field.REAL:
        raise ValueError("bochnak ratio is defined for real polynomials on real spaces")
    real_est = estimate_poly_norm(P, spec, cfg)
    cspec = SpaceSpec(spec.dim, spec.p, Field.COMPLEX)
    complex_est = estimate_poly_norm(complexify(P), cspec, cfg)
    if real_est.value == 0:
        raise ValueError("degenerate ratio: the real norm is zero")
    return BochnakEstimate(real_est, complex_est, complex_est.value / real_est.value)
