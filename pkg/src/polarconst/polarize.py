"""Two evaluators of the symmetric k-linear form associated with a polynomial.

For a k-homogeneous P there is a unique symmetric k-linear form T with
P(x) = T(x, ..., x).  This module computes T two independent ways:

* :func:`polarize_sign_sum` -- the 2^k sign average
  T(x_1, ..., x_k) = (1 / (k! 2^k)) sum_{eps in {-1,1}^k} eps_1...eps_k
  P(sum_i eps_i x_i).  Exponential in k; kept as a validation oracle and
  capped at k <= 24.

* :func:`polarize_blocked` -- coefficient extraction: T(x_1^{k_1}, ...,
  x_s^{k_s}) is (k_1! ... k_s! / k!) times the coefficient of
  t_1^{k_1}...t_s^{k_s} in the expansion of P(t_1 x_1 + ... + t_s x_s).
  Polynomial cost; this is the production path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .poly import HomogeneousPolynomial, compose_linear, evaluate, evaluate_many
from .spaces import Field

__all__ = [
    "BudgetError",
    "BlockTuple",
    "polarize_sign_sum",
    "polarize_blocked",
    "derivative_pairing",
    "SIGN_SUM_MAX_DEGREE",
]

SIGN_SUM_MAX_DEGREE = 24


class BudgetError(ValueError):
    """The requested computation exceeds a documented cost cap."""


@dataclass(eq=False)
class BlockTuple:
    """Arguments (x_1^{k_1}, ..., x_s^{k_s}) of a symmetric multilinear form."""

    blocks: tuple

    def __post_init__(self):
        blocks = []
        dim = None
        for vec, mult in self.blocks:
            v = np.asarray(vec)
            if v.ndim != 1:
                raise ValueError("block vectors must be 1-D")
            if dim is None:
                dim = v.shape[0]
            elif v.shape[0] != dim:
                raise ValueError("all block vectors must share one dimension")
            mult = int(mult)
            if mult < 1:
                raise ValueError("block multiplicities must be positive")
            blocks.append((v, mult))
        object.__setattr__(self, "blocks", tuple(blocks))

    @property
    def total(self) -> int:
        return sum(m for _, m in self.blocks)

    @property
    def dim(self) -> int:
        return self.blocks[0][0].shape[0]

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)


def _as_blocks(bt) -> BlockTuple:
    return bt if isinstance(bt, BlockTuple) else BlockTuple(tuple(bt))


def _factorial_ratio(mults, k):
    # (k_1! ... k_s!) / k! through log-factorials; exact 1.0 for a single block
    return math.exp(sum(math.lgamma(m + 1) for m in mults) - math.lgamma(k + 1))


def _maybe_real(P, vectors, value):
    if P.field is Field.REAL and not any(np.iscomplexobj(v) for v in vectors):
        return value.real
    return value


def polarize_sign_sum(P: HomogeneousPolynomial, args):
    """The symmetric form at (x_1, ..., x_k) via the 2^k sign average."""
    k = P.degree
    if k < 1:
        raise ValueError("polarization needs degree >= 1")
    if k > SIGN_SUM_MAX_DEGREE:
        raise BudgetError(f"sign sum needs 2^{k} evaluations; cap is k <= {SIGN_SUM_MAX_DEGREE}")
    vecs = [np.asarray(a) for a in args]
    if len(vecs) != k:
        raise ValueError(f"expected {k} argument vectors, got {len(vecs)}")
    X = np.stack(vecs)  # (k, n)
    if X.shape[1] != P.dim:
        raise ValueError(f"argument dimension {X.shape[1]} does not match {P.dim}")
    total = 0j
    masks = np.arange(2**k, dtype=np.int64)
    chunk = 4096
    Xc = X.astype(np.complex128, copy=False)
    for lo in range(0, len(masks), chunk):
        blk = masks[lo : lo + chunk]
        signs = (((blk[:, None] >> np.arange(k)[None, :]) & 1) * 2 - 1).astype(np.float64)
        pts = signs @ Xc
        vals = evaluate_many(P, pts)
        parity = np.prod(signs, axis=1)
        total += complex(parity @ vals)
    total *= _factorial_ratio((), k) / 2.0**k  # 1 / (k! 2^k)
    return _maybe_real(P, vecs, total)


def polarize_blocked(P: HomogeneousPolynomial, bt):
    """The symmetric form at (x_1^{k_1}, ..., x_s^{k_s}) via coefficient extraction."""
    bt = _as_blocks(bt)
    k = P.degree
    if bt.total != k:
        raise ValueError(f"block multiplicities sum to {bt.total}, degree is {k}")
    if bt.dim != P.dim:
        raise ValueError(f"block dimension {bt.dim} does not match {P.dim}")
    vecs = [v for v, _ in bt]
    mults = tuple(m for _, m in bt)
    M = np.stack(vecs, axis=1)  # (n, s)
    Q = compose_linear(P, M)
    coeff = Q.terms.get(mults, 0j)
    value = _factorial_ratio(mults, k) * coeff
    return _maybe_real(P, vecs, complex(value))


def derivative_pairing(P: HomogeneousPolynomial, x1, x2, j: int):
    """C(k, j) * T(x1^{k-j}, x2^{j}): the j-th directional derivative pairing.

    j = 0 gives P(x1), j = k gives P(x2).
    """
    k = P.degree
    if not 0 <= j <= k:
        raise ValueError(f"j must lie in [0, {k}], got {j}")
    if j == 0:
        return evaluate(P, x1)
    if j == k:
        return evaluate(P, x2)
    bt = BlockTuple(((x1, k - j), (x2, j)))
    return math.comb(k, j) * polarize_blocked(P, bt)
