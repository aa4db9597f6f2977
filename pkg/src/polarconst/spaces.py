"""Finite-dimensional l_p spaces over R or C.

A space is described by a :class:`SpaceSpec` (dimension, exponent p, scalar
field); vectors are plain 1-D numpy arrays.  Besides the norm and the sphere
projection, the module provides :func:`dual_align`, the exact maximizer of a
linear functional on the unit ball, which is the workhorse of every
alternating optimizer in this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "Field",
    "SpaceSpec",
    "as_vector",
    "norm",
    "project_to_sphere",
    "dual_align",
    "phases",
]


class Field(str, Enum):
    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class SpaceSpec:
    """The space l_p^dim over the given scalar field.

    ``p`` is an extended real in [1, inf]; pass ``math.inf`` for the sup
    norm (it is stored as the IEEE infinity, never a large float).  The
    conjugate exponent satisfies 1/p + 1/p' = 1 with 1' = inf and inf' = 1.
    """

    dim: int
    p: float
    field: Field = Field.REAL

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dim must be a positive integer, got {self.dim!r}")
        p = float(self.p)
        if math.isnan(p) or p < 1.0:
            raise ValueError(f"p must satisfy 1 <= p <= inf, got {self.p!r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "field", Field(self.field))

    @property
    def conjugate(self) -> float:
        """The conjugate exponent p' with 1/p + 1/p' = 1."""
        if self.p == 1.0:
            return math.inf
        if math.isinf(self.p):
            return 1.0
        return self.p / (self.p - 1.0)

    @property
    def is_complex(self) -> bool:
        return self.field is Field.COMPLEX

    @property
    def dtype(self):
        return np.complex128 if self.is_complex else np.float64

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "p": "inf" if math.isinf(self.p) else self.p,
            "field": self.field.value,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SpaceSpec":
        p = d["p"]
        p = math.inf if p == "inf" else float(p)
        return cls(dim=int(d["dim"]), p=p, field=Field(d["field"]))


def as_vector(x, spec: SpaceSpec) -> np.ndarray:
    """Coerce ``x`` to a 1-D array matching ``spec``; reject mismatches."""
    v = np.asarray(x)
    if v.ndim != 1 or v.shape[0] != spec.dim:
        raise ValueError(f"expected a vector of dimension {spec.dim}, got shape {v.shape}")
    if spec.is_complex:
        return v.astype(np.complex128, copy=False)
    if np.iscomplexobj(v):
        if np.any(v.imag != 0):
            raise ValueError("complex entries in a vector of a real space")
        v = v.real
    return v.astype(np.float64, copy=False)


def norm(x, spec: SpaceSpec) -> float:
    """The l_p norm of ``x`` in ``spec``: (sum |x_j|^p)^(1/p), max for p = inf."""
    v = as_vector(x, spec)
    a = np.abs(v)
    p = spec.p
    if math.isinf(p):
        return float(a.max())
    if p == 1.0:
        return float(a.sum())
    if p == 2.0:
        return float(np.sqrt((a * a).sum()))
    return float((a**p).sum() ** (1.0 / p))


def project_to_sphere(x, spec: SpaceSpec) -> np.ndarray:
    """x / ||x||; raises on the zero vector."""
    v = as_vector(x, spec)
    n = norm(v, spec)
    if n == 0.0:
        raise ValueError("cannot project the zero vector to the sphere")
    return v / n


def phases(v: np.ndarray) -> np.ndarray:
    """Entrywise v_j / |v_j| with the convention phase(0) = 1."""
    a = np.abs(v)
    out = np.where(a == 0, np.ones_like(v), v / np.where(a == 0, 1.0, a))
    return out


def dual_align(phi, spec: SpaceSpec) -> np.ndarray:
    """The unit vector x maximizing Re <phi, x> over the l_p ball.

    The pairing is unconjugated: <phi, x> = sum phi_j x_j.  The achieved
    value equals the dual norm ||phi||_{p'}.  For 1 < p < inf the maximizer
    has |x_j| proportional to |phi_j|^(p'-1) with phases making each term
    phi_j x_j real nonnegative; for p = inf every entry is a unit phase
    (1 where phi_j = 0); for p = 1 all mass sits on the smallest index of
    maximal modulus.
    """
    v = as_vector(phi, spec)
    a = np.abs(v)
    amax = float(a.max(initial=0.0))
    if amax == 0.0:
        raise ValueError("dual_align is undefined for the zero functional")
    ph = np.conj(phases(v))
    p = spec.p
    if math.isinf(p):
        return ph.astype(spec.dtype, copy=False)
    if p == 1.0:
        j = int(np.argmax(a))
        x = np.zeros(spec.dim, dtype=spec.dtype)
        x[j] = ph[j]
        return x
    q = spec.conjugate
    w = (a / amax) ** (q - 1.0)
    x = ph * w
    return x / norm(x, spec)
