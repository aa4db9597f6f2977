"""Exact closed-form constants, in arbitrary-precision rational arithmetic.

The central quantity is the value attached to a composition (k_1, ..., k_d)
of k:

    (k_1! ... k_d! / k!) * k^k / (k_1^{k_1} ... k_d^{k_d})

with the conventions 0! = 1 and 0^0 = 1.  Its maximum over all compositions
is the degree-k polarization constant of the d-dimensional l_1 space, and the
same expression with all parts positive is the Harris bound for mixed
polarization norms.  Everything here is computed with ``fractions.Fraction``
(big integers, reduced once); k-th roots go through exact big-integer logs so
that astronomically large values stay cheap and accurate.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "partition_value",
    "balanced_partition",
    "exact_c_l1",
    "exact_c_l1_bruteforce",
    "partitions_at_most",
    "root_sequence",
    "harris_bound",
    "lp3_lower_bound",
    "lp3_interpolation_upper_bound",
]


def _check_parts(parts):
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"parts must be nonnegative, got {parts}")
    return parts


def partition_value(parts) -> Fraction:
    """The exact rational (k_1!...k_d!/k!) * k^k / prod k_i^{k_i}.

    Zero parts contribute a factor 1 (0! = 1, 0^0 = 1).  A degree-0
    partition has value 1.
    """
    parts = _check_parts(parts)
    k = sum(parts)
    if k == 0:
        return Fraction(1)
    num = k**k
    den = math.factorial(k)
    for p in parts:
        if p == 0:
            continue
        num *= math.factorial(p)
        den *= p**p
    return Fraction(num, den)


def balanced_partition(k: int, d: int) -> tuple:
    """The as-equal-as-possible composition of k into d parts, non-increasing.

    With k = d*c + r, 0 <= r < d, this is c+1 repeated r times followed by c
    repeated d-r times; it maximizes :func:`partition_value`.
    """
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    c, r = divmod(k, d)
    return (c + 1,) * r + (c,) * (d - r)


def exact_c_l1(k: int, d: int) -> Fraction:
    """The degree-k polarization constant of the d-dimensional l_1 space.

    Equals the maximum of :func:`partition_value` over compositions of k into
    d parts, attained at the balanced one.
    """
    return partition_value(balanced_partition(k, d))


def partitions_at_most(k: int, d: int, _cap=None):
    """All partitions of k into at most d parts (non-increasing tuples).

    Padding with zeros recovers the compositions of k into d parts up to
    order; the value above is symmetric, so this is the full search space.
    """
    if d < 1:
        if k == 0:
            yield ()
        return
    cap = k if _cap is None else min(_cap, k)
    if k == 0:
        yield ()
        return
    for first in range(cap, 0, -1):
        for rest in partitions_at_most(k - first, d - 1, first):
            yield (first,) + rest


def exact_c_l1_bruteforce(k: int, d: int) -> Fraction:
    """Independent check path: maximize partition_value by full enumeration."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    return max(partition_value(pt) for pt in partitions_at_most(k, d))


def root_sequence(d: int, k_list) -> list:
    """[(k, c(k)^{1/k})] with the root taken through exact big-integer logs.

    The rational value itself can run to thousands of digits; its log is the
    difference of two big-integer logs, so the root is accurate to ~1e-15
    relative without ever converting the full value to a float.
    """
    out = []
    for k in k_list:
        k = int(k)
        if k < 1:
            raise ValueError("each k must be >= 1")
        v = exact_c_l1(k, d)
        log_v = math.log(v.numerator) - math.log(v.denominator)
        out.append((k, math.exp(log_v / k)))
    return out


def harris_bound(parts) -> Fraction:
    """The mixed polarization bound (k_1!...k_n!/k!) * k^k / prod k_i^{k_i}.

    Identical arithmetic to :func:`partition_value`, but every part must be
    positive: the bound is stated for actual argument blocks.
    """
    parts = _check_parts(parts)
    if len(parts) < 1 or any(p == 0 for p in parts):
        raise ValueError("harris_bound needs at least one part, all parts >= 1")
    return partition_value(parts)


def _check_p(p) -> float:
    p = float(p)
    if math.isnan(p) or p < 2.0:
        raise ValueError(f"p must satisfy 2 <= p <= inf, got {p}")
    return p


def lp3_lower_bound(p) -> float:
    """(6/5)^(1 - 2/p): lower bound for the degree-2 constant of complex l_p^3."""
    p = _check_p(p)
    return (6.0 / 5.0) ** (1.0 - 2.0 / p)


def lp3_interpolation_upper_bound(p) -> float:
    """2^(2/p) * 5^(1 - 2/p): interpolated sup-norm bound for Varopoulos' quadratic on l_p^3."""
    p = _check_p(p)
    return 2.0 ** (2.0 / p) * 5.0 ** (1.0 - 2.0 / p)
