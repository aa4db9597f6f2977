#!/usr/bin/env python3
"""A real l_1^2 polynomial whose complex extension is much larger.

For each m the degree-8m polynomial (xy)^{2m} sum_j C(4m,2j)(-1)^j y^{2j}
x^{4m-2j} has real sup norm exactly 2^{-6m} on the l_1 sphere (attained at
(1/2, 1/2)), while the same coefficients evaluated at the complex unit
vector (1/2, i/2) already give modulus 2^{-(4m+1)}.  The norm of the complex
extension therefore exceeds the real norm by a factor of at least 2^{2m-1},
which is why real finite-dimensional spaces can keep polarization constants
strictly above 1 while complex ones cannot.
"""

import numpy as np

from polarconst import (
    Field,
    OptimConfig,
    SpaceSpec,
    complexify,
    estimate_bochnak_ratio,
    estimate_poly_norm,
    evaluate,
    real_l1_example,
)

spec = SpaceSpec(2, 1.0, Field.REAL)
cfg = OptimConfig(starts=40, max_iters=400, tol=1e-12, seed=0)

for m in (1, 2, 3):
    P = real_l1_example(m)
    pe = estimate_poly_norm(P, spec, cfg)
    at_corner = evaluate(P, [0.5, 0.5])
    complex_val = abs(evaluate(complexify(P), np.array([0.5, 0.5j])))
    br = estimate_bochnak_ratio(P, spec, cfg)
    print(f"m = {m}  (degree {P.degree}):")
    print(f"  real sup norm estimate   {pe.value:.3e}   (exact 2^-{6 * m} = {2.0 ** (-6 * m):.3e})")
    print(f"  |P(1/2, 1/2)|            {abs(at_corner):.3e}")
    print(f"  |P~(1/2, i/2)|           {complex_val:.3e}   (exact 2^-{4 * m + 1})")
    print(f"  complexification ratio   {br.ratio:.6f}   (guaranteed >= 2^{2 * m - 1} = {2 ** (2 * m - 1)})")
    print()

print("on a real Hilbert space nothing like this can happen: for any real")
print("quadratic the complex extension has the same norm (try demo 05).")
