#!/usr/bin/env python3
"""Exact polarization constants of finite l_1 spaces.

The degree-k constant of the d-dimensional l_1 space has a closed form: the
maximum over compositions k_1 + ... + k_d = k of

    (k_1! ... k_d! / k!) * k^k / (k_1^{k_1} ... k_d^{k_d}),

attained at the balanced composition.  This script prints a small table of
exact fractions, checks the closed form against brute-force enumeration, and
shows the k-th roots creeping down to 1 (the reason the limiting constant of
every finite-dimensional complex space is 1).
"""

from polarconst import balanced_partition, exact_c_l1, exact_c_l1_bruteforce, root_sequence

print("exact constants c(k, l1^d) as reduced fractions")
print(f"{'k':>3} {'d':>3} {'maximizer':>16} {'fraction':>14} {'decimal':>18} {'k-th root':>12}")
for k in (2, 3, 5, 8, 12):
    for d in (2, 3, 6):
        c = exact_c_l1(k, d)
        pt = balanced_partition(k, d)
        (_, root), = root_sequence(d, [k])
        frac = f"{c.numerator}/{c.denominator}"
        print(f"{k:>3} {d:>3} {str(pt):>16} {frac:>14} {float(c):>18.12f} {root:>12.6f}")

print("\nbrute-force enumeration agrees exactly on the full (k <= 12, d <= 6) grid:")
agree = all(
    exact_c_l1(k, d) == exact_c_l1_bruteforce(k, d) for k in range(1, 13) for d in range(1, 7)
)
print(f"  all equal: {agree}")

print("\nk-th roots along k = 3c for d = 3 (limit 1 from above):")
for k, root in root_sequence(3, [3, 9, 27, 81, 243, 999]):
    print(f"  c({k:>3}, l1^3)^(1/{k}) = {root:.9f}")

print("\nthe general (k-independent) bound is k^k/k!, whose k-th root tends to e;")
print("on a fixed l1^d the roots tend to 1 instead -- the whole point of the table.")
