import math
from fractions import Fraction

import pytest

from polarconst.constants import (
    balanced_partition,
    exact_c_l1,
    exact_c_l1_bruteforce,
    harris_bound,
    lp3_interpolation_upper_bound,
    lp3_lower_bound,
    partition_value,
    partitions_at_most,
    root_sequence,
)


def test_partition_value_hand_cases():
    assert partition_value((1, 1)) == Fraction(2)
    assert partition_value((2, 1)) == Fraction(9, 4)
    assert partition_value((5, 0, 0)) == 1
    assert partition_value((3, 2, 2)) == Fraction(117649, 12960)  # (3!2!2!/7!) 7^7/(27*16)
    assert partition_value(()) == 1


def test_partition_value_zero_parts_are_neutral():
    assert partition_value((3, 2)) == partition_value((3, 2, 0, 0))


def test_balanced_partition_examples():
    assert balanced_partition(7, 3) == (3, 2, 2)
    assert balanced_partition(6, 3) == (2, 2, 2)
    assert balanced_partition(5, 2) == (3, 2)
    assert balanced_partition(2, 5) == (1, 1, 0, 0, 0)


def test_exact_c_l1_spot_values():
    assert exact_c_l1(2, 2) == Fraction(2)
    assert exact_c_l1(8, 2) == Fraction(128, 35)
    # once d >= k the all-ones profile wins and c = k^k/k!
    for d in (3, 4, 6):
        assert exact_c_l1(3, d) == Fraction(27, 6)
    assert exact_c_l1(5, 9) == Fraction(5**5, math.factorial(5))


def test_exact_matches_bruteforce_grid():
    """Closed form vs full enumeration, exact rational equality."""
    for k in range(1, 13):
        for d in range(1, 7):
            assert exact_c_l1(k, d) == exact_c_l1_bruteforce(k, d), (k, d)


def test_balanced_partition_is_argmax():
    for k in range(1, 13):
        for d in range(1, 7):
            best = partition_value(balanced_partition(k, d))
            for pt in partitions_at_most(k, d):
                assert best >= partition_value(pt), (k, d, pt)


def test_monotone_in_d_and_saturation():
    for k in range(1, 9):
        prev = Fraction(0)
        for d in range(1, k + 3):
            cur = exact_c_l1(k, d)
            assert cur >= prev
            prev = cur
        assert exact_c_l1(k, k) == Fraction(k**k, math.factorial(k))
        assert exact_c_l1(k, k + 5) == Fraction(k**k, math.factorial(k))


def test_at_least_one_iff_d_one():
    for k in range(1, 10):
        assert exact_c_l1(k, 1) == 1
        for d in range(2, 5):
            assert exact_c_l1(k, d) >= 1
            if k >= 2:
                assert exact_c_l1(k, d) > 1


def test_root_sequence_trivial_dimension():
    assert root_sequence(1, [1, 5, 50]) == [(1, 1.0), (5, 1.0), (50, 1.0)]


def test_root_sequence_frozen_value():
    # independent oracle: plain float power of the exact fraction
    (_, root), = root_sequence(2, [8])
    assert root == pytest.approx(float(Fraction(128, 35)) ** 0.125, rel=1e-12)


def test_root_sequence_large_degree():
    (_, root), = root_sequence(3, [999])
    assert 1.0 < root < 1.01
    # Stirling-type estimate (2 pi c)^{d/2} / sqrt(2 pi k) with c = 333
    stirling = (2 * math.pi * 333) ** 1.5 / math.sqrt(2 * math.pi * 999)
    assert root == pytest.approx(stirling ** (1.0 / 999.0), rel=1e-4)


def test_root_sequence_rejects_bad_degree():
    with pytest.raises(ValueError):
        root_sequence(2, [0])


def test_harris_bound_values():
    assert harris_bound((1, 1)) == Fraction(2)
    assert harris_bound((2, 2)) == Fraction(8, 3)
    for k in (1, 2, 3, 5):
        assert harris_bound((1,) * k) == Fraction(k**k, math.factorial(k))
        assert harris_bound((k,)) == 1


def test_harris_bound_rejects_zero_parts():
    with pytest.raises(ValueError):
        harris_bound((2, 0))
    with pytest.raises(ValueError):
        harris_bound(())


def test_lp3_lower_bound():
    assert lp3_lower_bound(2.0) == 1.0
    assert lp3_lower_bound(math.inf) == pytest.approx(1.2)
    assert lp3_lower_bound(4.0) == pytest.approx(math.sqrt(6.0 / 5.0))
    with pytest.raises(ValueError):
        lp3_lower_bound(1.5)


def test_lp3_interpolation_upper_bound():
    assert lp3_interpolation_upper_bound(2.0) == pytest.approx(2.0)
    assert lp3_interpolation_upper_bound(math.inf) == pytest.approx(5.0)
    assert lp3_interpolation_upper_bound(4.0) == pytest.approx(math.sqrt(10.0))
    with pytest.raises(ValueError):
        lp3_interpolation_upper_bound(1.0)


def test_lp3_bounds_algebraic_identity():
    # (6/3^(2/p)) / (2^(2/p) 5^(1-2/p)) = (6/5)^(1-2/p)
    for p in (2.0, 2.5, 3.0, 4.0, 8.0, 100.0, math.inf):
        lhs = (6.0 / 3.0 ** (2.0 / p)) / lp3_interpolation_upper_bound(p)
        assert lhs == pytest.approx(lp3_lower_bound(p), rel=1e-12)


def test_partitions_at_most_counts():
    # partitions of 6 into at most 3 parts: 654 -> 7 of them
    assert len(list(partitions_at_most(6, 3))) == 7
    assert set(partitions_at_most(3, 2)) == {(3,), (2, 1)}
