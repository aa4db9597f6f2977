import math

import numpy as np
import pytest

from polarconst.optimize import OptimConfig
from polarconst.polarize import BudgetError
from polarconst.poly import random_polynomial
from polarconst.quotient import (
    ConvergenceError,
    QuotientMap,
    apply_quotient,
    build_eta_net,
    build_quotient,
    greedy_preimage,
    lift_l1_norm,
    verify_net_covering,
    verify_transfer_bound,
)
from polarconst.spaces import Field, SpaceSpec, norm

R2 = SpaceSpec(2, 2.0, Field.REAL)


@pytest.fixture(scope="module")
def Q01():
    return build_quotient(R2, 0.1, 0.2, seed=0)


def test_one_dimensional_net_is_two_points():
    net = build_eta_net(SpaceSpec(1, 2.0, Field.REAL), 0.9999, seed=0)
    assert sorted(net.ravel().tolist()) == [-1.0, 1.0]


def test_circle_net_size_and_covering():
    # covering the circle with chord radius 0.5 needs at least
    # ceil(2 pi / (4 asin(0.25))) = 7 points
    net = build_eta_net(R2, 0.5, seed=0)
    assert len(net) >= 7
    assert verify_net_covering(net, R2, 0.5, samples=20_000, seed=5) < 0.5


def test_complex_phase_net():
    spec = SpaceSpec(1, 1.0, Field.COMPLEX)
    net = build_eta_net(spec, 0.1, seed=0)
    # phases on the unit circle: chord-0.1 covering needs >= 32 points
    assert len(net) >= 32
    assert np.all(np.abs(np.abs(net.ravel()) - 1.0) < 1e-12)
    assert verify_net_covering(net, spec, 0.1, samples=20_000, seed=5) < 0.1


def test_net_unit_points_and_fresh_covering(Q01):
    for h in Q01.net:
        assert norm(h, R2) == pytest.approx(1.0, rel=1e-12)
    assert verify_net_covering(Q01.points, R2, 0.1, samples=100_000, seed=123) < 0.1


def test_net_budget_guard():
    with pytest.raises(ValueError):
        build_eta_net(SpaceSpec(4, 2.0, Field.REAL), 0.5, seed=0)
    with pytest.raises(ValueError):
        build_eta_net(SpaceSpec(3, 2.0, Field.COMPLEX), 0.5, seed=0)
    with pytest.raises(ValueError):
        build_eta_net(R2, 1.5, seed=0)


def test_quotient_constraint_check():
    assert build_quotient(R2, 0.1, 0.2, seed=0).d >= 2  # 1/0.9 < 1.2 is fine
    with pytest.raises(ValueError):
        build_quotient(R2, 0.1, 0.05, seed=0)  # 1/0.9 > 1.05


def test_operator_norm_at_most_one(Q01):
    """||q z|| <= ||z||_1 on random z, so the operator norm is <= 1."""
    rng = np.random.default_rng(9)
    for _ in range(1000):
        z = rng.standard_normal(Q01.d)
        z /= np.abs(z).sum()
        assert norm(apply_quotient(Q01, z), R2) <= 1.0 + 1e-12


def test_lift_of_net_point_is_basis_vector(Q01):
    z = greedy_preimage(Q01, Q01.points[3])
    assert len(z) == 1 and z[0][0] == 3
    assert z[0][1] == pytest.approx(1.0, abs=1e-12)
    assert lift_l1_norm(z) == pytest.approx(1.0, abs=1e-12)


def test_lift_of_zero_is_empty(Q01):
    assert greedy_preimage(Q01, np.zeros(2)) == []


def test_lift_fidelity_and_l1_control(Q01):
    rng = np.random.default_rng(31)
    for _ in range(100):
        x = rng.standard_normal(2)
        x /= np.linalg.norm(x)
        z = greedy_preimage(Q01, x)
        assert lift_l1_norm(z) <= 1.0 / (1.0 - Q01.eta) + 1e-12
        assert lift_l1_norm(z) <= (1.0 + Q01.epsilon) * norm(x, R2)
        assert norm(apply_quotient(Q01, z) - x, R2) <= 1e-12
        assert len(z) <= 14  # eta^14 < 1e-12 forces termination by then


def test_lift_scales_with_input(Q01):
    rng = np.random.default_rng(32)
    x = rng.standard_normal(2) * 7.5
    z = greedy_preimage(Q01, x)
    assert lift_l1_norm(z) <= (1.0 + Q01.epsilon) * norm(x, R2)
    assert norm(apply_quotient(Q01, z) - x, R2) <= 1e-12


def test_geometric_residual_decay(Q01):
    """Residual after step j stays below eta^j (scaled by the input norm)."""
    rng = np.random.default_rng(33)
    for _ in range(20):
        x = rng.standard_normal(2)
        x /= np.linalg.norm(x)
        # replay the greedy expansion and track residual norms
        r = x.copy()
        delta = 1.0
        for j in range(1, 8):
            dists = np.linalg.norm(Q01.points - r / delta, axis=1)
            i = int(np.argmin(dists))
            r = r - delta * Q01.points[i]
            res = float(np.linalg.norm(r))
            assert res < Q01.eta**j * (1 + 1e-9)
            if res == 0.0:
                break
            delta = res


def test_greedy_max_steps_error(Q01):
    rng = np.random.default_rng(3)
    x = rng.standard_normal(2)
    with pytest.raises(ConvergenceError) as err:
        greedy_preimage(Q01, x, residual_tol=0.0, max_steps=5)
    assert err.value.residual > 0.0


def test_transfer_bound_quadratic_and_cubic(Q01):
    cfg = OptimConfig(starts=20, max_iters=300, tol=1e-11, seed=1)
    for degree, seed in ((2, 11), (3, 12)):
        P = random_polynomial(degree, 2, Field.REAL, seed)
        rep = verify_transfer_bound(P, Q01, cfg, samples=8, seed=seed)
        assert rep.violations == 0
        assert rep.max_ratio <= 1.0
        assert rep.max_lift_l1_ratio <= 1.0 + Q01.epsilon
        assert rep.max_residual <= 1e-12
        assert rep.compose_error <= 1e-8
        assert rep.passed


def test_transfer_bound_linear_trivial(Q01):
    from polarconst.poly import HomogeneousPolynomial

    P = HomogeneousPolynomial(1, 2, Field.REAL, {(1, 0): 0.8, (0, 1): -0.6})
    cfg = OptimConfig(starts=8, max_iters=100, tol=1e-11, seed=2)
    rep = verify_transfer_bound(P, Q01, cfg, samples=10, seed=3)
    assert rep.violations == 0


def test_transfer_bound_degree_budget(Q01):
    P = random_polynomial(9, 2, Field.REAL, 5)
    with pytest.raises(BudgetError):
        verify_transfer_bound(P, Q01, OptimConfig(starts=4, seed=0))


def test_quotient_map_validation():
    pts = build_eta_net(R2, 0.5, seed=0)
    with pytest.raises(ValueError):
        QuotientMap(target=R2, points=pts, eta=0.5, epsilon=0.5)  # 1/0.5 = 2 > 1.5


def test_transfer_report_json(Q01):
    P = random_polynomial(2, 2, Field.REAL, 77)
    rep = verify_transfer_bound(P, Q01, OptimConfig(starts=8, seed=0), samples=3, seed=1)
    d = rep.to_json_dict()
    assert d["d"] == Q01.d
    assert d["violations"] == 0
    assert 0.0 < d["max_ratio"] <= 1.0
