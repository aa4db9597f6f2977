import json
import math

import numpy as np
import pytest

from polarconst.poly import (
    HomogeneousPolynomial,
    complexify,
    compose_linear,
    dumps_polynomial,
    evaluate,
    gradient,
    loads_polynomial,
    multi_indices,
    polynomial_from_json_dict,
    polynomial_to_json_dict,
    product,
    random_polynomial,
    real_l1_example,
    varopoulos,
)
from polarconst.spaces import Field

LAMBDA = np.exp(2j * np.pi / 3.0)


def mono(degree, dim, field, alpha, c=1.0):
    return HomogeneousPolynomial(degree, dim, field, {alpha: c})


def test_evaluate_square():
    P = mono(2, 2, Field.REAL, (2, 0))
    assert evaluate(P, [3.0, 0.0]) == 9.0


def test_evaluate_varopoulos_all_ones():
    assert evaluate(varopoulos(), [1.0, 1.0, 1.0]) == pytest.approx(-3.0)


def test_evaluate_varopoulos_cube_roots():
    # both elementary symmetric sums vanish at (1, w, w^2)
    val = evaluate(varopoulos(), np.array([1.0, LAMBDA, LAMBDA**2]))
    assert abs(val) < 1e-13


def test_evaluate_degree_zero():
    P = HomogeneousPolynomial(0, 2, Field.REAL, {(0, 0): 4.5})
    assert evaluate(P, [7.0, -1.0]) == 4.5


def test_evaluate_dim_mismatch():
    with pytest.raises(ValueError):
        evaluate(mono(2, 2, Field.REAL, (2, 0)), [1.0, 2.0, 3.0])


def test_gradient_examples():
    assert np.allclose(gradient(mono(2, 2, Field.REAL, (2, 0)), [3.0, 0.0]), [6.0, 0.0])
    P = mono(2, 2, Field.REAL, (1, 1))
    assert np.allclose(gradient(P, [2.0, 5.0]), [5.0, 2.0])


def test_gradient_degree_zero_is_zero():
    P = HomogeneousPolynomial(0, 3, Field.REAL, {(0, 0, 0): 2.0})
    assert np.allclose(gradient(P, [1.0, 2.0, 3.0]), 0.0)


def test_euler_identity():
    """<grad P(x), x> = k P(x) for random quartics."""
    rng = np.random.default_rng(5)
    P = random_polynomial(4, 3, Field.COMPLEX, 99)
    for _ in range(20):
        x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        lhs = np.dot(gradient(P, x), x)
        rhs = 4.0 * evaluate(P, x)
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_compose_identity():
    P = random_polynomial(3, 3, Field.COMPLEX, 1)
    Q = compose_linear(P, np.eye(3))
    assert Q.terms.keys() == P.terms.keys()
    for a in P.terms:
        assert Q.terms[a] == pytest.approx(P.terms[a], rel=1e-13)


def test_compose_column():
    P = mono(2, 1, Field.REAL, (2,))
    Q = compose_linear(P, np.array([[1.0]]))
    assert Q.terms == {(2,): 1.0}


def test_compose_rotation_splits_product():
    # z1 z2 under [[1,1],[1,-1]] becomes z1^2 - z2^2
    P = mono(2, 2, Field.REAL, (1, 1))
    Q = compose_linear(P, np.array([[1.0, 1.0], [1.0, -1.0]]))
    assert set(Q.terms) == {(2, 0), (0, 2)}
    assert Q.terms[(2, 0)] == pytest.approx(1.0)
    assert Q.terms[(0, 2)] == pytest.approx(-1.0)


def test_compose_associates_with_matrix_product():
    rng = np.random.default_rng(21)
    P = random_polynomial(3, 2, Field.COMPLEX, 13)
    A = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
    B = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
    Q1 = compose_linear(compose_linear(P, A), B)
    Q2 = compose_linear(P, A @ B)
    scale = max(abs(c) for c in Q2.terms.values())
    for a in set(Q1.terms) | set(Q2.terms):
        assert abs(Q1.terms.get(a, 0) - Q2.terms.get(a, 0)) <= 1e-11 * scale


def test_compose_agrees_with_evaluation():
    rng = np.random.default_rng(2)
    P = random_polynomial(3, 2, Field.REAL, 3)
    M = rng.standard_normal((2, 4))
    Q = compose_linear(P, M)
    for _ in range(10):
        z = rng.standard_normal(4)
        assert evaluate(Q, z) == pytest.approx(evaluate(P, M @ z), rel=1e-11, abs=1e-13)


def test_compose_shape_mismatch():
    with pytest.raises(ValueError):
        compose_linear(mono(2, 2, Field.REAL, (2, 0)), np.eye(3))


def test_product_examples():
    z1 = mono(1, 2, Field.REAL, (1, 0))
    z2 = mono(1, 2, Field.REAL, (0, 1))
    assert product(z1, z2).terms == {(1, 1): 1.0}

    s = HomogeneousPolynomial(1, 2, Field.REAL, {(1, 0): 1.0, (0, 1): 1.0})
    sq = product(s, s)
    assert sq.terms[(2, 0)] == pytest.approx(1.0)
    assert sq.terms[(1, 1)] == pytest.approx(2.0)
    assert sq.terms[(0, 2)] == pytest.approx(1.0)


def test_product_with_constant_is_identity():
    one = HomogeneousPolynomial(0, 2, Field.REAL, {(0, 0): 1.0})
    P = random_polynomial(3, 2, Field.REAL, 8)
    assert product(P, one) == P


def test_product_commutative_associative():
    A = random_polynomial(2, 2, Field.COMPLEX, 31)
    B = random_polynomial(1, 2, Field.COMPLEX, 32)
    C = random_polynomial(2, 2, Field.COMPLEX, 33)
    left = product(product(A, B), C)
    right = product(A, product(B, C))
    scale = max(abs(c) for c in left.terms.values())
    for a in set(left.terms) | set(right.terms):
        assert abs(left.terms.get(a, 0) - right.terms.get(a, 0)) <= 1e-12 * scale
    assert set(product(A, B).terms) == set(product(B, A).terms)


def test_product_field_mismatch():
    with pytest.raises(ValueError):
        product(mono(1, 2, Field.REAL, (1, 0)), mono(1, 2, Field.COMPLEX, (0, 1)))


def test_complexify_square():
    P = complexify(mono(2, 1, Field.REAL, (2,)))
    assert P.field is Field.COMPLEX
    assert evaluate(P, np.array([1.0j])) == pytest.approx(-1.0)


def test_complexify_already_complex_raises():
    with pytest.raises(ValueError):
        complexify(varopoulos())


def test_complexify_agrees_on_real_vectors():
    """Same coefficients, same arithmetic path: exact agreement on reals."""
    rng = np.random.default_rng(17)
    P = random_polynomial(4, 3, Field.REAL, 55)
    Pc = complexify(P)
    for _ in range(1000):
        x = rng.standard_normal(3)
        assert complex(evaluate(Pc, x)) == complex(evaluate(P, x))


def test_homogeneity():
    rng = np.random.default_rng(23)
    P = random_polynomial(5, 3, Field.COMPLEX, 77)
    for _ in range(30):
        x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        r = rng.uniform(0.5, 2.0)
        lam = r * np.exp(2j * np.pi * rng.random())
        assert evaluate(P, lam * x) == pytest.approx(lam**5 * evaluate(P, x), rel=1e-11)


def test_real_l1_example_m1_values():
    P = real_l1_example(1)
    assert P.degree == 8 and P.dim == 2 and P.field is Field.REAL
    assert abs(evaluate(P, [0.5, 0.5])) == pytest.approx(2.0**-6, abs=1e-16)
    assert evaluate(P, [0.7, 0.0]) == 0.0
    assert abs(evaluate(P, [0.5, -0.5])) == pytest.approx(2.0**-6, abs=1e-16)


def test_real_l1_example_m1_coefficients():
    # (xy)^2 * (x^4 - 6 x^2 y^2 + y^4)
    P = real_l1_example(1)
    assert P.terms == {(6, 2): 1.0, (4, 4): -6.0, (2, 6): 1.0}


def test_real_l1_example_complexified_at_quarter_turn():
    P1c = complexify(real_l1_example(1))
    assert abs(evaluate(P1c, np.array([0.5, 0.5j]))) == pytest.approx(2.0**-5, abs=1e-16)


def test_real_l1_example_input_error():
    with pytest.raises(ValueError):
        real_l1_example(0)


def test_varopoulos_coefficients():
    V = varopoulos()
    assert V.terms[(2, 0, 0)] == 1.0
    assert V.terms[(1, 1, 0)] == -2.0
    assert evaluate(V, [1.0, 0.0, 0.0]) == pytest.approx(1.0)


def test_random_polynomial_deterministic():
    a = random_polynomial(3, 3, Field.COMPLEX, 123)
    b = random_polynomial(3, 3, Field.COMPLEX, 123)
    assert a == b


def test_random_polynomial_degree_zero():
    P = random_polynomial(0, 2, Field.REAL, 5)
    assert list(P.terms) == [(0, 0)]


def test_random_polynomial_dense_quadratic():
    P = random_polynomial(2, 2, Field.REAL, 5)
    assert len(P.terms) == 3  # C(3, 2) multi-indices


def test_multi_indices_canonical_order():
    assert list(multi_indices(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(multi_indices(6, 4))) == math.comb(9, 3)


def test_canonical_form_drops_zeros_and_checks_degree():
    P = HomogeneousPolynomial(2, 2, Field.REAL, {(2, 0): 0.0, (1, 1): 3.0})
    assert (2, 0) not in P.terms
    with pytest.raises(ValueError):
        HomogeneousPolynomial(2, 2, Field.REAL, {(1, 0): 1.0})
    with pytest.raises(ValueError):
        HomogeneousPolynomial(2, 2, Field.REAL, {(1, 1): 1.0 + 1.0j})


def test_json_round_trip():
    for P in (varopoulos(), real_l1_example(2), random_polynomial(3, 3, Field.COMPLEX, 4)):
        text = dumps_polynomial(P)
        assert loads_polynomial(text) == P
        assert polynomial_from_json_dict(polynomial_to_json_dict(P)) == P


def test_json_terms_in_canonical_order_one_per_line():
    text = dumps_polynomial(varopoulos())
    alphas = [json.loads(line.rstrip(","))["alpha"]
              for line in text.splitlines() if line.strip().startswith("{\"alpha\"")]
    assert alphas == sorted(alphas, reverse=True)


def test_json_rejects_degree_mismatch():
    bad = {"field": "real", "degree": 2, "dim": 2,
           "terms": [{"alpha": [1, 0], "re": 1.0, "im": 0.0}]}
    with pytest.raises(ValueError, match="term 0"):
        polynomial_from_json_dict(bad)
