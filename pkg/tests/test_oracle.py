import math
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from conftest import complex_matrix, gaussian_integer_matrix, plain
from symtensor import exact_matrix
from symtensor.errors import ShapeError, SizeLimitError
from symtensor.indexcomb import Family, enumerate_index_maps, stabilizer_character_sum
from symtensor.oracle import (
    TensorSpaceModel,
    _derivative_weights,
    brute_force_reference,
    determinant,
    finite_difference_derivative,
    mixed_discriminant,
    permanent,
    poly_coefficient_derivative,
    projector_oracle_k_chi,
)
from symtensor.symgroup import degree, partitions


def naive_permanent(M):
    n = M.shape[0]
    return sum(math.prod(M[i, s[i]] for i in range(n)) for s in permutations(range(n)))


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (5, 2), (5, 3)])
def test_projector_is_orthogonal_projection(m, n):
    total = np.zeros((n**m, n**m))
    for lam in partitions(m):
        P = TensorSpaceModel(lam, m, n).projector
        assert np.max(np.abs(P @ P - P)) < 1e-12
        assert np.max(np.abs(P - P.T)) < 1e-12
        total += P
    assert np.max(np.abs(total - np.eye(n**m))) < 1e-12


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_norm_formula_against_model(m, n):
    for lam in partitions(m):
        model = TensorSpaceModel(lam, m, n)
        for alpha in enumerate_index_maps(m, n, Family.GAMMA):
            e = model.symmetrized(alpha)
            expected = degree(lam) * stabilizer_character_sum(alpha, lam) / math.factorial(m)
            assert abs(e @ e - expected) < 1e-12


def test_permutation_operator_acts_on_slots():
    model = TensorSpaceModel((2, 1), 3, 2)
    P = model.permutation_operator((1, 2, 0))
    # factor t moves to slot sigma(t)
    assert P[model.flat_index((1, 1, 2)), model.flat_index((1, 2, 1))] == 1
    v = [np.array([1.0, 2.0]), np.array([0.0, 1.0]), np.array([3.0, -1.0])]
    lhs = model.symmetrized_from_vectors(v)
    rhs = model.projector @ np.kron(np.kron(v[0], v[1]), v[2])
    assert np.allclose(lhs, rhs)


def test_projector_oracle_examples(rng):
    assert np.allclose(projector_oracle_k_chi(np.eye(3), (2, 1), 3), np.eye(16))
    A = rng.normal(size=(2, 2))
    assert np.allclose(projector_oracle_k_chi(A, (1, 1), 2), [[np.linalg.det(A)]])
    a, b = 2.0, -3.0
    assert np.allclose(projector_oracle_k_chi(np.diag([a, b]), (2,), 2), np.diag([a * a, a * b, b * b]))


def test_tensor_space_cap():
    with pytest.raises(SizeLimitError):
        TensorSpaceModel((5,), 5, 6)
    with pytest.raises(ShapeError):
        TensorSpaceModel((2,), 3, 2)


def test_derivative_weights_differentiate_monomials():
    for degree_ in range(1, 7):
        w = _derivative_weights(degree_)
        for p in range(degree_ + 1):
            assert sum(wj * Fraction(j) ** p for j, wj in enumerate(w)) == (1 if p == 1 else 0)


def test_poly_coefficient_examples(rng):
    X1, X2 = gaussian_integer_matrix(rng, 2), gaussian_integer_matrix(rng, 2)
    zero = exact_matrix(np.zeros((2, 2), dtype=int))
    value = poly_coefficient_derivative(determinant, zero, [X1, X2], 2)
    assert value == mixed_discriminant([X1, X2]) * 2
    assert plain(poly_coefficient_derivative(lambda M: 7, zero, [X1], 2)) == 0


def test_poly_coefficient_is_mixed_partial(rng):
    A = gaussian_integer_matrix(rng, 3)
    X, Y = gaussian_integer_matrix(rng, 3), gaussian_integer_matrix(rng, 3)
    # second partial of a trilinear-free cubic: brute check with sympy
    import sympy

    s, t = sympy.symbols("s t")
    M = sympy.Matrix(3, 3, lambda i, j: plain(A[i, j]) + s * plain(X[i, j]) + t * plain(Y[i, j]))
    expected = sympy.expand(M.det()).coeff(s, 1).coeff(t, 1)
    assert plain(poly_coefficient_derivative(determinant, A, [X, Y], 3)) == complex(expected)


def test_finite_differences(rng):
    assert abs(finite_difference_derivative(np.linalg.det, np.eye(3), [np.eye(3)]) - 3) < 1e-9
    A, X = complex_matrix(rng, 4), complex_matrix(rng, 4)
    f = np.linalg.det
    exact_value = poly_coefficient_derivative(f, A, [X], 4)
    assert abs(finite_difference_derivative(f, A, [X]) - exact_value) < 1e-6 * abs(exact_value)
    e1 = abs(finite_difference_derivative(f, A, [X], step=1e-2, richardson=False) - exact_value)
    e2 = abs(finite_difference_derivative(f, A, [X], step=5e-3, richardson=False) - exact_value)
    assert 3.0 < e1 / e2 < 5.0


def test_brute_force_examples(rng):
    assert plain(determinant(exact_matrix(np.eye(4, dtype=int)))) == 1
    for n in range(1, 6):
        assert plain(permanent(exact_matrix(np.ones((n, n), dtype=int)))) == math.factorial(n)
    A = gaussian_integer_matrix(rng, 3)
    assert mixed_discriminant([A, A, A]) == determinant(A)
    assert plain(mixed_discriminant([exact_matrix(np.eye(3, dtype=int))] * 3)) == 1
    assert brute_force_reference("perm", A) == naive_permanent(A)
    assert brute_force_reference("mixed-discriminant", [A] * 3) == determinant(A)
    with pytest.raises(ValueError):
        brute_force_reference("hafnian", A)
    with pytest.raises(SizeLimitError):
        determinant(np.eye(7))


def test_float_determinant(rng):
    A = complex_matrix(rng, 5)
    assert abs(determinant(A) - np.linalg.det(A)) < 1e-10 * abs(np.linalg.det(A))
    assert determinant(np.zeros((3, 3))) == 0
