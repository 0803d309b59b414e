"""Independent reference computations.

Nothing here calls the immanant, derivative or tensor-power routines it is
used to check:

* :class:`TensorSpaceModel` builds the tensor power, the permutation
  operators and the symmetriser as explicit ``n^m x n^m`` matrices;
* :func:`poly_coefficient_derivative` reads a mixed partial derivative off
  exact polynomial interpolation on an integer grid;
* :func:`finite_difference_derivative` is the floating-point counterpart;
* :func:`determinant`, :func:`permanent` and :func:`mixed_discriminant` use
  elimination, Ryser's formula and polarisation respectively.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from typing import Callable, Sequence

import numpy as np

from ._scalars import ONE, ZERO, as_matrix, exact, float_matrix, zero_of
from .errors import ShapeError, SizeLimitError
from .indexcomb import Family, build_basis_index_set, enumerate_index_maps
from .symgroup import as_partition, character_value, degree, symmetric_group

MAX_TENSOR_DIM = 4096
MAX_BRUTE_ORDER = 6


class TensorSpaceModel:
    """The m-th tensor power of C^n with basis tensors e_alpha, alpha in Gamma_{m,n}.

    Basis tensors are numbered lexicographically, which matches the row
    order of ``np.kron`` powers.
    """

    def __init__(self, chi, m: int, n: int):
        lam = as_partition(chi)
        if lam.weight != m:
            raise ShapeError(f"partition {lam} does not have weight m={m}")
        if n**m > MAX_TENSOR_DIM:
            raise SizeLimitError(f"tensor space of dimension {n**m} exceeds {MAX_TENSOR_DIM}")
        self.partition = lam
        self.m = m
        self.n = n
        self.dimension = n**m
        self.basis = enumerate_index_maps(m, n, Family.GAMMA)
        self._position = {alpha: i for i, alpha in enumerate(self.basis)}
        self._projector = None

    def flat_index(self, alpha: Sequence[int]) -> int:
        return self._position[tuple(alpha)]

    def permutation_operator(self, sigma: Sequence[int]) -> np.ndarray:
        """P(sigma) e_alpha = e_{alpha o sigma^-1}, i.e. factor t moves to slot sigma(t)."""
        P = np.zeros((self.dimension, self.dimension))
        for i, alpha in enumerate(self.basis):
            moved = [0] * self.m
            for t in range(self.m):
                moved[sigma[t]] = alpha[t]
            P[self._position[tuple(moved)], i] = 1.0
        return P

    @property
    def projector(self) -> np.ndarray:
        """K_chi = (chi(id)/m!) sum_sigma chi(sigma) P(sigma)."""
        if self._projector is None:
            K = np.zeros((self.dimension, self.dimension))
            for sigma in symmetric_group(self.m):
                c = character_value(self.partition, sigma)
                if c:
                    K += c * self.permutation_operator(sigma)
            self._projector = K * degree(self.partition) / math.factorial(self.m)
        return self._projector

    def basis_tensor(self, alpha: Sequence[int]) -> np.ndarray:
        e = np.zeros(self.dimension)
        e[self.flat_index(alpha)] = 1.0
        return e

    def symmetrized(self, alpha: Sequence[int]) -> np.ndarray:
        """e*_alpha = K_chi e_alpha."""
        return self.projector @ self.basis_tensor(alpha)

    def symmetrized_from_vectors(self, vectors: Sequence[np.ndarray]) -> np.ndarray:
        """K_chi (v_1 (x) ... (x) v_m) for arbitrary vectors."""
        return self.projector @ reduce(np.kron, vectors)

    def tensor_power(self, A) -> np.ndarray:
        A = float_matrix(A)
        return reduce(np.kron, [A] * self.m)

    def orthonormal_basis(self, delta_hat: Sequence[Sequence[int]]) -> np.ndarray:
        """Gram-Schmidt of {e*_alpha : alpha in delta_hat}, in the given order, as columns."""
        vectors = np.stack([self.symmetrized(a) for a in delta_hat], axis=1)
        Q, R = np.linalg.qr(vectors)
        signs = np.sign(np.diag(R))
        signs[signs == 0] = 1.0
        return Q * signs


def projector_oracle_k_chi(A, chi, m: int, delta_hat=None) -> np.ndarray:
    """Matrix of the restriction of (x)^m A to V_chi in the orthonormalised basis built from Delta-hat."""
    A = float_matrix(A)
    n = A.shape[0]
    model = TensorSpaceModel(chi, m, n)
    if delta_hat is None:
        delta_hat = build_basis_index_set(chi, m, n).delta_hat
    V = model.orthonormal_basis(delta_hat)
    return V.conj().T @ model.tensor_power(A) @ V


def _derivative_weights(degree: int) -> list[Fraction]:
    """w_j with p'(0) = sum_j w_j p(j) for every polynomial p of degree <= ``degree``."""
    nodes = range(degree + 1)
    weights = []
    for j in nodes:
        others = [i for i in nodes if i != j]
        denom = math.prod(j - i for i in others)
        if j == 0:
            weights.append(sum(Fraction(-1, i) for i in others))
        else:
            # L_j(t) carries the factor t; its derivative at 0 keeps the other factors
            weights.append(Fraction(math.prod(-i for i in others if i != 0), denom))
    return weights


def poly_coefficient_derivative(f: Callable, A, directions: Sequence, degree: int):
    """Coefficient of t_1 ... t_k in f(A + sum t_i X^i), by tensor-product interpolation.

    ``degree`` bounds the degree of the polynomial in each t_i separately
    (n for an immanant of order n, m for the entries of K_chi). Exact on
    object arrays; ``f`` may return scalars or arrays.
    """
    A = as_matrix(A)
    exact_mode = A.dtype == object
    dirs = [as_matrix(X, exact_mode) for X in directions]
    weights = _derivative_weights(degree)
    if exact_mode:
        w = [exact(x) for x in weights]
    else:
        w = [float(x) for x in weights]
    total = None
    for node in product(range(degree + 1), repeat=len(dirs)):
        coeff = ONE if exact_mode else 1.0
        for j in node:
            coeff = coeff * w[j]
        if not coeff:
            continue
        point = A.copy()
        for j, X in zip(node, dirs):
            if j:
                point = point + X * j
        term = f(point) * coeff
        total = term if total is None else total + term
    if total is None:
        total = f(A) * 0
    return total


def finite_difference_derivative(f: Callable, A, directions: Sequence, step: float = 1e-3,
                                 richardson: bool = True):
    """Nested central differences for the mixed partial d^k/dt_1..dt_k at t = 0.

    One level of Richardson extrapolation removes the O(step^2) term.
    """
    A = float_matrix(A)
    dirs = [float_matrix(X) for X in directions]

    def stencil(h):
        total = None
        for signs in product((1, -1), repeat=len(dirs)):
            point = A.copy()
            for s, X in zip(signs, dirs):
                point = point + (s * h) * X
            term = np.asarray(f(point), dtype=complex) * math.prod(signs)
            total = term if total is None else total + term
        return total / (2 * h) ** len(dirs)

    coarse = stencil(step)
    if not richardson:
        return coarse
    fine = stencil(step / 2)
    return (4 * fine - coarse) / 3


def _check_brute(M):
    M = as_matrix(M)
    if M.shape[0] > MAX_BRUTE_ORDER:
        raise SizeLimitError(f"brute-force references are limited to order {MAX_BRUTE_ORDER}")
    return M


def determinant(M):
    """Gaussian elimination with nonzero (exact) or largest (float) pivots."""
    M = _check_brute(M)
    n = M.shape[0]
    exact_mode = M.dtype == object
    if n == 0:
        return ONE if exact_mode else 1 + 0j
    rows = [list(r) for r in M.tolist()]
    det = ONE if exact_mode else 1 + 0j
    for c in range(n):
        if exact_mode:
            pivot = next((r for r in range(c, n) if rows[r][c]), None)
        else:
            pivot = max(range(c, n), key=lambda r: abs(rows[r][c]))
            if rows[pivot][c] == 0:
                pivot = None
        if pivot is None:
            return ZERO if exact_mode else 0j
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        p = rows[c][c]
        det = det * p
        for r in range(c + 1, n):
            if not rows[r][c]:
                continue
            factor = rows[r][c] / p
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[c])]
    return det


def permanent(M):
    """Ryser: perm(M) = (-1)^n sum over column sets S of (-1)^|S| prod_i sum_{j in S} m_ij."""
    M = _check_brute(M)
    n = M.shape[0]
    exact_mode = M.dtype == object
    if n == 0:
        return ONE if exact_mode else 1 + 0j
    rows = M.tolist()
    total = zero_of(M)
    for size in range(1, n + 1):
        for cols in combinations(range(n), size):
            prod = None
            for row in rows:
                s = row[cols[0]]
                for j in cols[1:]:
                    s = s + row[j]
                prod = s if prod is None else prod * s
            total = total + prod if (n - size) % 2 == 0 else total - prod
    return total


def mixed_discriminant(matrices: Sequence):
    """Polarisation: D(B_1..B_n) = (1/n!) sum over S of (-1)^(n-|S|) det(sum_{i in S} B_i)."""
    mats = [_check_brute(B) for B in matrices]
    n = mats[0].shape[0] if mats else 0
    if len(mats) != n:
        raise ShapeError(f"mixed discriminant of order-{n} matrices takes {n} arguments")
    if n == 0:
        return ONE
    exact_mode = any(B.dtype == object for B in mats)
    if exact_mode:
        mats = [as_matrix(B, True) for B in mats]
    total = zero_of(mats[0])
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            S = mats[subset[0]]
            for i in subset[1:]:
                S = S + mats[i]
            d = determinant(S)
            total = total + d if (n - size) % 2 == 0 else total - d
    if exact_mode:
        return total * exact(Fraction(1, math.factorial(n)))
    return total / math.factorial(n)


def brute_force_reference(kind: str, *args):
    """Dispatch to ``det``, ``perm`` or ``mixed-discriminant``."""
    if kind == "det":
        return determinant(*args)
    if kind == "perm":
        return permanent(*args)
    if kind in ("mixed-discriminant", "mixed_discriminant"):
        return mixed_discriminant(*args)
    raise ValueError(f"unknown reference kind {kind!r}")
