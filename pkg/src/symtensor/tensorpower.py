"""The m-th chi-symmetric tensor power K_chi(A) and its derivatives.

The matrix of K_chi(A) is taken in the orthonormal basis obtained by
Gram-Schmidt from the decomposable symmetrised tensors ``e*_alpha``,
``alpha`` running over Delta-hat in lexicographic order:

    K_chi(A) = (chi(id)/m!) B^* imm_chi(A) B

where ``imm_chi(A)`` collects the immanantal minors d_chi(A[gamma|delta]) and
``B`` is the upper-triangular change of basis with ``B^* G B = I``.

When the Gram block is a multiple ``c I`` of the identity (the alternating
character, and m = 1), ``B^* M B = M / c`` and everything stays exact on
object arrays. Otherwise ``B`` carries square roots and results are
``complex128``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
import scipy.linalg

from ._scalars import as_matrix, float_matrix, scale, zero_of
from .derivatives import derivative_k_second_expression, mixed_immanant
from .errors import DegenerateOrderWarning, MethodDisagreementError, ShapeError, SingularGramError, SizeLimitError
from .immanant import immanant, submatrix
from .indexcomb import (
    BasisIndexSet,
    Family,
    IndexMap,
    build_basis_index_set,
    complement,
    enumerate_index_maps,
    index_sum,
    stabilizer,
)
from .symgroup import as_partition, character_value, conjugate_character, degree, symmetric_group

MAX_T = 64
MAX_N = 5
MAX_M = 4
CHECK_TOL = 1e-10


def gram_entry(alpha: Sequence[int], beta: Sequence[int], chi) -> Fraction:
    """<e*_alpha, e*_beta> = (chi(id)/m!) * sum of chi(sigma) over sigma with beta o sigma = alpha."""
    lam = as_partition(chi)
    m = lam.weight
    if len(alpha) != m or len(beta) != m:
        raise ShapeError(f"index maps of length {m} required for a character of S_{m}")
    total = 0
    for sigma in symmetric_group(m):
        if all(beta[sigma[t]] == alpha[t] for t in range(m)):
            total += character_value(lam, sigma)
    return Fraction(degree(lam) * total, math.factorial(m))


@lru_cache(maxsize=None)
def _character_lookup(lam) -> dict[tuple[int, ...], int]:
    return {s: character_value(lam, s) for s in symmetric_group(lam.weight)}


def _transport(alpha: IndexMap, beta: IndexMap):
    """Some sigma with beta o sigma = alpha, or None if the maps lie in different orbits."""
    if sorted(alpha) != sorted(beta):
        return None
    slots: dict[int, list[int]] = {}
    for pos, value in enumerate(beta):
        slots.setdefault(value, []).append(pos)
    used: dict[int, int] = {}
    sigma = []
    for value in alpha:
        i = used.get(value, 0)
        sigma.append(slots[value][i])
        used[value] = i + 1
    return tuple(sigma)


def gram_matrix(indices: Sequence[IndexMap], chi) -> list[list[Fraction]]:
    """Exact Gram matrix of ``{e*_alpha}``.

    Entries between different orbits vanish; within an orbit the solutions
    of ``beta o sigma = alpha`` form the coset ``sigma0 G_alpha``.
    """
    lam = as_partition(chi)
    m = lam.weight
    chi_of = _character_lookup(lam)
    norm = Fraction(degree(lam), math.factorial(m))
    stabilizers: dict[IndexMap, list] = {}
    out = []
    for alpha in indices:
        alpha = tuple(alpha)
        if alpha not in stabilizers:
            stabilizers[alpha] = stabilizer(alpha)
        row = []
        for beta in indices:
            sigma0 = _transport(alpha, tuple(beta))
            if sigma0 is None:
                row.append(Fraction(0))
                continue
            total = sum(chi_of[tuple(sigma0[t] for t in tau)] for tau in stabilizers[alpha])
            row.append(norm * total)
        out.append(row)
    return out


@dataclass(frozen=True)
class ChangeOfBasis:
    """Upper-triangular B over Delta-hat with B^* G B = I.

    ``scalar`` is set when G = c I, in which case B = I / sqrt(c) and
    ``B^* M B`` equals ``M / c`` exactly.
    """

    delta_hat: tuple[IndexMap, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    matrix: np.ndarray
    scalar: Fraction | None

    def sandwich(self, M: np.ndarray) -> np.ndarray:
        """B^* M B, exact when ``scalar`` is set and M is an object array."""
        if self.scalar is not None and M.dtype == object:
            return scale(M, 1 / self.scalar)
        B = self.matrix
        return B.conj().T @ float_matrix(M) @ B


def gram_schmidt_B(delta_hat: Sequence[IndexMap], chi) -> ChangeOfBasis:
    """Change of basis from the Gram-Schmidt orthonormalisation of {e*_alpha : alpha in Delta-hat}.

    Gram-Schmidt in lexicographic order makes B upper triangular with positive
    diagonal, so B is the inverse of the Cholesky factor R of G = R^* R.
    """
    delta_hat = tuple(tuple(a) for a in delta_hat)
    gram = gram_matrix(delta_hat, chi)
    t = len(delta_hat)
    if t == 0:
        # V_chi = 0: every matrix over it is 0 x 0
        return ChangeOfBasis(delta_hat, (), np.zeros((0, 0)), None)
    G = np.array([[float(g) for g in row] for row in gram], dtype=float)
    try:
        R = np.linalg.cholesky(G).T
    except np.linalg.LinAlgError as exc:
        raise SingularGramError("Gram block on Delta-hat is not positive definite") from exc
    if np.min(np.abs(np.diag(R))) < 1e-10:
        raise SingularGramError("Gram block on Delta-hat is numerically singular")
    B = scipy.linalg.solve_triangular(R, np.eye(t), lower=False)
    diag = {gram[i][i] for i in range(t)}
    off_diagonal_zero = all(gram[i][j] == 0 for i in range(t) for j in range(t) if i != j)
    scalar = diag.pop() if off_diagonal_zero and len(diag) == 1 else None
    return ChangeOfBasis(delta_hat, tuple(tuple(r) for r in gram), B, scalar)


@lru_cache(maxsize=None)
def _basis(lam, m: int, n: int) -> tuple[BasisIndexSet, ChangeOfBasis]:
    index_set = build_basis_index_set(lam, m, n)
    if index_set.t > MAX_T:
        raise SizeLimitError(f"symmetry class of dimension {index_set.t} exceeds the cap t <= {MAX_T}")
    return index_set, gram_schmidt_B(index_set.delta_hat, lam)


def symmetric_power_basis(chi, m: int, n: int) -> tuple[BasisIndexSet, ChangeOfBasis]:
    lam = as_partition(chi)
    if lam.weight != m:
        raise ShapeError(f"partition {lam} does not have weight m={m}")
    if not (1 <= n <= MAX_N and 1 <= m <= MAX_M):
        raise SizeLimitError(f"tensor powers are limited to n <= {MAX_N}, m <= {MAX_M}")
    return _basis(lam, m, n)


def imm_matrix(A, chi, delta_hat: Sequence[IndexMap]) -> np.ndarray:
    """Immanantal minors: entry (gamma, delta) is d_chi(A[gamma|delta])."""
    A = as_matrix(A)
    t = len(delta_hat)
    out = np.empty((t, t), dtype=object if A.dtype == object else complex)
    for i, g in enumerate(delta_hat):
        for j, d in enumerate(delta_hat):
            out[i, j] = immanant(submatrix(A, g, d, Family.GAMMA), chi)
    return out


def miximm_matrix(matrices: Sequence, chi, delta_hat: Sequence[IndexMap]) -> np.ndarray:
    """Entry (gamma, delta) is Delta_chi(M^1[gamma|delta], ..., M^m[gamma|delta])."""
    lam = as_partition(chi)
    mats = [as_matrix(M) for M in matrices]
    if len(mats) != lam.weight:
        raise ShapeError(f"miximm for a character of S_{lam.weight} takes {lam.weight} matrices, got {len(mats)}")
    exact = any(M.dtype == object for M in mats)
    if exact:
        mats = [as_matrix(M, True) for M in mats]
    t = len(delta_hat)
    out = np.empty((t, t), dtype=object if exact else complex)
    for i, g in enumerate(delta_hat):
        for j, d in enumerate(delta_hat):
            out[i, j] = mixed_immanant([submatrix(M, g, d, Family.GAMMA) for M in mats], lam)
    return out


def _check_inputs(A, chi, m):
    A = as_matrix(A)
    lam = as_partition(chi)
    if lam.weight != m:
        raise ShapeError(f"partition {lam} does not have weight m={m}")
    return A, lam


def k_chi(A, chi, m: int) -> np.ndarray:
    """K_chi(A), the t x t matrix of the chi-symmetric tensor power, rows and columns indexed by Delta-hat."""
    A, lam = _check_inputs(A, chi, m)
    _, basis = symmetric_power_basis(lam, m, A.shape[0])
    imm = imm_matrix(A, conjugate_character(lam), basis.delta_hat)
    return scale(basis.sandwich(imm), Fraction(degree(lam), math.factorial(m)))


def _degenerate_matrix(A, t, k, m):
    warnings.warn(f"order-{k} derivative of entries of degree {m} is identically zero",
                  DegenerateOrderWarning, stacklevel=3)
    if A.dtype == object:
        return np.full((t, t), zero_of(A), dtype=object)
    return np.zeros((t, t), dtype=complex)


def k_chi_derivative_closed(A, directions: Sequence, chi, m: int) -> np.ndarray:
    """(chi(id)/(m-k)!) B^* miximm_chi(A; X^1, ..., X^k) B."""
    A, lam = _check_inputs(A, chi, m)
    dirs = [as_matrix(X, A.dtype == object) for X in directions]
    index_set, basis = symmetric_power_basis(lam, m, A.shape[0])
    k = len(dirs)
    if k > m:
        return _degenerate_matrix(A, index_set.t, k, m)
    mix = miximm_matrix([A] * (m - k) + dirs, conjugate_character(lam), basis.delta_hat)
    return scale(basis.sandwich(mix), Fraction(degree(lam), math.factorial(m - k)))


def k_chi_derivative_entries(A, directions: Sequence, chi, m: int) -> np.ndarray:
    """Expanded entry formula: (chi(id)/m!) sum over gamma, delta of conj(b_{delta alpha}) b_{gamma beta}
    times sum over sigma in S_k and rho, tau in Q_{k,m} of
    d_chi(X[delta|gamma]^sigma_tau[rho|tau] (+)_{rho|tau} A[delta|gamma](rho|tau))."""
    A, lam = _check_inputs(A, chi, m)
    dirs = [as_matrix(X, A.dtype == object) for X in directions]
    index_set, basis = symmetric_power_basis(lam, m, A.shape[0])
    k = len(dirs)
    if k > m:
        return _degenerate_matrix(A, index_set.t, k, m)
    bar = conjugate_character(lam)
    t = index_set.t
    inner = np.empty((t, t), dtype=object if A.dtype == object else complex)
    for i, d in enumerate(basis.delta_hat):
        for j, g in enumerate(basis.delta_hat):
            C = submatrix(A, d, g, Family.GAMMA)
            Z = [submatrix(X, d, g, Family.GAMMA) for X in dirs]
            inner[i, j] = derivative_k_second_expression(C, Z, bar)
    return scale(basis.sandwich(inner), Fraction(degree(lam), math.factorial(m)))


def _matrices_agree(P, Q, exact: bool) -> bool:
    if exact and P.dtype == object and Q.dtype == object:
        return bool(np.all(P == Q))
    P, Q = float_matrix(P), float_matrix(Q)
    return bool(np.max(np.abs(P - Q), initial=0.0) <= CHECK_TOL * max(1.0, np.max(np.abs(P), initial=0.0)))


def k_chi_derivative(A, directions: Sequence, chi, m: int) -> np.ndarray:
    """D^k K_chi(A)(X^1, ..., X^k) with k = len(directions).

    The closed matrix form and the expanded entry formula are both
    evaluated; MethodDisagreementError is raised if they differ.
    """
    A = as_matrix(A)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateOrderWarning)
        closed = k_chi_derivative_closed(A, directions, chi, m)
        expanded = k_chi_derivative_entries(A, directions, chi, m)
    if len(directions) > m:
        warnings.warn(f"order-{len(directions)} derivative of entries of degree {m} is identically zero",
                      DegenerateOrderWarning, stacklevel=2)
    if not _matrices_agree(closed, expanded, A.dtype == object):
        raise MethodDisagreementError("closed form and entry formula of the tensor-power derivative differ")
    return closed


def compound_derivative(A, directions: Sequence, m: int) -> np.ndarray:
    """Entries of D^k of the m-th compound, indexed by Q_{m,n}:

    k! sum over rho, tau in Q_{k,m} of (-1)^(|rho|+|tau|) det(A[a|b](rho|tau))
    times the mixed discriminant of X^1[a|b][rho|tau], ..., X^k[a|b][rho|tau].
    """
    from .oracle import determinant, mixed_discriminant

    A = as_matrix(A)
    n = A.shape[0]
    dirs = [as_matrix(X, A.dtype == object) for X in directions]
    k = len(dirs)
    q_m = enumerate_index_maps(m, n, Family.Q)
    t = len(q_m)
    exact = A.dtype == object
    if k > m:
        return _degenerate_matrix(A, t, k, m)
    q_k = enumerate_index_maps(k, m, Family.Q)
    out = np.empty((t, t), dtype=object if exact else complex)
    for i, a in enumerate(q_m):
        for j, b in enumerate(q_m):
            C = submatrix(A, a, b)
            Zs = [submatrix(X, a, b) for X in dirs]
            total = zero_of(A)
            for rho in q_k:
                for tau in q_k:
                    minor = determinant(submatrix(C, complement(rho, m), complement(tau, m)))
                    disc = mixed_discriminant([submatrix(Z, rho, tau) for Z in Zs])
                    term = minor * disc
                    total = total + (term if (index_sum(rho) + index_sum(tau)) % 2 == 0 else -term)
            out[i, j] = math.factorial(k) * total
    return out
