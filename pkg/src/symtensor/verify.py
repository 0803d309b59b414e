"""Oracle comparison suites behind ``symtensor verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._scalars import exact_matrix
from .derivatives import derivative_first, derivative_values, methods_agree
from .immanant import immanant, laplace_expansion
from .indexcomb import Family, build_basis_index_set, enumerate_index_maps
from .oracle import (
    TensorSpaceModel,
    determinant,
    finite_difference_derivative,
    permanent,
    poly_coefficient_derivative,
    projector_oracle_k_chi,
)
from .symgroup import character_table, partitions
from .tensorpower import k_chi, k_chi_derivative

SUITES = ("characters", "immanant", "derivatives", "tensorpower")


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.suite}: {self.name}" + (f" ({self.detail})" if self.detail else "")


def _gaussian_integer_matrix(rng, n, bound=3):
    return exact_matrix(rng.integers(-bound, bound + 1, (n, n)) + 1j * rng.integers(-bound, bound + 1, (n, n)))


def _characters(rng):
    for m in range(1, 7):
        table = character_table(m)
        sizes = np.array([int(s) for s in table.class_sizes], dtype=object)
        vals = table.values.astype(object)
        gram = (vals * sizes) @ vals.T
        ok = bool(np.all(gram == math.factorial(m) * np.eye(len(sizes), dtype=int)))
        yield f"row orthogonality m={m}", ok, ""
        yield f"sum of squared degrees m={m}", sum(int(d) ** 2 for d in table.values[:, -1]) == math.factorial(m), ""


def _immanant(rng):
    for n in range(1, 6):
        A = _gaussian_integer_matrix(rng, n)
        yield f"determinant n={n}", immanant(A, (1,) * n) == determinant(A), ""
        yield f"permanent n={n}", immanant(A, (n,)) == permanent(A), ""
    for n in range(2, 5):
        A = _gaussian_integer_matrix(rng, n)
        for lam in partitions(n):
            ok = all(laplace_expansion(A, lam, alpha).total == immanant(A, lam)
                     for k in range(1, n + 1) for alpha in enumerate_index_maps(k, n, Family.Q))
            yield f"Laplace expansion n={n} chi={lam}", ok, ""


def _derivatives(rng):
    n = 3
    for lam in partitions(n):
        A = _gaussian_integer_matrix(rng, n)
        dirs = [_gaussian_integer_matrix(rng, n) for _ in range(n)]
        f = lambda M, lam=lam: immanant(M, lam)
        first = derivative_first(A, dirs[0], lam)
        yield f"Jacobi formula chi={lam}", first == poly_coefficient_derivative(f, A, dirs[:1], n), ""
        for k in range(1, n + 1):
            values = derivative_values(A, dirs[:k], lam)
            oracle = poly_coefficient_derivative(f, A, dirs[:k], n)
            ok = methods_agree(values, True) and values["first"] == oracle
            yield f"order {k} chi={lam}", ok, ""


def _tensorpower(rng):
    for n, m in [(2, 2), (3, 2), (3, 3)]:
        A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        for lam in partitions(m):
            err = np.max(np.abs(k_chi(A, lam, m) - projector_oracle_k_chi(A, lam, m)))
            yield f"K_chi vs projector n={n} m={m} chi={lam}", err < 1e-10, f"max err {err:.1e}"
            model = TensorSpaceModel(lam, m, n)
            rank = int(round(np.trace(model.projector)))
            yield f"dim V_chi n={n} m={m} chi={lam}", rank == build_basis_index_set(lam, m, n).t, ""
    n, m = 3, 2
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    dirs = [rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) for _ in range(2)]
    for lam in partitions(m):
        for k in (1, 2):
            D = k_chi_derivative(A, dirs[:k], lam, m)
            F = finite_difference_derivative(lambda M, lam=lam: k_chi(M, lam, m), A, dirs[:k])
            rel = np.max(np.abs(D - F)) / max(np.max(np.abs(D)), 1e-300)
            yield f"D^{k} K_chi vs finite differences chi={lam}", rel < 1e-5, f"rel err {rel:.1e}"


_SUITE_FUNCS: dict[str, Callable] = {
    "characters": _characters,
    "immanant": _immanant,
    "derivatives": _derivatives,
    "tensorpower": _tensorpower,
}


def run_suite(suite: str = "all", seed: int = 20240) -> list[Check]:
    names = SUITES if suite == "all" else (suite,)
    checks = []
    for name in names:
        if name not in _SUITE_FUNCS:
            raise ValueError(f"unknown suite {name!r}")
        rng = np.random.default_rng(seed)
        for label, ok, detail in _SUITE_FUNCS[name](rng):
            checks.append(Check(name, label, bool(ok), detail))
    return checks
