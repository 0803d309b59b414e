import numpy as np
import pytest

from symtensor import exact_matrix
from symtensor._scalars import real_imag_fractions

ACCEPTANCE_LINES = []


def plain(value):
    """Exact scalars and arrays as Python ints, Fractions or complex, for literal comparisons."""
    if isinstance(value, np.ndarray):
        return [plain(v) for v in value.tolist()] if value.ndim else plain(value.item())
    if isinstance(value, list):
        return [plain(v) for v in value]
    re, im = real_imag_fractions(value)
    if im:
        return complex(re, im)
    return int(re) if re.denominator == 1 else re


def gaussian_integer_matrix(rng, n, bound=3, real=False):
    re = rng.integers(-bound, bound + 1, (n, n))
    if real:
        return exact_matrix(re)
    return exact_matrix(re + 1j * rng.integers(-bound, bound + 1, (n, n)))


def complex_matrix(rng, n, scale=1.0):
    return scale * (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
