"""JSON wire format for scalars and matrices.

A matrix is ``{"n": n, "entries": [[[re, im], ...], ...]}``. In exact mode a
real or imaginary part is an integer or a ``"p/q"`` string, and a whole
entry may also be written as a string such as ``"1/2+3/4i"``; float mode
uses plain JSON numbers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from ._scalars import exact, real_imag_fractions, to_complex
from .errors import ShapeError


def _part_to_json(q: Fraction):
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def scalar_to_json(value) -> list:
    if isinstance(value, (complex, float, int, np.number)) and not isinstance(value, bool):
        z = complex(value)
        return [z.real, z.imag]
    re, im = real_imag_fractions(value)
    return [_part_to_json(re), _part_to_json(im)]


def scalar_from_json(obj, exact_mode: bool = True):
    if exact_mode:
        return exact(tuple(obj) if isinstance(obj, list) else obj)
    if isinstance(obj, list):
        re, im = obj
        return complex(float(Fraction(re)) if isinstance(re, str) else re,
                       float(Fraction(im)) if isinstance(im, str) else im)
    if isinstance(obj, str):
        return to_complex(exact(obj))
    return complex(obj)


def matrix_entries_to_json(A) -> list:
    return [[scalar_to_json(x) for x in row] for row in np.asarray(A)]


def matrix_to_json(A) -> dict:
    A = np.asarray(A)
    return {"n": int(A.shape[0]), "entries": matrix_entries_to_json(A)}


def matrix_from_json(obj, exact_mode: bool = True) -> np.ndarray:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ValueError('matrix JSON must be an object with an "entries" field')
    rows = obj["entries"]
    n = obj.get("n", len(rows))
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ShapeError(f"matrix JSON declares n={n} but entries are not {n}x{n}")
    if exact_mode:
        out = np.empty((n, n), dtype=object)
    else:
        out = np.empty((n, n), dtype=complex)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = scalar_from_json(x, exact_mode)
    return out


def load_matrix(path, exact_mode: bool = True) -> np.ndarray:
    return matrix_from_json(json.loads(Path(path).read_text()), exact_mode)


def dump_matrix(A, path) -> None:
    Path(path).write_text(json.dumps(matrix_to_json(A)))
