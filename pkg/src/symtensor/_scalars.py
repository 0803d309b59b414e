"""Scalar modes.

Two modes are supported throughout the package:

* exact: ``numpy`` object arrays whose entries are Gaussian rationals
  (elements of ``sympy.QQ_I``),
* float: ``complex128`` arrays.

Generic routines only use ``+``, ``-``, ``*`` and truthiness, so object
arrays of sympy symbols also pass through the matrix-surgery helpers.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational

import numpy as np
from sympy import QQ, QQ_I

ZERO = QQ_I.zero
ONE = QQ_I.one


def _rational(value) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, float):
        # decimal literal, not the binary expansion
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}") from None
    numerator = getattr(value, "numerator", None)
    if numerator is not None:
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot read {value!r} as a rational number")


def _from_fractions(re_part: Fraction, im_part: Fraction):
    return QQ_I(QQ(re_part.numerator, re_part.denominator),
                QQ(im_part.numerator, im_part.denominator))


def parse_complex_string(text: str):
    """Parse ``"p/q"``, ``"p/q+r/si"`` or ``"r/si"`` into an exact scalar."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar string")
    if not s.endswith("i"):
        return _from_fractions(_rational(s), Fraction(0))
    body = s[:-1]
    cut = max(body.rfind("+", 1), body.rfind("-", 1))
    # a sign right after "/" cannot start the imaginary part
    if cut > 0 and body[cut - 1] == "/":
        raise ValueError(f"malformed exact scalar {text!r}")
    re_text, im_text = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
    if im_text in ("", "+", "-"):
        im_text += "1"
    return _from_fractions(_rational(re_text), _rational(im_text))


def exact(value):
    """Convert ``value`` to a Gaussian rational."""
    if type(value) is type(ZERO):
        return value
    if isinstance(value, str):
        return parse_complex_string(value)
    if isinstance(value, complex):
        return _from_fractions(_rational(value.real), _rational(value.imag))
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return _from_fractions(_rational(value[0]), _rational(value[1]))
    if isinstance(value, np.generic):
        return exact(value.item())
    return _from_fractions(_rational(value), Fraction(0))


def to_complex(value) -> complex:
    if type(value) is type(ZERO):
        return complex(float(value.x), float(value.y))
    return complex(value)


def real_imag_fractions(value) -> tuple[Fraction, Fraction]:
    value = exact(value)
    return (Fraction(int(value.x.numerator), int(value.x.denominator)),
            Fraction(int(value.y.numerator), int(value.y.denominator)))


def is_exact(a) -> bool:
    """True for object arrays (exact or symbolic) and for Gaussian rationals."""
    if isinstance(a, np.ndarray):
        return a.dtype == object
    return type(a) is type(ZERO)


def exact_matrix(data) -> np.ndarray:
    arr = np.asarray(data, dtype=object)
    if arr.ndim == 3 and arr.shape[-1] == 2:
        out = np.empty(arr.shape[:2], dtype=object)
        for idx in np.ndindex(out.shape):
            out[idx] = exact(tuple(arr[idx]))
        return out
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = exact(arr[idx])
    return out


def float_matrix(data) -> np.ndarray:
    arr = np.asarray(data)
    if arr.dtype == object:
        return np.vectorize(to_complex, otypes=[complex])(arr) if arr.size else arr.astype(complex)
    return arr.astype(complex)


def as_matrix(data, exact_mode: bool | None = None) -> np.ndarray:
    """Return ``data`` as a square matrix in the requested scalar mode.

    ``exact_mode=None`` keeps object arrays as they are and turns every
    other input into ``complex128``.
    """
    if exact_mode is None:
        if isinstance(data, np.ndarray) and data.dtype == object:
            arr = data
        else:
            arr = float_matrix(data)
    elif exact_mode:
        arr = exact_matrix(data)
    else:
        arr = float_matrix(data)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        from .errors import ShapeError
        raise ShapeError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def zero_of(a: np.ndarray):
    """The additive zero matching the entries of ``a``."""
    if a.dtype != object:
        return a.dtype.type(0)
    if a.size:
        return a.flat[0] * 0
    return ZERO


def zeros_like(a: np.ndarray, shape=None) -> np.ndarray:
    shape = a.shape if shape is None else shape
    if a.dtype != object:
        return np.zeros(shape, dtype=a.dtype)
    return np.full(shape, zero_of(a), dtype=object)


def scalar_zero(exact_mode: bool):
    return ZERO if exact_mode else 0j


def divide(value, denominator: int):
    """Divide by a nonzero integer without leaving the scalar mode."""
    if is_exact(value) or isinstance(value, np.ndarray) and value.dtype == object:
        return value * QQ_I(QQ(1, denominator))
    return value / denominator


def scale(value, factor: Fraction):
    """Multiply by a rational, staying exact when the value is exact."""
    factor = Fraction(factor)
    if is_exact(value) or isinstance(value, np.ndarray) and value.dtype == object:
        return value * QQ_I(QQ(factor.numerator, factor.denominator))
    return value * (factor.numerator / factor.denominator)
