"""Exact rational helpers on top of :class:`fractions.Fraction`.

Tensors throughout the package are numpy ``object`` arrays whose entries are
``Fraction`` instances, so elementwise arithmetic and ``einsum`` stay exact.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction

import numpy as np

from .errors import ValidationError

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p"``, ``"-p"``, ``"p/q"`` or ``"-p/q"`` with ``q > 0``.

    Integers are accepted as-is; floats are rejected because they are not
    exact.
    """
    if isinstance(text, bool):
        raise ValidationError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValidationError(f"not a rational string: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValidationError(f"not a rational string: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValidationError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def zeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def as_exact(values) -> np.ndarray:
    """Copy ``values`` into an object array of ``Fraction`` (no floats)."""
    arr = np.array(values, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        if isinstance(v, float):
            raise ValidationError("floating point values are not allowed")
        out[idx] = v if type(v) is Fraction else Fraction(v)
    return out


def frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def is_zero(arr: np.ndarray) -> bool:
    return all(v == 0 for v in arr.flat)


def nonzero_items(arr: np.ndarray):
    """Yield ``(1-based index tuple, value)`` for nonzero entries in lexicographic order."""
    for idx, v in np.ndenumerate(arr):
        if v != 0:
            yield tuple(i + 1 for i in idx), v


def integer_form(arr) -> tuple[np.ndarray, int]:
    """``(ints, den)`` with ``arr == ints / den`` and ``ints`` an object array of Python ints."""
    arr = np.asarray(arr, dtype=object)
    den = 1
    for v in arr.flat:
        den = math.lcm(den, v.denominator)
    ints = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        ints[idx] = v.numerator * (den // v.denominator)
    return ints, den


def from_integer_form(ints, den: int) -> np.ndarray:
    ints = np.asarray(ints, dtype=object)
    out = np.empty(ints.shape, dtype=object)
    for idx, v in np.ndenumerate(ints):
        out[idx] = Fraction(v, den)
    return out


def int_einsum(subscripts: str, *operands) -> np.ndarray:
    """``np.einsum`` over object arrays of Python ints."""
    return np.asarray(np.einsum(subscripts, *operands, optimize="greedy"), dtype=object)


def exact_einsum(subscripts: str, *operands) -> np.ndarray:
    """``np.einsum`` over rationals, computed on integer numerators.

    Each operand is scaled to integers by its common denominator and
    contracted as Python ints, which is far cheaper than ``Fraction``
    arithmetic; the result is divided once at the end.
    """
    scaled, den = [], 1
    for op in operands:
        ints, d = integer_form(op)
        scaled.append(ints)
        den *= d
    return from_integer_form(int_einsum(subscripts, *scaled), den)
