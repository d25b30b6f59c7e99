"""Exact polynomials of degree at most 2 in the Gauduchon parameter ``t``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .rational import format_rational, frozen, parse_rational


@dataclass(frozen=True)
class TPoly:
    """``c0 + c1*t + c2*t**2`` with rational coefficients."""

    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("c0", "c1", "c2"):
            object.__setattr__(self, name, parse_rational(getattr(self, name)))

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2)

    @property
    def degree(self) -> int:
        """Index of the highest nonzero coefficient; ``-1`` for the zero polynomial."""
        for d in (2, 1, 0):
            if self.coefficients[d] != 0:
                return d
        return -1

    def is_zero(self) -> bool:
        return self.degree == -1

    def __call__(self, t) -> Fraction:
        t = parse_rational(t)
        return self.c0 + t * (self.c1 + t * self.c2)

    def __add__(self, other: TPoly) -> TPoly:
        return TPoly(*(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: TPoly) -> TPoly:
        return TPoly(*(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, scalar) -> TPoly:
        s = parse_rational(scalar)
        return TPoly(*(s * c for c in self.coefficients))

    __rmul__ = __mul__

    def rational_roots(self) -> list[Fraction] | None:
        """Sorted rational roots; ``None`` for the zero polynomial.

        A quadratic with irrational (or non-real) roots yields ``[]``; use
        :meth:`has_irrational_roots` to tell it apart from "no roots at all"
        only when that distinction matters.
        """
        c0, c1, c2 = self.coefficients
        deg = self.degree
        if deg == -1:
            return None
        if deg == 0:
            return []
        if deg == 1:
            return [-c0 / c1]
        disc = c1 * c1 - 4 * c0 * c2
        root = _rational_sqrt(disc)
        if root is None:
            return []
        return sorted({(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)})

    def has_irrational_roots(self) -> bool:
        """True for a genuine quadratic whose discriminant is not a rational square.

        Non-real roots (negative discriminant) count here too: either way the
        quadratic has no rational root.
        """
        if self.degree != 2:
            return False
        c0, c1, c2 = self.coefficients
        return _rational_sqrt(c1 * c1 - 4 * c0 * c2) is None

    def __str__(self):
        terms = [(c, m) for c, m in zip(self.coefficients, ("", "*t", "*t^2")) if c != 0]
        if not terms:
            return "0"
        return " + ".join(f"{format_rational(c)}{m}" for c, m in terms)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    p, r = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if p * p != q.numerator or r * r != q.denominator:
        return None
    return Fraction(p, r)


def interpolate(samples) -> TPoly:
    """The polynomial of degree < len(samples) through ``(t, value)`` pairs (at most 3)."""
    samples = [(parse_rational(t), parse_rational(v)) for t, v in samples]
    if not 1 <= len(samples) <= 3:
        raise ValueError("need between one and three samples")
    coeffs = [Fraction(0)] * 3
    for i, (ti, vi) in enumerate(samples):
        # basis polynomial prod_{j != i} (t - tj) / (ti - tj), built coefficientwise
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (tj, _) in enumerate(samples):
            if j == i:
                continue
            basis = [lo - tj * hi for lo, hi in zip([Fraction(0)] + basis, basis + [Fraction(0)])]
            denom *= ti - tj
        for d, c in enumerate(basis):
            coeffs[d] += vi * c / denom
    return TPoly(*coeffs)


class TPolyTensor:
    """A dense tensor of degree-at-most-2 polynomials, in frame index order.

    Stored as three coefficient arrays; :class:`TPoly` objects are built
    only when an entry is requested.
    """

    def __init__(self, c0, c1=None, c2=None):
        c0 = np.asarray(c0, dtype=object)
        zero = np.empty(c0.shape, dtype=object)
        zero.fill(Fraction(0))
        self.coefficient_arrays = tuple(
            frozen(np.array(c if c is not None else zero, dtype=object)) for c in (c0, c1, c2))

    @classmethod
    def from_samples(cls, nodes, tensors) -> "TPolyTensor":
        """Interpolate entrywise through component arrays sampled at ``nodes``.

        The Lagrange basis depends only on the nodes, so it is computed once
        and applied to whole arrays.
        """
        arrays = [np.asarray(t, dtype=object) for t in tensors]
        k = len(nodes)
        basis = [interpolate([(t, int(i == j)) for i, t in enumerate(nodes)]).coefficients
                 for j in range(k)]
        coeffs = []
        for d in range(3):
            acc = arrays[0] * basis[0][d]
            for j in range(1, k):
                acc = acc + arrays[j] * basis[j][d]
            coeffs.append(acc)
        return cls(*coeffs)

    @property
    def rank(self) -> int:
        return self.coefficient_arrays[0].ndim

    @property
    def dim(self) -> int:
        return self.coefficient_arrays[0].shape[0]

    def _poly(self, idx) -> TPoly:
        return TPoly(*(c[idx] for c in self.coefficient_arrays))

    def entry(self, *idx: int) -> TPoly:
        if len(idx) != self.rank or not all(1 <= i <= self.dim for i in idx):
            raise IndexError(f"index {idx} outside 1..{self.dim}")
        return self._poly(tuple(i - 1 for i in idx))

    def evaluate(self, t) -> np.ndarray:
        t = parse_rational(t)
        c0, c1, c2 = self.coefficient_arrays
        return frozen(np.asarray(c0 + (c1 + c2 * t) * t, dtype=object))

    def nonzero(self):
        """``(1-based index, TPoly)`` for nonzero entries, lexicographic."""
        c0, c1, c2 = self.coefficient_arrays
        mask = (c0 != 0) | (c1 != 0) | (c2 != 0)
        return [(tuple(int(i) + 1 for i in idx), self._poly(tuple(idx)))
                for idx in np.argwhere(mask)]

    def is_zero(self) -> bool:
        return not self.nonzero()
