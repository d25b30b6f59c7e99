"""Immutable exact tensors indexed by a standard frame ``e_1..e_{2n}``.

Storage is 0-based; :meth:`ExactTensor.component` takes 1-based indices so
code and tests can be read side by side with hand computations.
Index order in ``components`` is always "lower indices first, then upper":
``components[a, b, c]`` of a vector-valued 2-form is ``<theta(e_a, e_b), e_c>``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, NotAntisymmetric
from .rational import as_exact, frozen, is_zero, nonzero_items


class ExactTensor:
    rank = 3
    #: whether the frame must be a standard frame (even dimension)
    even = True

    def __init__(self, components):
        comps = as_exact(components)
        if comps.ndim != self.rank or len(set(comps.shape)) != 1 or comps.shape[0] == 0:
            raise DimensionMismatch(
                f"{type(self).__name__} needs a nonempty cubic rank-{self.rank} array, "
                f"got shape {comps.shape}")
        if self.even and comps.shape[0] % 2:
            raise DimensionMismatch(f"dimension must be even, got {comps.shape[0]}")
        self.components = frozen(comps)
        self._check()

    def _check(self):
        pass

    @property
    def dim(self) -> int:
        return self.components.shape[0]

    @property
    def n(self) -> int:
        return self.dim // 2

    def component(self, *idx: int) -> Fraction:
        return self.components[tuple(i - 1 for i in idx)]

    def nonzero(self):
        return list(nonzero_items(self.components))

    def is_zero(self) -> bool:
        return is_zero(self.components)

    def _like(self, other):
        if not isinstance(other, ExactTensor) or other.components.shape != self.components.shape:
            raise DimensionMismatch("tensor shapes differ")
        return other.components

    def __eq__(self, other):
        if not isinstance(other, ExactTensor):
            return NotImplemented
        return (self.components.shape == other.components.shape
                and bool(np.all(self.components == other.components)))

    def __hash__(self):
        return hash((type(self).__name__, self.components.shape, tuple(self.components.flat)))

    def __add__(self, other):
        return type(self)(self.components + self._like(other))

    def __sub__(self, other):
        return type(self)(self.components - self._like(other))

    def __neg__(self):
        return type(self)(-self.components)

    def __mul__(self, scalar):
        return type(self)(self.components * Fraction(scalar))

    __rmul__ = __mul__

    def __repr__(self):
        items = ", ".join(f"{i}: {v}" for i, v in self.nonzero())
        return f"{type(self).__name__}(dim={self.dim}, {{{items}}})"


class VectorTwoForm(ExactTensor):
    """Components ``theta[a, b, c] = <theta(e_a, e_b), e_c>``, skew in ``(a, b)``."""

    def _check(self):
        th = self.components
        bad = np.argwhere(th + th.transpose(1, 0, 2) != 0)
        if len(bad):
            a, b, c = (int(x) + 1 for x in bad[0])
            raise NotAntisymmetric(f"theta^{c}_{a}{b} + theta^{c}_{b}{a} != 0")


class ThreeForm(ExactTensor):
    """Totally antisymmetric ``eta[a, b, c] = eta(e_a, e_b, e_c)``."""

    def _check(self):
        eta = self.components
        for perm in ((1, 0, 2), (0, 2, 1)):
            bad = np.argwhere(eta + eta.transpose(perm) != 0)
            if len(bad):
                a, b, c = (int(x) + 1 for x in bad[0])
                raise NotAntisymmetric(f"3-form not totally skew at ({a},{b},{c})")


class Connection(ExactTensor):
    """Left-invariant connection coefficients ``gamma[a, b, c] = <nabla_{e_a} e_b, e_c>``.

    No structural invariants: metric compatibility and J-parallelism are
    checked after the fact.
    """


class HatTensor(ExactTensor):
    """Output of the hat transform; not skew in its lower indices."""

    even = False


class Curvature(ExactTensor):
    """``R[a, b, c, d] = <R(e_a, e_b) e_c, e_d>``."""

    rank = 4


def antisymmetrize_triples(n: int, blocks) -> np.ndarray:
    """Fill a dense totally antisymmetric array from values on chosen triples.

    ``blocks`` maps 0-based index triples to values; every permutation of a
    triple receives the value times the permutation sign. Two blocks that
    disagree on a shared slot raise ``AssertionError``, which is how
    transcription slips in closed-form block formulas surface.
    """
    d = 2 * n
    out = np.full((d, d, d), None, dtype=object)
    for (a, b, c), v in blocks.items():
        if len({a, b, c}) < 3:
            assert v == 0, f"nonzero value {v} on repeated triple {(a, b, c)}"
            continue
        for perm, sign in _PERMS3:
            idx = tuple((a, b, c)[p] for p in perm)
            prev = out[idx]
            assert prev is None or prev == sign * v, f"inconsistent blocks at {idx}"
            out[idx] = sign * v
    out[np.equal(out, None)] = Fraction(0)
    return out


_PERMS3 = [
    ((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
    ((1, 0, 2), -1), ((0, 2, 1), -1), ((2, 1, 0), -1),
]


def all_triples(d: int):
    return itertools.product(range(d), repeat=3)
