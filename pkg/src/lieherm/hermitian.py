"""The almost Hermitian structure fixed by a standard frame.

In a standard frame the metric is the identity pairing and ``J`` acts on
basis vectors by ``e_i -> e_{n+i}``, ``e_{n+i} -> -e_i``. ``J`` is never
stored; every formula below uses the index/sign action.
"""
from __future__ import annotations

import itertools

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, JacobiViolation
from .lie_core import LieAlgebra, satisfies_jacobi
from .rational import frozen, is_zero
from .tensors import ThreeForm, VectorTwoForm, antisymmetrize_triples


class AlmostHermitianAlgebra:
    """An even-dimensional Lie algebra read through the standard-frame convention."""

    def __init__(self, base: LieAlgebra):
        if base.dim % 2:
            raise DimensionMismatch(f"dimension must be even, got {base.dim}")
        if not satisfies_jacobi(base):
            raise JacobiViolation("structure constants violate the Jacobi identity")
        self.base = base
        self.n = base.dim // 2

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def C(self) -> np.ndarray:
        return self.base.C

    @property
    def name(self):
        return self.base.name

    def __eq__(self, other):
        if not isinstance(other, AlmostHermitianAlgebra):
            return NotImplemented
        return self.base == other.base

    def __hash__(self):
        return hash(self.base)

    def __repr__(self):
        return f"AlmostHermitianAlgebra(n={self.n}, {self.base!r})"


def apply_J(n: int, index: int) -> tuple[int, int]:
    """``J e_index = sign * e_result`` with 1-based indices."""
    if not 1 <= index <= 2 * n:
        raise IndexOutOfRange(f"index {index} outside 1..{2 * n}")
    if index <= n:
        return index + n, 1
    return index - n, -1


def _j_perm(n: int):
    perm = np.concatenate([np.arange(n, 2 * n), np.arange(n)])
    sign = np.array([1] * n + [-1] * n, dtype=object)
    return perm, sign


def j_arg(X: np.ndarray, axis: int, n: int) -> np.ndarray:
    """Substitute ``J e_a`` for ``e_a`` in slot ``axis``.

    Works for argument slots and, read as ``<v, J e_c>``, for the value slot.
    """
    perm, sign = _j_perm(n)
    shape = [1] * X.ndim
    shape[axis] = 2 * n
    return np.take(X, perm, axis=axis) * sign.reshape(shape)


def j_value(X: np.ndarray, axis: int, n: int) -> np.ndarray:
    """Components of ``J v`` from those of ``v`` along ``axis`` (``<Jv, e_c> = -<v, J e_c>``)."""
    return -j_arg(X, axis, n)


def omega_matrix(n: int) -> np.ndarray:
    """``omega[a, b] = omega(e_a, e_b) = <J e_a, e_b>``."""
    eye = np.eye(2 * n, dtype=int).astype(object)
    return j_arg(eye, 0, n)


def nijenhuis(A: AlmostHermitianAlgebra) -> VectorTwoForm:
    """Nijenhuis tensor from the closed-form component formulas.

    The ``(i, j)`` blocks are computed directly; the remaining blocks follow
    from ``N(X, JY) = -J N(X, Y)`` and ``N(JX, JY) = -N(X, Y)``.
    """
    n, C = A.n, A.C
    N = np.empty((2 * n,) * 3, dtype=object)
    for i, j, k in itertools.product(range(n), repeat=3):
        low = (-C[n + i, j, n + k] - C[i, n + j, n + k]
               + C[i, j, k] - C[n + i, n + j, k])
        high = (C[n + i, j, k] + C[i, n + j, k]
                + C[i, j, n + k] - C[n + i, n + j, n + k])
        N[i, j, k] = low
        N[i, j, n + k] = high
        N[i, n + j, n + k] = -low
        N[i, n + j, k] = high
        N[n + i, n + j, k] = -low
        N[n + i, n + j, n + k] = -high
    N[n:, :n, :] = -N[:n, n:, :].transpose(1, 0, 2)
    return VectorTwoForm(N)


def nijenhuis_from_definition(A: AlmostHermitianAlgebra) -> VectorTwoForm:
    """``N(X,Y) = J[JX,Y] + J[X,JY] + [X,Y] - [JX,JY]`` evaluated on the frame."""
    n, C = A.n, A.C
    N = (j_value(j_arg(C, 0, n), 2, n) + j_value(j_arg(C, 1, n), 2, n)
         + C - j_arg(j_arg(C, 0, n), 1, n))
    return VectorTwoForm(N)


def is_integrable(A: AlmostHermitianAlgebra) -> bool:
    return nijenhuis(A).is_zero()


def is_kahler(A: AlmostHermitianAlgebra) -> bool:
    return is_integrable(A) and d_omega(A).is_zero()


def nijenhuis_is_totally_skew(A: AlmostHermitianAlgebra) -> bool:
    N = nijenhuis(A).components
    return bool(np.all(N == -N.transpose(0, 2, 1)))


def d_omega(A: AlmostHermitianAlgebra) -> ThreeForm:
    """``d omega`` from the four block formulas, extended by antisymmetry."""
    n, C = A.n, A.C
    blocks = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        ni, nj, nk = n + i, n + j, n + k
        blocks[i, j, k] = C[i, j, nk] + C[j, k, ni] + C[k, i, nj]
        blocks[i, j, nk] = -C[i, j, k] + C[j, nk, ni] + C[nk, i, nj]
        blocks[i, nj, nk] = -C[i, nj, k] + C[nj, nk, ni] - C[nk, i, j]
        blocks[ni, nj, nk] = -C[ni, nj, k] - C[nj, nk, i] - C[nk, ni, j]
    return ThreeForm(antisymmetrize_triples(n, blocks))


def d_omega_invariant(A: AlmostHermitianAlgebra) -> ThreeForm:
    """``d omega(X,Y,Z) = -omega([X,Y],Z) - omega([Y,Z],X) - omega([Z,X],Y)``."""
    n = A.n
    # W[a, b, c] = omega([e_a, e_b], e_c)
    W = j_value(A.C, 2, n)
    dw = -W - np.einsum("bca->abc", W) - np.einsum("cab->abc", W)
    return ThreeForm(dw)


def eta_plus(eta: ThreeForm) -> ThreeForm:
    """The (2,1)+(1,2) part of a real 3-form."""
    n, e = eta.n, eta.components
    out = (3 * e + j_arg(j_arg(e, 0, n), 1, n) + j_arg(j_arg(e, 0, n), 2, n)
           + j_arg(j_arg(e, 1, n), 2, n)) / 4
    return ThreeForm(out)


def d_omega_plus(A: AlmostHermitianAlgebra) -> ThreeForm:
    """``(d omega)^+`` from its closed-form block formulas.

    :func:`d_omega_plus_projected` computes the same tensor as
    ``eta_plus(d_omega(A))``; the test-suite keeps both honest.
    """
    n, C = A.n, A.C
    blocks = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        ni, nj, nk = n + i, n + j, n + k
        blocks[i, j, k] = (
            3 * C[i, j, nk] + 3 * C[j, k, ni] + 3 * C[k, i, nj]
            + C[k, nj, i] - C[nj, ni, nk] + C[ni, k, j]
            + C[j, ni, k] - C[ni, nk, nj] + C[nk, j, i]
            - C[i, nj, k] + C[nj, nk, ni] - C[nk, i, j]) / 4
        blocks[i, j, nk] = (
            -3 * C[i, j, k] + 3 * C[j, nk, ni] + 3 * C[nk, i, nj]
            - C[ni, nj, k] - C[nj, nk, i] - C[nk, ni, j]
            + C[j, k, i] - C[k, ni, nj] - C[ni, j, nk]
            - C[i, k, j] + C[k, nj, ni] + C[nj, i, nk]) / 4
        blocks[i, nj, nk] = (
            -3 * C[i, nj, k] + 3 * C[nj, nk, ni] - 3 * C[nk, i, j]
            - C[j, ni, k] + C[ni, nk, nj] - C[nk, j, i]
            + C[k, ni, j] - C[ni, nj, nk] + C[nj, k, i]
            + C[i, j, nk] + C[j, k, ni] + C[k, i, nj]) / 4
        blocks[ni, nj, nk] = (
            -3 * C[ni, nj, k] - 3 * C[nj, nk, i] - 3 * C[nk, ni, j]
            - C[i, j, k] + C[j, nk, ni] + C[nk, i, nj]
            + C[i, k, j] - C[k, nj, ni] - C[nj, i, nk]
            - C[j, k, i] + C[k, ni, nj] + C[ni, j, nk]) / 4
    return ThreeForm(antisymmetrize_triples(n, blocks))


def d_omega_plus_projected(A: AlmostHermitianAlgebra) -> ThreeForm:
    return eta_plus(d_omega(A))


def theta_J(theta: VectorTwoForm) -> VectorTwoForm:
    """``theta_J(X,Y) = J theta(JX,Y) + J theta(X,JY) + theta(X,Y) - theta(JX,JY)``."""
    n, th = theta.n, theta.components
    out = (j_value(j_arg(th, 0, n), 2, n) + j_value(j_arg(th, 1, n), 2, n)
           + th - j_arg(j_arg(th, 0, n), 1, n))
    return VectorTwoForm(out)


def integrable_domega_defect(A: AlmostHermitianAlgebra) -> np.ndarray:
    """``dw(JX,JY,JZ) - dw(JX,Y,Z) - dw(X,JY,Z) - dw(X,Y,JZ)`` on frame triples.

    Vanishes when ``J`` is integrable; for other inputs it is only reported.
    """
    n, dw = A.n, d_omega(A).components
    jjj = j_arg(j_arg(j_arg(dw, 0, n), 1, n), 2, n)
    return frozen(jjj - j_arg(dw, 0, n) - j_arg(dw, 1, n) - j_arg(dw, 2, n))


def bismut_nijenhuis_identity_defect(A: AlmostHermitianAlgebra) -> np.ndarray:
    """``3<N(X,Y),Z> + dw(X,JY,Z) + dw(JX,Y,Z) - dw(JX,JY,JZ) + dw(X,Y,JZ)``.

    Zero on every frame triple whenever ``<N(X,Y),Z>`` is totally skew.
    """
    n = A.n
    dw = d_omega(A).components
    N = nijenhuis(A).components
    jjj = j_arg(j_arg(j_arg(dw, 0, n), 1, n), 2, n)
    return frozen(3 * N + j_arg(dw, 1, n) + j_arg(dw, 0, n) - jjj + j_arg(dw, 2, n))


def holds(defect: np.ndarray) -> bool:
    return is_zero(defect)
