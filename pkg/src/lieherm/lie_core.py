"""Lie algebras as dense structure-constant tensors.

``C[a, b, c]`` holds ``C^c_ab = <[e_a, e_b], e_c>`` (0-based storage). The
bracket is only required to be antisymmetric at construction; the Jacobi
identity is measured separately by :func:`jacobi_defect` so broken inputs stay
representable in tests.
"""
from __future__ import annotations

import re
from fractions import Fraction

import numpy as np

from .errors import (
    DiagonalBracket,
    DimensionMismatch,
    DuplicateEntry,
    IndexOutOfRange,
    JacobiViolation,
    NotAntisymmetric,
    NotUnitary,
    UnknownName,
)
from .rational import (
    as_exact,
    exact_einsum,
    from_integer_form,
    frozen,
    int_einsum,
    integer_form,
    is_zero,
    nonzero_items,
    parse_rational,
    zeros,
)


class LieAlgebra:
    """Structure constants of a real Lie algebra in a fixed frame."""

    def __init__(self, dim: int, C, name: str | None = None):
        if dim < 1:
            raise DimensionMismatch(f"dimension must be positive, got {dim}")
        C = as_exact(C)
        if C.shape != (dim, dim, dim):
            raise DimensionMismatch(f"expected shape {(dim,) * 3}, got {C.shape}")
        bad = np.argwhere(C + C.transpose(1, 0, 2) != 0)
        if len(bad):
            a, b, c = (int(x) + 1 for x in bad[0])
            raise NotAntisymmetric(f"C^{c}_{a}{b} != -C^{c}_{b}{a}")
        self.dim = dim
        self.C = frozen(C)
        self.name = name

    def constant(self, a: int, b: int, c: int) -> Fraction:
        """``C^c_ab`` with 1-based indices."""
        return self.C[a - 1, b - 1, c - 1]

    def bracket(self, x, y) -> np.ndarray:
        """Bracket of two coordinate vectors."""
        return exact_einsum("a,b,abc->c", np.asarray(x, dtype=object),
                         np.asarray(y, dtype=object), self.C)

    def entries(self):
        """Nonzero ``(a, b, c, value)`` with ``a < b``, 1-based, sorted."""
        return [(a, b, c, v) for (a, b, c), v in nonzero_items(self.C) if a < b]

    def scaled(self, factor) -> "LieAlgebra":
        return LieAlgebra(self.dim, self.C * Fraction(factor))

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and bool(np.all(self.C == other.C))

    def __hash__(self):
        return hash((self.dim, tuple(self.C.flat)))

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"LieAlgebra({label}dim={self.dim}, {self.entries()})"


def build_lie_algebra(dim: int, entries, name: str | None = None) -> LieAlgebra:
    """Build from ``(a, b, c, value)`` entries with ``a < b`` (1-based).

    Antisymmetry is synthesized: ``C^c_ba = -C^c_ab``.
    """
    if dim < 1:
        raise DimensionMismatch(f"dimension must be positive, got {dim}")
    C = zeros((dim, dim, dim))
    seen = set()
    for a, b, c, value in entries:
        for idx in (a, b, c):
            if not (isinstance(idx, int) and 1 <= idx <= dim):
                raise IndexOutOfRange(f"index {idx!r} outside 1..{dim}")
        if a == b:
            raise DiagonalBracket(f"bracket [e_{a}, e_{a}] must not be listed")
        key = (min(a, b), max(a, b), c)
        if key in seen:
            raise DuplicateEntry(f"pair ({key[0]},{key[1]}) listed twice for c={c}")
        seen.add(key)
        value = parse_rational(value)
        C[a - 1, b - 1, c - 1] = value
        C[b - 1, a - 1, c - 1] = -value
    return LieAlgebra(dim, C, name=name)


def abelian(dim: int) -> LieAlgebra:
    return LieAlgebra(dim, zeros((dim, dim, dim)), name=f"abelian{dim}")


def _jacobi_integer(L: LieAlgebra):
    """Jacobi defect as ``(integer array, denominator)``."""
    Ci, c = integer_form(L.C)
    first = int_einsum("abp,pcl->abcl", Ci, Ci)
    # the other two terms are cyclic relabelings of the first
    return first + first.transpose(2, 0, 1, 3) + first.transpose(1, 2, 0, 3), c * c


def jacobi_defect(L: LieAlgebra) -> np.ndarray:
    """``J[a,b,c,l] = sum_p C^p_ab C^l_pc + C^p_bc C^l_pa + C^p_ca C^l_pb``."""
    return frozen(from_integer_form(*_jacobi_integer(L)))


def satisfies_jacobi(L: LieAlgebra) -> bool:
    # structure constants are immutable, so the verdict is cached per instance
    cached = L.__dict__.get("_jacobi_ok")
    if cached is None:
        cached = L.__dict__["_jacobi_ok"] = not np.any(_jacobi_integer(L)[0] != 0)
    return cached


def is_product_form(L: LieAlgebra) -> bool:
    """True if ``C^c_ab = 0`` whenever an index exceeds ``dim / 2``."""
    if L.dim % 2:
        return False
    n = L.dim // 2
    return (is_zero(L.C[n:, :, :]) and is_zero(L.C[:, n:, :])
            and is_zero(L.C[:, :, n:]))


def product_with_abelian(H: LieAlgebra) -> LieAlgebra:
    """The algebra ``h + a`` with ``a`` abelian of the same dimension as ``h``."""
    if not satisfies_jacobi(H):
        raise JacobiViolation("input is not a Lie algebra (nonzero Jacobi defect)")
    n = H.dim
    C = zeros((2 * n,) * 3)
    C[:n, :n, :n] = H.C
    name = f"{H.name}xR{n}" if H.name else None
    return LieAlgebra(2 * n, C, name=name)


def killing_form(L: LieAlgebra) -> np.ndarray:
    """``K_ab = Tr(ad_a ad_b) = sum_{p,q} C^p_aq C^q_bp``."""
    return exact_einsum("aqp,bpq->ab", L.C, L.C)


def check_biinvariant_frame(L: LieAlgebra) -> bool:
    """True iff ``C^k_ij = -C^j_ik``, i.e. the identity pairing is ad-invariant."""
    return bool(np.all(L.C == -L.C.transpose(0, 2, 1)))


_SO3 = [(1, 2, 3, -1), (1, 3, 2, 1), (2, 3, 1, -1)]
_ABDO4 = [(1, 2, 2, 1), (1, 3, 2, 1), (1, 3, 3, 1), (1, 4, 3, 1), (1, 4, 4, 1)]

CATALOG_NAMES = ("abelian<d>", "abdo4", "so3", "so3xR3")


def catalog(name: str) -> LieAlgebra:
    if name == "so3":
        return build_lie_algebra(3, _SO3, name="so3")
    if name == "abdo4":
        return build_lie_algebra(4, _ABDO4, name="abdo4")
    if name == "so3xR3":
        L = product_with_abelian(catalog("so3"))
        L.name = "so3xR3"
        return L
    m = re.fullmatch(r"abelian([1-9]\d*)", name)
    if m:
        return abelian(int(m.group(1)))
    raise UnknownName(f"unknown catalog algebra {name!r}; known: {', '.join(CATALOG_NAMES)}")


class FrameChange:
    """A matrix in ``U(n)`` realized as a real ``2n x 2n`` matrix.

    With ``K = [[A, C], [B, D]]`` both ``K^T K = 1`` and ``A = D``, ``C = -B``
    are enforced.
    """

    def __init__(self, K):
        K = as_exact(K)
        if K.ndim != 2 or K.shape[0] != K.shape[1] or K.shape[0] % 2:
            raise DimensionMismatch(f"frame change must be 2n x 2n, got {K.shape}")
        n = K.shape[0] // 2
        if not np.all(K.T.dot(K) == np.eye(2 * n, dtype=int)):
            raise NotUnitary("K^T K != identity")
        A, C = K[:n, :n], K[:n, n:]
        B, D = K[n:, :n], K[n:, n:]
        if not (np.all(A == D) and np.all(C == -B)):
            raise NotUnitary("K does not commute with J (need A = D and C = -B)")
        self.n = n
        self.K = frozen(K)

    def __matmul__(self, other: "FrameChange") -> "FrameChange":
        return FrameChange(self.K.dot(other.K))

    @classmethod
    def identity(cls, n: int) -> "FrameChange":
        return cls(as_exact(np.eye(2 * n, dtype=int)))


def cayley_frame_change(X, Y) -> FrameChange:
    """Exact unitary frame change from a skew-Hermitian matrix ``X + iY``.

    ``X`` must be skew-symmetric and ``Y`` symmetric (``n x n`` rationals).
    Returns the Cayley transform ``(1 - S)(1 + S)^{-1}`` of the real form
    ``S = [[X, -Y], [Y, X]]``.
    """
    X, Y = as_exact(X), as_exact(Y)
    if not (np.all(X == -X.T) and np.all(Y == Y.T)):
        raise NotUnitary("need X skew-symmetric and Y symmetric")
    S = np.block([[X, -Y], [Y, X]])
    eye = as_exact(np.eye(S.shape[0], dtype=int))
    return FrameChange((eye - S).dot(_inverse(eye + S)))


def _inverse(M: np.ndarray) -> np.ndarray:
    """Gauss-Jordan inverse over the rationals."""
    m = M.shape[0]
    aug = np.concatenate([M.copy(), as_exact(np.eye(m, dtype=int))], axis=1)
    for col in range(m):
        pivot = next((r for r in range(col, m) if aug[r, col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[[col, pivot]] = aug[[pivot, col]]
        aug[col] = aug[col] / aug[col, col]
        for r in range(m):
            if r != col and aug[r, col] != 0:
                aug[r] = aug[r] - aug[r, col] * aug[col]
    return aug[:, m:]


def transform_components(T: np.ndarray, K: np.ndarray) -> np.ndarray:
    """Rewrite a ``(2,1)`` tensor in the frame ``e' = e K`` (``K`` orthogonal)."""
    return exact_einsum("ap,bq,cr,abc->pqr", K, K, K, T)


def frame_change(A, K: FrameChange):
    """Express an algebra in the new standard frame ``e' = e K``.

    Accepts a :class:`LieAlgebra` or an almost Hermitian algebra (anything
    with a ``base`` LieAlgebra); the result has the same type.
    """
    base = getattr(A, "base", A)
    if base.dim != 2 * K.n:
        raise DimensionMismatch(f"algebra has dimension {base.dim}, frame change {2 * K.n}")
    new = LieAlgebra(base.dim, transform_components(base.C, K.K))
    return type(A)(new) if A is not base else new
