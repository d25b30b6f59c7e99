"""Left-invariant Hermitian connections and their torsion.

A Hermitian connection is fixed by a vector-valued 2-form ``alpha`` of type
(1,1); its torsion is available both from expanded component formulas and
from the general frame-free formula, which serve as oracles for each other.
The Gauduchon line ``t -> T^t`` is the special choice of ``alpha`` built
from ``(d omega)^+``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, NijenhuisNotSkew, NotProductForm, NotType11
from .hermitian import (
    AlmostHermitianAlgebra,
    d_omega,
    d_omega_plus,
    j_arg,
    j_value,
    nijenhuis,
    nijenhuis_is_totally_skew,
    theta_J,
)
from .lie_core import LieAlgebra, is_product_form
from .rational import as_exact, frozen, parse_rational, zeros
from .tensors import Connection, HatTensor, ThreeForm, VectorTwoForm
from .tpoly import TPolyTensor


class AlphaForm(VectorTwoForm):
    """A vector-valued 2-form of type (1,1): it commutes with ``J`` in both slots.

    Componentwise, for ``1 <= i, j <= n``:
    (a) ``alpha^c_ij = alpha^c_{n+i,n+j}`` and
    (b) ``alpha^c_{i,n+j} = -alpha^c_{n+i,j}``.
    """

    def _check(self):
        super()._check()
        n, al = self.n, self.components
        for i, j in itertools.product(range(n), repeat=2):
            for c in range(2 * n):
                if al[i, j, c] != al[n + i, n + j, c]:
                    raise NotType11("a", (i + 1, j + 1, c + 1))
                if al[i, n + j, c] != -al[n + i, j, c]:
                    raise NotType11("b", (i + 1, n + j + 1, c + 1))


def validate_alpha(raw) -> AlphaForm:
    comps = raw.components if isinstance(raw, VectorTwoForm) else raw
    return AlphaForm(comps)


def _match(A: AlmostHermitianAlgebra, tensor) -> None:
    if tensor.dim != A.dim:
        raise DimensionMismatch(f"tensor has dimension {tensor.dim}, algebra {A.dim}")


def _cyclic(X: np.ndarray) -> np.ndarray:
    """``X[a,b,c] + X[b,c,a] + X[c,a,b]``."""
    return X + np.einsum("bca->abc", X) + np.einsum("cab->abc", X)


def alpha_plus(alpha: AlphaForm) -> ThreeForm:
    """``alpha^+_abc = alpha^c_ab + alpha^a_bc + alpha^b_ca``."""
    return ThreeForm(_cyclic(alpha.components))


def _jj(X: np.ndarray, n: int, *axes: int) -> np.ndarray:
    for ax in axes:
        X = j_arg(X, ax, n)
    return X


def hermitian_torsion_general(A: AlmostHermitianAlgebra, alpha: AlphaForm) -> VectorTwoForm:
    """Torsion of the Hermitian connection with parameter ``alpha``, frame-free form.

    ``<T(X,Y),Z> = -1/4 <N(X,Y),Z> - 1/2 (dw)^+(JX,JY,JZ) + 1/2 (dw)^+(X,Y,JZ)
    + 1/2 alpha^+(X,Y,Z) - 1/2 alpha^+(JX,JY,Z) + <alpha(X,Y),Z>``
    """
    _match(A, alpha)
    n = A.n
    N = nijenhuis(A).components
    D = d_omega_plus(A).components
    P = alpha_plus(alpha).components
    T = (-N / 4 - _jj(D, n, 0, 1, 2) / 2 + _jj(D, n, 2) / 2
         + P / 2 - _jj(P, n, 0, 1) / 2 + alpha.components)
    return VectorTwoForm(T)


def _fill_torsion(n: int, blocks) -> VectorTwoForm:
    """Assemble ``T`` from its values on ``(i,j,.)``, ``(i,n+j,.)``, ``(n+i,n+j,.)``."""
    T = np.empty((2 * n,) * 3, dtype=object)
    for (a, b, c), v in blocks.items():
        T[a, b, c] = v
    T[n:, :n, :] = -T[:n, n:, :].transpose(1, 0, 2)
    return VectorTwoForm(T)


def hermitian_torsion(A: AlmostHermitianAlgebra, alpha: AlphaForm) -> VectorTwoForm:
    """Torsion of the Hermitian connection with parameter ``alpha`` from its component formulas."""
    _match(A, alpha)
    n, C, al = A.n, A.C, alpha.components
    h, q = Fraction(1, 2), Fraction(1, 4)
    blocks = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        ni, nj, nk = n + i, n + j, n + k
        blocks[i, j, k] = (
            -h * C[i, j, k] - q * C[i, k, j] + q * C[j, k, i] + h * C[ni, nj, k]
            + q * C[nj, nk, i] + q * C[nk, ni, j] + q * C[j, nk, ni] + q * C[nk, i, nj]
            + q * C[k, nj, ni] - q * C[k, ni, nj]
            + al[i, j, k] + h * al[j, k, i] + h * al[k, i, j]
            - h * al[nj, k, ni] - h * al[k, ni, nj])
        blocks[i, j, nk] = (
            -h * C[i, j, nk] + h * C[ni, nj, nk] - q * C[k, ni, j] - q * C[nj, k, i]
            - q * C[i, nk, j] + q * C[nk, nj, ni] + q * C[j, nk, i] - q * C[nk, ni, nj]
            - q * C[k, i, nj] - q * C[j, k, ni]
            + al[i, j, nk] + h * al[j, nk, i] + h * al[nk, i, j]
            - h * al[nj, nk, ni] - h * al[nk, ni, nj])
        blocks[i, nj, k] = (
            -h * C[ni, j, k] - h * C[i, nj, k] - q * C[ni, nk, nj] + q * C[nk, j, i]
            + q * C[nj, nk, ni] - q * C[nk, i, j] - q * C[k, nj, i] - q * C[ni, k, j]
            - q * C[i, k, nj] - q * C[k, j, ni]
            + al[i, nj, k] + h * al[nj, k, i] + h * al[k, i, nj]
            + h * al[j, k, ni] + h * al[k, ni, j])
        blocks[i, nj, nk] = (
            -h * C[ni, j, nk] - h * C[i, nj, nk] + q * C[j, k, i] - q * C[k, ni, nj]
            + q * C[nj, nk, i] + q * C[nk, ni, j] + q * C[k, i, j] - q * C[nj, k, ni]
            - q * C[i, nk, nj] - q * C[nk, j, ni]
            + al[i, nj, nk] + h * al[nj, nk, i] + h * al[nk, i, nj]
            + h * al[j, nk, ni] + h * al[nk, ni, j])
        blocks[ni, nj, k] = (
            -h * C[ni, nj, k] + h * C[i, j, k] - q * C[nj, nk, i] - q * C[nk, ni, j]
            - q * C[j, nk, ni] - q * C[nk, i, nj] - q * C[k, nj, ni] + q * C[i, k, j]
            + q * C[k, j, i] + q * C[k, ni, nj]
            + al[ni, nj, k] + h * al[ni, nk, j] + h * al[nk, j, ni]
            + h * al[i, nk, nj] + h * al[nk, nj, i])
        blocks[ni, nj, nk] = (
            -h * C[ni, nj, nk] + h * C[i, j, nk] + q * C[nj, k, i] + q * C[k, ni, j]
            + q * C[j, k, ni] + q * C[k, i, nj] + q * C[nj, nk, ni] - q * C[nk, i, j]
            - q * C[j, nk, i] + q * C[nk, ni, nj]
            + al[ni, nj, nk] + h * al[nj, nk, ni] + h * al[nk, ni, nj]
            - h * al[j, nk, i] - h * al[nk, i, j])
    return _fill_torsion(n, blocks)


def gauduchon_alpha(A: AlmostHermitianAlgebra, t) -> AlphaForm:
    """``<alpha^t(X,Y),Z> = t/4 [(dw)^+(JX,JY,JZ) + (dw)^+(X,Y,JZ)]``."""
    t = parse_rational(t)
    n, D = A.n, d_omega_plus(A).components
    return AlphaForm(t / 4 * (_jj(D, n, 0, 1, 2) + _jj(D, n, 2)))


def gauduchon_torsion(A: AlmostHermitianAlgebra, t) -> VectorTwoForm:
    """Torsion ``T^t`` of the Gauduchon connection from its component formulas."""
    t = parse_rational(t)
    n, C = A.n, A.C
    h, q = Fraction(1, 2), Fraction(1, 4)
    a = t / 4              # t/4
    b = (1 - t) / 4        # (1-t)/4
    m = (1 - 2 * t) / 4    # (1-2t)/4
    s = (1 - t) / 2        # (1-t)/2
    blocks = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        ni, nj, nk = n + i, n + j, n + k
        blocks[i, j, k] = (
            a * C[ni, j, nk] + a * C[i, nj, nk] - h * C[i, j, k] + s * C[ni, nj, k]
            + q * C[j, nk, ni] + q * C[nk, i, nj] + m * C[nj, nk, i] + m * C[nk, ni, j]
            + b * C[j, k, i] - b * C[k, ni, nj] - b * C[i, k, j] + b * C[k, nj, ni])
        blocks[i, j, nk] = (
            m * C[ni, k, j] - m * C[nj, k, i] + s * C[ni, nj, nk] + b * C[ni, nk, nj]
            - b * C[nj, nk, ni] - a * C[i, nj, k] - b * C[i, nk, j] + b * C[j, nk, i]
            - a * C[ni, j, k] - h * C[i, j, nk] + q * C[i, k, nj] - q * C[j, k, ni])
        blocks[i, nj, k] = (
            b * C[nj, k, i] + a * C[ni, nj, nk] - m * C[ni, nk, nj] - a * C[i, j, nk]
            - b * C[i, k, nj] + b * C[j, k, ni] - m * C[j, nk, i] - s * C[ni, j, k]
            - b * C[ni, k, j] + q * C[nj, nk, ni] - h * C[i, nj, k] + q * C[i, nk, j])
        blocks[i, nj, nk] = (
            -a * C[ni, nj, k] - b * C[ni, nk, j] + b * C[nj, nk, i] + a * C[i, j, k]
            + m * C[j, k, i] - b * C[i, nk, nj] + b * C[j, nk, ni] - s * C[ni, j, nk]
            + m * C[ni, k, nj] - h * C[i, nj, nk] - q * C[i, k, j] - q * C[nj, k, ni])
        blocks[ni, nj, k] = (
            b * C[nj, k, ni] + s * C[i, j, k] + b * C[i, k, j] - b * C[j, k, i]
            - a * C[i, nj, nk] + m * C[i, nk, nj] - m * C[j, nk, ni] - a * C[ni, j, nk]
            - b * C[ni, k, nj] - h * C[ni, nj, k] + q * C[ni, nk, j] - q * C[nj, nk, i])
        blocks[ni, nj, nk] = (
            -b * C[ni, nk, nj] + b * C[nj, nk, ni] + s * C[i, j, nk] - m * C[i, k, nj]
            + a * C[i, nj, k] + b * C[i, nk, j] + m * C[j, k, ni] - b * C[j, nk, i]
            + a * C[ni, j, k] + q * C[nj, k, i] - h * C[ni, nj, nk] - q * C[ni, k, j])
    return _fill_torsion(n, blocks)


#: torsion is affine in t, so two samples determine it
TORSION_NODES = (0, 1)


def gauduchon_torsion_poly(A: AlmostHermitianAlgebra) -> TPolyTensor:
    """Every ``<T^t(e_a,e_b),e_c>`` as an exact polynomial of degree at most 1 in ``t``."""
    samples = [gauduchon_torsion(A, t).components for t in TORSION_NODES]
    return TPolyTensor.from_samples(TORSION_NODES, samples)


def chern_theta(A: AlmostHermitianAlgebra) -> VectorTwoForm:
    """``<theta^c(X,Y),Z> = 1/2 [(dw)^+(X,Y,JZ) - (dw)^+(JX,JY,JZ)]``."""
    n, D = A.n, d_omega_plus(A).components
    return VectorTwoForm((_jj(D, n, 2) - _jj(D, n, 0, 1, 2)) / 2)


def bismut_theta(A: AlmostHermitianAlgebra) -> VectorTwoForm:
    """``<theta^b(X,Y),Z> = (dw)^+(JX,JY,JZ)``."""
    n, D = A.n, d_omega_plus(A).components
    return VectorTwoForm(_jj(D, n, 0, 1, 2))


def gauduchon_torsion_from_thetas(A: AlmostHermitianAlgebra, t) -> VectorTwoForm:
    """``T^t = -1/4 N + (1 - t/2) theta^c + (t/2) theta^b``."""
    t = parse_rational(t)
    N = nijenhuis(A)
    return N * Fraction(-1, 4) + chern_theta(A) * (1 - t / 2) + bismut_theta(A) * (t / 2)


def connection_from_torsion(A: AlmostHermitianAlgebra, T: VectorTwoForm) -> Connection:
    """The metric connection with torsion ``T``:
    ``Gamma^k_ij = 1/2 (C^k_ij - C^i_jk - C^j_ik + T^k_ij - T^i_jk - T^j_ik)``.
    """
    _match(A, T)
    return Connection(_hat(A.C) + _hat(T.components))


def _hat(H: np.ndarray) -> np.ndarray:
    return (H - np.einsum("bca->abc", H) - np.einsum("acb->abc", H)) / 2


def hat_transform(H) -> HatTensor:
    """``H^hat[a,b,c] = 1/2 (H^c_ab - H^a_bc - H^b_ac)`` for ``H`` skew in its lower indices."""
    comps = H.C if isinstance(H, LieAlgebra) else getattr(H, "components", H)
    return HatTensor(_hat(as_exact(comps)))


def torsion_from_connection(A: AlmostHermitianAlgebra, gamma: Connection) -> VectorTwoForm:
    """``T^c_ab = Gamma^c_ab - Gamma^c_ba - C^c_ab``."""
    _match(A, gamma)
    G = gamma.components
    return VectorTwoForm(G - G.transpose(1, 0, 2) - A.C)


def trivial_alpha(A: AlmostHermitianAlgebra) -> AlphaForm:
    """The ``alpha`` whose Hermitian connection is ``nabla_X Y = 0`` on left-invariant fields.

    Only defined on products ``H x R^n`` with ``H`` spanned by ``e_1..e_n``.
    """
    if not is_product_form(A.base):
        raise NotProductForm("structure constants are not of the form H x R^n")
    n, C = A.n, A.C
    al = zeros((2 * n,) * 3)
    al[:n, :n, :n] = -C[:n, :n, :n] / 2
    al[n:, n:, :n] = -C[:n, :n, :n] / 2
    return AlphaForm(al)


def verify_metric_compat(gamma: Connection) -> bool:
    G = gamma.components
    return bool(np.all(G + G.transpose(0, 2, 1) == 0))


def verify_J_parallel(gamma: Connection) -> bool:
    """``nabla J = 0``: ``Gamma`` commutes with ``J`` in its last two slots."""
    G = gamma.components
    n = gamma.n
    return bool(np.all(G[:, n:, :n] + G[:, :n, n:] == 0)
                and np.all(G[:, n:, n:] - G[:, :n, :n] == 0))


def hermitian_torsion_condition_failures(A: AlmostHermitianAlgebra, T: VectorTwoForm):
    """``(family, (i, j, k))`` for every failing Hermitian torsion condition, 1-based."""
    _match(A, T)
    n, C, T, N = A.n, A.C, T.components, nijenhuis(A).components
    out = []
    for i, j, k in itertools.product(range(n), repeat=3):
        ni, nj, nk = n + i, n + j, n + k
        eqs = (
            -T[ni, j, nk] - T[i, nj, nk] + T[i, j, k] - T[ni, nj, k] + N[i, j, k],
            T[ni, j, k] + T[i, nj, k] + T[i, j, nk] - T[ni, nj, nk] + N[i, j, nk],
            C[i, j, nk] + C[j, k, ni] + C[k, i, nj]
            + T[i, j, nk] + T[j, k, ni] + T[k, i, nj],
            -C[i, j, k] + C[j, nk, ni] + C[nk, i, nj]
            - T[i, j, k] + T[j, nk, ni] + T[nk, i, nj],
            -C[i, nj, k] + C[nj, nk, ni] - C[nk, i, j]
            - T[i, nj, k] + T[nj, nk, ni] - T[nk, i, j],
            -C[ni, nj, k] - C[nj, nk, i] - C[nk, ni, j]
            - T[ni, nj, k] - T[nj, nk, i] - T[nk, ni, j],
        )
        out.extend((fam, (i + 1, j + 1, k + 1)) for fam, v in enumerate(eqs, 1) if v != 0)
    return out


def verify_hermitian_torsion_conditions(A: AlmostHermitianAlgebra, T: VectorTwoForm) -> bool:
    return not hermitian_torsion_condition_failures(A, T)


def torsion_11_part(A: AlmostHermitianAlgebra, T: VectorTwoForm) -> VectorTwoForm:
    """``1/2 (T(X,Y) + T(JX,JY))``."""
    _match(A, T)
    n, X = A.n, T.components
    return VectorTwoForm((X + _jj(X, n, 0, 1)) / 2)


def bismut_simplified_torsion(A: AlmostHermitianAlgebra) -> VectorTwoForm:
    """``<T^2(X,Y),Z> = dw(JX,JY,JZ) - <N(X,Y),Z>``, valid when ``N`` is totally skew."""
    if not nijenhuis_is_totally_skew(A):
        raise NijenhuisNotSkew(
            "<N(X,Y),Z> is not totally skew: no Hermitian connection has totally skew torsion")
    n = A.n
    return VectorTwoForm(_jj(d_omega(A).components, n, 0, 1, 2) - nijenhuis(A).components)


# Post-hoc identities; each returns the defect array, zero when the identity holds.

def torsion_pattern_defect(A: AlmostHermitianAlgebra, alpha: AlphaForm, T: VectorTwoForm):
    """``<T(X,JY),Z> + <T(X,Y),JZ> + 1/2 <N(X,Y),JZ> - <alpha(X,Y),JZ> - <alpha(X,JY),Z>``."""
    n = A.n
    X, al, N = T.components, alpha.components, nijenhuis(A).components
    return frozen(j_arg(X, 1, n) + j_arg(X, 2, n) + j_arg(N, 2, n) / 2
                  - j_arg(al, 2, n) - j_arg(al, 1, n))


def theta_J_defect(A: AlmostHermitianAlgebra, T: VectorTwoForm):
    """``T_J + N``."""
    return frozen((theta_J(T) + nijenhuis(A)).components)


def domega_cyclic_defect(A: AlmostHermitianAlgebra, T: VectorTwoForm):
    """``dw(X,Y,Z) - omega(T(X,Y),Z) - omega(T(Y,Z),X) - omega(T(Z,X),Y)``."""
    W = j_value(T.components, 2, A.n)
    return frozen(d_omega(A).components - _cyclic(W))
