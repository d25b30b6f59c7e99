"""Curvature of left-invariant connections and the Gauduchon flatness question.

Convention: ``R(X,Y)Z = [nabla_X, nabla_Y] Z - nabla_[X,Y] Z`` and
``R[a, b, c, d] = <R(e_a, e_b) e_c, e_d>``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .connections import _match, connection_from_torsion, gauduchon_torsion, hat_transform
from .errors import NotBiinvariantFrame, NotProductForm, NotTotallySkew
from .hermitian import AlmostHermitianAlgebra
from .lie_core import LieAlgebra, check_biinvariant_frame, is_product_form
from .rational import exact_einsum, frozen, from_integer_form, int_einsum, integer_form, parse_rational
from .tensors import Connection, Curvature, ThreeForm, VectorTwoForm
from .tpoly import TPoly, TPolyTensor

#: interpolation nodes; curvature of the Gauduchon line is quadratic in t
CURVATURE_NODES = (0, 1, 2)


def _quadratic(G: np.ndarray, H: np.ndarray) -> np.ndarray:
    """``sum_p G^d_ap H^p_bc - G^d_bp H^p_ac`` on integer arrays."""
    X = int_einsum("apd,bcp->abcd", G, H)
    return X - X.transpose(1, 0, 2, 3)


def _bracket_term(C: np.ndarray, G: np.ndarray) -> np.ndarray:
    """``sum_p C^p_ab G^d_pc`` on integer arrays."""
    return int_einsum("abp,pcd->abcd", C, G)


# Both curvature routines clear denominators first (X = Xi / x) and combine
# the integer contractions over one common denominator.

def curvature_from_connection(A: AlmostHermitianAlgebra, gamma: Connection) -> Curvature:
    """``R_abcd = sum_p (G^d_ap G^p_bc - G^d_bp G^p_ac - C^p_ab G^d_pc)``."""
    _match(A, gamma)
    Gi, g = integer_form(gamma.components)
    Ci, c = integer_form(A.C)
    num = c * _quadratic(Gi, Gi) - g * _bracket_term(Ci, Gi)
    return Curvature(from_integer_form(num, c * g * g))


def curvature_via_hats(A: AlmostHermitianAlgebra, T: VectorTwoForm) -> Curvature:
    """Curvature of the metric connection with torsion ``T``, written in hat tensors.

    Kept as three separate groups (pure ``C``, pure ``T``, mixed) so it can
    be compared term by term with the expansion ``Gamma = C^hat + T^hat``.
    """
    _match(A, T)
    Ci, c = integer_form(A.C)
    Hc, h = integer_form(hat_transform(A.base).components)
    Ht, k = integer_form(hat_transform(T).components)
    # common denominator c h^2 k^2
    pure_c = k * k * (c * _quadratic(Hc, Hc) - h * _bracket_term(Ci, Hc))
    pure_t = c * h * h * _quadratic(Ht, Ht)
    mixed = h * k * (c * (_quadratic(Hc, Ht) + _quadratic(Ht, Hc)) - h * _bracket_term(Ci, Ht))
    return Curvature(from_integer_form(pure_c + pure_t + mixed, c * h * h * k * k))


def gauduchon_curvature(A: AlmostHermitianAlgebra, t) -> Curvature:
    return curvature_from_connection(A, connection_from_torsion(A, gauduchon_torsion(A, t)))


def gauduchon_curvature_poly(A: AlmostHermitianAlgebra) -> TPolyTensor:
    """Every ``R^t_abcd`` as an exact polynomial of degree at most 2 in ``t``."""
    samples = [gauduchon_curvature(A, t).components for t in CURVATURE_NODES]
    return TPolyTensor.from_samples(CURVATURE_NODES, samples)


@dataclass(frozen=True)
class FlatReport:
    """Outcome of the flat-parameter search along the Gauduchon line.

    ``rational_roots`` holds the certified flat parameters. An entry whose
    polynomial has no rational roots but is a genuine quadratic is listed in
    ``unresolved_quadratics`` by its coefficients ``(c0, c1, c2)``; such an
    entry already rules out flatness at every rational ``t``.
    """

    identically_flat: bool
    rational_roots: tuple[Fraction, ...] = ()
    unresolved_quadratics: tuple[tuple[Fraction, Fraction, Fraction], ...] = field(default=())


def flat_t_values(A: AlmostHermitianAlgebra) -> FlatReport:
    poly = gauduchon_curvature_poly(A)
    entries = [p for _, p in poly.nonzero()]
    if not entries:
        return FlatReport(identically_flat=True)
    candidates = None
    unresolved = []
    for p in entries:
        roots = p.rational_roots()
        if p.has_irrational_roots():
            unresolved.append(p.coefficients)
        candidates = set(roots) if candidates is None else candidates & set(roots)
    # certify each survivor by an independent pointwise evaluation
    certified = tuple(sorted(t for t in candidates if gauduchon_curvature(A, t).is_zero()))
    return FlatReport(False, certified, tuple(sorted(set(unresolved))))


def compact_product_closed_form(A: AlmostHermitianAlgebra, t) -> np.ndarray:
    """``(t^2/16 - 1/4) sum_p C^p_ij C^l_pk`` on ``(i,j,k,l)`` and ``(i,j,n+k,n+l)``, else 0."""
    t = parse_rational(t)
    n = A.n
    H = A.C[:n, :n, :n]
    block = (t * t / 16 - Fraction(1, 4)) * exact_einsum("ijp,pkl->ijkl", H, H)
    out = np.empty((2 * n,) * 4, dtype=object)
    out.fill(Fraction(0))
    out[:n, :n, :n, :n] = block
    out[:n, :n, n:, n:] = block
    return frozen(out)


def compact_product_closed_form_check(A: AlmostHermitianAlgebra) -> bool:
    """Compare the curvature polynomial with the closed form for ``H x R^n``, ``H`` with bi-invariant frame."""
    if not is_product_form(A.base):
        raise NotProductForm("structure constants are not of the form H x R^n")
    n = A.n
    H = LieAlgebra(n, A.C[:n, :n, :n])
    if not check_biinvariant_frame(H):
        raise NotBiinvariantFrame("H block fails C^k_ij = -C^j_ik")
    poly = gauduchon_curvature_poly(A)
    # both sides are quadratic in t, so agreement at three nodes is agreement
    return all(np.all(poly.evaluate(t) == compact_product_closed_form(A, t))
               for t in CURVATURE_NODES)


def skew_witness(T: VectorTwoForm):
    """First 1-based ``(a, b, c)`` where ``T^c_ab`` is not totally skew, or ``None``."""
    X = T.components
    for a, b, c in itertools.product(range(T.dim), repeat=3):
        v = X[a, b, c]
        if len({a, b, c}) < 3:
            bad = v != 0
        else:
            bad = v != -X[a, c, b] or v != -X[c, b, a]
        if bad:
            return (a + 1, b + 1, c + 1)
    return None


def torsion_three_form(A: AlmostHermitianAlgebra, T: VectorTwoForm) -> ThreeForm:
    """``beta(X,Y,Z) = <T(X,Y),Z>`` for a totally skew torsion."""
    _match(A, T)
    witness = skew_witness(T)
    if witness is not None:
        raise NotTotallySkew(witness)
    return ThreeForm(T.components)


def d_three_form(A: AlmostHermitianAlgebra, beta: ThreeForm) -> np.ndarray:
    """Exterior derivative of a left-invariant 3-form, as a rank-4 array.

    ``dbeta(W,X,Y,Z) = -beta([W,X],Y,Z) + beta([W,Y],X,Z) - beta([W,Z],X,Y)
    - beta([X,Y],W,Z) + beta([X,Z],W,Y) - beta([Y,Z],W,X)``
    """
    _match(A, beta)
    # B[w, x, y, z] = beta([e_w, e_x], e_y, e_z)
    B = exact_einsum("wxp,pyz->wxyz", A.C, beta.components)
    out = (-B + np.einsum("wyxz->wxyz", B) - np.einsum("wzxy->wxyz", B)
           - np.einsum("xywz->wxyz", B) + np.einsum("xzwy->wxyz", B)
           - np.einsum("yzwx->wxyz", B))
    return frozen(out)


def skt_status(A: AlmostHermitianAlgebra):
    """``(is_skt, witness)``; the witness is the first non-skew torsion index, if any."""
    T = gauduchon_torsion(A, 2)
    witness = skew_witness(T)
    if witness is not None:
        return False, witness
    beta = torsion_three_form(A, T)
    return bool(all(v == 0 for v in d_three_form(A, beta).flat)), None


def is_skt(A: AlmostHermitianAlgebra) -> bool:
    return skt_status(A)[0]


__all__ = [
    "CURVATURE_NODES", "FlatReport", "TPoly", "compact_product_closed_form",
    "compact_product_closed_form_check", "curvature_from_connection", "curvature_via_hats",
    "d_three_form", "flat_t_values", "gauduchon_curvature", "gauduchon_curvature_poly",
    "is_skt", "skew_witness", "skt_status", "torsion_three_form",
]
