"""The full invariant battery for one Hermitian connection."""
from __future__ import annotations

from dataclasses import dataclass

from .connections import (
    AlphaForm,
    connection_from_torsion,
    domega_cyclic_defect,
    gauduchon_alpha,
    gauduchon_torsion,
    gauduchon_torsion_from_thetas,
    hermitian_torsion,
    hermitian_torsion_condition_failures,
    hermitian_torsion_general,
    theta_J_defect,
    torsion_11_part,
    torsion_pattern_defect,
    verify_J_parallel,
)
from .curvature import curvature_from_connection, curvature_via_hats
from .hermitian import AlmostHermitianAlgebra, d_omega_plus, d_omega_plus_projected
from .rational import nonzero_items, parse_rational


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    #: first failing 1-based index tuple, when there is one
    witness: tuple[int, ...] | None = None


def _first_nonzero(arr):
    return next((idx for idx, _ in nonzero_items(arr)), None)


def _defect_check(name, arr) -> Check:
    witness = _first_nonzero(arr)
    return Check(name, witness is None, witness)


def _equal_check(name, left, right) -> Check:
    return _defect_check(name, left.components - right.components)


def _j_witness(G, n):
    """First ``(a, n+j, k)`` at which one of the two ``nabla J = 0`` equations fails."""
    for block in (G[:, n:, :n] + G[:, :n, n:], G[:, n:, n:] - G[:, :n, :n]):
        idx = _first_nonzero(block)
        if idx is not None:
            a, j, k = idx
            return (a, n + j, k)
    return None


def verify_suite(A: AlmostHermitianAlgebra, alpha: AlphaForm | None = None, t=None) -> list[Check]:
    """Run every Hermitian-connection check on the connection given by ``alpha`` or ``t``."""
    if (alpha is None) == (t is None):
        raise ValueError("pass exactly one of alpha or t")
    if t is not None:
        t = parse_rational(t)
        alpha = gauduchon_alpha(A, t)
    T = hermitian_torsion(A, alpha)
    checks = [_equal_check("torsion_general_formula", T, hermitian_torsion_general(A, alpha))]
    if t is not None:
        checks.append(_equal_check("gauduchon_component_formula", T, gauduchon_torsion(A, t)))
        checks.append(_equal_check("gauduchon_theta_formula", T, gauduchon_torsion_from_thetas(A, t)))
    gamma = connection_from_torsion(A, T)
    G = gamma.components
    checks.append(_defect_check("metric_compatible", G + G.transpose(0, 2, 1)))
    n = A.n
    checks.append(Check("J_parallel", verify_J_parallel(gamma), _j_witness(G, n)))
    failures = hermitian_torsion_condition_failures(A, T)
    checks.append(Check("hermitian_torsion_conditions", not failures,
                        (failures[0][0],) + failures[0][1] if failures else None))
    checks.append(_defect_check("theta_J_plus_N", theta_J_defect(A, T)))
    checks.append(_defect_check("domega_cyclic", domega_cyclic_defect(A, T)))
    checks.append(_defect_check("torsion_pattern", torsion_pattern_defect(A, alpha, T)))
    checks.append(_equal_check("alpha_recovery", torsion_11_part(A, T), alpha))
    checks.append(_equal_check("domega_plus_projection", d_omega_plus(A), d_omega_plus_projected(A)))
    R = curvature_from_connection(A, gamma)
    checks.append(_equal_check("curvature_paths", R, curvature_via_hats(A, T)))
    checks.append(_defect_check("curvature_skew_last_pair",
                                R.components + R.components.transpose(0, 1, 3, 2)))
    return checks
