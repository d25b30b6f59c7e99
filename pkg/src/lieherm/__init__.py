"""Exact Hermitian and Gauduchon connections on Lie algebras with a standard frame."""
from __future__ import annotations

from .connections import (
    AlphaForm,
    alpha_plus,
    bismut_simplified_torsion,
    bismut_theta,
    chern_theta,
    connection_from_torsion,
    gauduchon_alpha,
    gauduchon_torsion,
    gauduchon_torsion_from_thetas,
    gauduchon_torsion_poly,
    hat_transform,
    hermitian_torsion,
    hermitian_torsion_general,
    torsion_11_part,
    torsion_from_connection,
    trivial_alpha,
    validate_alpha,
    verify_hermitian_torsion_conditions,
    verify_J_parallel,
    verify_metric_compat,
)
from .curvature import (
    FlatReport,
    compact_product_closed_form_check,
    curvature_from_connection,
    curvature_via_hats,
    d_three_form,
    flat_t_values,
    gauduchon_curvature,
    gauduchon_curvature_poly,
    is_skt,
    torsion_three_form,
)
from .errors import LieHermError, MathPreconditionError, ValidationError
from .hermitian import (
    AlmostHermitianAlgebra,
    apply_J,
    d_omega,
    d_omega_plus,
    eta_plus,
    is_integrable,
    is_kahler,
    nijenhuis,
    nijenhuis_is_totally_skew,
    theta_J,
)
from .lie_core import (
    FrameChange,
    LieAlgebra,
    abelian,
    build_lie_algebra,
    catalog,
    check_biinvariant_frame,
    frame_change,
    jacobi_defect,
    killing_form,
    product_with_abelian,
)
from .tensors import Connection, Curvature, HatTensor, ThreeForm, VectorTwoForm
from .tpoly import TPoly, TPolyTensor

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]
