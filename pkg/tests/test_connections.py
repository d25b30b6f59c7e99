from __future__ import annotations

import itertools
import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings

from lieherm import AlmostHermitianAlgebra, abelian, catalog, product_with_abelian
from lieherm.connections import (
    AlphaForm,
    alpha_plus,
    bismut_simplified_torsion,
    bismut_theta,
    chern_theta,
    connection_from_torsion,
    domega_cyclic_defect,
    gauduchon_alpha,
    gauduchon_torsion,
    gauduchon_torsion_from_thetas,
    gauduchon_torsion_poly,
    hat_transform,
    hermitian_torsion,
    hermitian_torsion_condition_failures,
    hermitian_torsion_general,
    theta_J_defect,
    torsion_11_part,
    torsion_from_connection,
    torsion_pattern_defect,
    trivial_alpha,
    validate_alpha,
    verify_hermitian_torsion_conditions,
    verify_J_parallel,
    verify_metric_compat,
)
from lieherm.errors import NijenhuisNotSkew, NotProductForm, NotType11
from lieherm.hermitian import eta_plus, nijenhuis, theta_J
from lieherm.rational import is_zero, zeros
from lieherm.suite import _j_witness, verify_suite
from lieherm.tensors import Connection, VectorTwoForm

from strategies import pairs, random_alpha, random_hermitian_algebra, seeds, semidirect, shuffled

T_VALUES = (0, 1, 2, -2, F(1, 3))


def H(name):
    return AlmostHermitianAlgebra(catalog(name))


def tensor3(d, entries, cls=VectorTwoForm, skew=True):
    """Dense ``X[a,b,c]`` from 1-based ``(a, b, c, value)``; skew fills ``X[b,a,c]``."""
    X = zeros((d, d, d))
    for a, b, c, v in entries:
        X[a - 1, b - 1, c - 1] = F(v)
        if skew:
            X[b - 1, a - 1, c - 1] = -F(v)
    return cls(X)


EX_ALPHA = [(1, 2, 1, 1), (3, 4, 1, 1), (2, 3, 4, -5), (4, 1, 4, 5)]

EX_TORSION = [
    (1, 2, 1, F(3, 4)), (1, 4, 1, F(1, 2)), (2, 3, 1, F(-1, 2)), (3, 4, 1, F(5, 4)),
    (1, 2, 2, F(3, 2)), (3, 4, 2, F(-3, 2)),
    (1, 2, 3, F(-1, 2)), (1, 4, 3, F(-3, 4)), (2, 3, 3, F(3, 4)), (3, 4, 3, F(1, 2)),
    (1, 4, 4, F(-7, 2)), (2, 3, 4, F(-13, 2)),
]

# (a, b, c, value) for Gamma^c_ab
EX_GAMMA = [
    (1, 2, 1, F(3, 4)), (1, 4, 1, F(1, 2)), (2, 2, 1, F(5, 2)), (3, 2, 1, F(1, 2)),
    (3, 3, 1, 1), (3, 4, 1, F(3, 4)), (4, 3, 1, F(-1, 2)), (4, 4, 1, F(-5, 2)),
    (1, 1, 2, F(-3, 4)), (1, 3, 2, F(1, 2)), (2, 1, 2, F(-5, 2)), (3, 1, 2, F(-1, 2)),
    (3, 3, 2, F(3, 4)), (3, 4, 2, -4), (4, 3, 2, F(-5, 2)),
    (1, 2, 3, F(-1, 2)), (1, 4, 3, F(3, 4)), (2, 4, 3, F(5, 2)), (3, 1, 3, -1),
    (3, 2, 3, F(-3, 4)), (3, 4, 3, F(1, 2)), (4, 1, 3, F(1, 2)), (4, 2, 3, F(5, 2)),
    (1, 1, 4, F(-1, 2)), (1, 3, 4, F(-3, 4)), (2, 3, 4, F(-5, 2)), (3, 1, 4, F(-3, 4)),
    (3, 2, 4, 4), (3, 3, 4, F(-1, 2)), (4, 1, 4, F(5, 2)),
]

EX_T2 = [
    (1, 2, 1, F(1, 4)), (2, 3, 1, 1), (3, 4, 1, F(-1, 4)),
    (1, 3, 2, -1), (3, 4, 2, -2),
    (1, 2, 3, 1), (1, 4, 3, F(-1, 4)), (2, 3, 3, F(1, 4)), (2, 4, 3, 2),
    (2, 3, 4, -2),
]

EX_GAMMA2 = [
    (1, 2, 1, F(1, 4)), (2, 2, 1, 1), (2, 3, 1, 1), (3, 3, 1, 1), (3, 4, 1, F(1, 4)),
    (4, 3, 1, F(1, 2)), (4, 4, 1, 1),
    (1, 1, 2, F(-1, 4)), (2, 1, 2, -1), (3, 3, 2, F(1, 4)), (3, 4, 2, -1), (4, 3, 2, 1),
    (1, 4, 3, F(1, 4)), (2, 1, 3, -1), (2, 4, 3, 1), (3, 1, 3, -1), (3, 2, 3, F(-1, 4)),
    (4, 1, 3, F(-1, 2)), (4, 2, 3, -1),
    (1, 3, 4, F(-1, 4)), (2, 3, 4, -1), (3, 1, 4, F(-1, 4)), (3, 2, 4, 1), (4, 1, 4, -1),
]

EX_GAMMA_MINUS2 = [
    (2, 3, 1, -1), (3, 2, 1, 1), (1, 3, 2, 1), (3, 1, 2, -1), (1, 2, 3, -1), (2, 1, 3, 1),
    (2, 6, 4, -1), (3, 5, 4, 1), (1, 6, 5, 1), (3, 4, 5, -1), (1, 5, 6, -1), (2, 4, 6, 1),
]


def ex_alpha():
    return AlphaForm(tensor3(4, EX_ALPHA).components)


def gamma_table(d, entries):
    return Connection(tensor3(d, entries, cls=Connection, skew=False).components)


# -- alpha -----------------------------------------------------------------

def test_validate_alpha():
    assert validate_alpha(zeros((4, 4, 4))).is_zero()
    assert validate_alpha(tensor3(4, EX_ALPHA)) == ex_alpha()
    with pytest.raises(NotType11):
        validate_alpha(tensor3(4, [(1, 2, 1, 1)]))


def test_validate_alpha_condition_b():
    with pytest.raises(NotType11):
        validate_alpha(tensor3(4, [(1, 4, 1, 1)]))


def test_alpha_plus_examples():
    assert alpha_plus(AlphaForm(zeros((4, 4, 4)))).is_zero()
    P = alpha_plus(ex_alpha())
    assert P.component(1, 2, 1) == 0
    assert P.component(2, 3, 4) == -5


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_alpha_plus_fixed_by_projection(seed):
    rng = random.Random(seed)
    P = alpha_plus(random_alpha(rng, rng.randint(1, 3)))
    assert eta_plus(P) == P


# -- Hermitian torsion -----------------------------------------------------

def test_example_torsion_table():
    T = hermitian_torsion(H("abdo4"), ex_alpha())
    assert T == tensor3(4, EX_TORSION)
    assert sum(1 for a, b, c in itertools.product(range(4), repeat=3)
               if a < b and T.components[a, b, c] != 0) == 12


def test_example_torsion_two_formulas():
    A, alpha = H("abdo4"), ex_alpha()
    assert hermitian_torsion(A, alpha) == hermitian_torsion_general(A, alpha)
    assert hermitian_torsion_general(A, alpha).component(1, 2, 1) == F(3, 4)


def test_zero_torsion_on_abelian():
    A = H("abelian4")
    z = AlphaForm(zeros((4, 4, 4)))
    assert hermitian_torsion(A, z).is_zero()
    assert hermitian_torsion_general(A, z).is_zero()


def test_trivial_alpha_gives_minus_bracket():
    A = H("so3xR3")
    T = hermitian_torsion_general(A, trivial_alpha(A))
    assert np.all(T.components == -A.C)


@pytest.mark.parametrize("name", ["abdo4", "so3xR3", "abelian4", "abelian6"])
def test_two_formulas_agree_catalog(name):
    A = H(name)
    alpha = random_alpha(random.Random(name), A.n)
    assert hermitian_torsion(A, alpha) == hermitian_torsion_general(A, alpha)


@settings(max_examples=40, deadline=None)
@given(pairs)
def test_two_formulas_agree_random(pair):
    A, alpha = pair
    assert hermitian_torsion(A, alpha) == hermitian_torsion_general(A, alpha)


# -- Gauduchon family ------------------------------------------------------

def test_gauduchon_alpha():
    A = H("so3xR3")
    assert gauduchon_alpha(A, 0).is_zero()
    assert gauduchon_alpha(A, 2).component(1, 2, 3) == F(1, 2)
    for t in T_VALUES:
        a = gauduchon_alpha(A, t).components
        assert np.all(a[:3, :3, :3] == -F(t) / 4 * A.C[:3, :3, :3])
    B = H("abdo4")
    assert gauduchon_alpha(B, F(2, 3)) == gauduchon_alpha(B, F(1, 3)) * 2


def test_gauduchon_torsion_examples():
    T = gauduchon_torsion(H("abdo4"), 2)
    assert T == tensor3(4, EX_T2)
    assert T.component(1, 2, 1) == F(1, 4) and T.component(2, 4, 3) == 2
    assert gauduchon_torsion(H("so3xR3"), 2).component(1, 2, 3) == 1
    for t in T_VALUES:
        assert gauduchon_torsion(H("abelian6"), t).is_zero()


@pytest.mark.parametrize("name", ["abdo4", "so3xR3"])
@pytest.mark.parametrize("t", T_VALUES)
def test_gauduchon_triple_equivalence(name, t):
    A = H(name)
    T = gauduchon_torsion(A, t)
    assert T == hermitian_torsion(A, gauduchon_alpha(A, t))
    assert T == gauduchon_torsion_from_thetas(A, t)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_gauduchon_triple_equivalence_random(seed):
    rng = random.Random(seed)
    A = random_hermitian_algebra(rng, 3)
    t = F(rng.randint(-6, 6), rng.randint(1, 4))
    T = gauduchon_torsion(A, t)
    assert T == hermitian_torsion_general(A, gauduchon_alpha(A, t))
    assert T == gauduchon_torsion_from_thetas(A, t)


def test_gauduchon_torsion_poly():
    assert gauduchon_torsion_poly(H("abelian4")).is_zero()
    A = H("so3xR3")
    P = gauduchon_torsion_poly(A)
    assert P.entry(1, 2, 3).coefficients == (0, F(1, 2), 0)
    assert np.all(P.evaluate(2) == -A.C)
    B = H("abdo4")
    Q = gauduchon_torsion_poly(B)
    for t in (-2, -1, 0, F(1, 2), 3):
        assert np.all(Q.evaluate(t) == gauduchon_torsion(B, t).components)


def test_thetas():
    A = H("abelian4")
    assert chern_theta(A).is_zero() and bismut_theta(A).is_zero()
    B = H("so3xR3")
    assert bismut_theta(B).component(1, 2, 3) == F(3, 4)
    assert chern_theta(B).component(1, 2, 3) == F(-1, 4)


# -- connections -----------------------------------------------------------

def test_example_connection_table():
    A = H("abdo4")
    G = connection_from_torsion(A, hermitian_torsion(A, ex_alpha()))
    assert G == gamma_table(4, EX_GAMMA)
    assert (G.component(1, 2, 1), G.component(3, 4, 2), G.component(3, 2, 4)) == (F(3, 4), -4, 4)
    assert verify_metric_compat(G) and verify_J_parallel(G)


def test_gauduchon_example_connection_table():
    A = H("abdo4")
    G = connection_from_torsion(A, gauduchon_torsion(A, 2))
    assert G == gamma_table(4, EX_GAMMA2)
    assert verify_metric_compat(G) and verify_J_parallel(G)


def test_so3xR3_connections():
    A = H("so3xR3")
    assert connection_from_torsion(A, gauduchon_torsion(A, 2)).is_zero()
    G = connection_from_torsion(A, gauduchon_torsion(A, -2))
    assert G == gamma_table(6, EX_GAMMA_MINUS2)


def test_connection_checks_simple():
    z = Connection(zeros((4, 4, 4)))
    assert verify_metric_compat(z) and verify_J_parallel(z)
    g = zeros((4, 4, 4))
    g[0, 0, 0] = F(1)
    assert not verify_metric_compat(Connection(g))


@settings(max_examples=30, deadline=None)
@given(pairs)
def test_round_trip(pair):
    A, alpha = pair
    T = hermitian_torsion(A, alpha)
    G = connection_from_torsion(A, T)
    assert torsion_from_connection(A, G) == T
    assert connection_from_torsion(A, torsion_from_connection(A, G)) == G
    assert verify_metric_compat(G) and verify_J_parallel(G)


# -- hat tensors -----------------------------------------------------------

def test_hat_examples():
    assert hat_transform(zeros((3, 3, 3))).is_zero()
    assert hat_transform(catalog("so3")).component(1, 2, 3) == F(-1, 2)


@settings(max_examples=30, deadline=None)
@given(pairs)
def test_hat_identities(pair):
    A, alpha = pair
    for X in (hermitian_torsion(A, alpha).components, A.C):
        Hh = hat_transform(X).components
        assert np.all(Hh - Hh.transpose(1, 0, 2) == X)
        assert np.all(Hh - Hh.transpose(2, 1, 0) == -X.transpose(0, 2, 1))
        assert np.all(Hh == -Hh.transpose(0, 2, 1))


def product_hat_oracle(A, alpha):
    """Hat of the Hermitian torsion on ``H x R^n``, transcribed block by block."""
    n, C, a = A.n, A.C, alpha.components
    out = zeros((2 * n,) * 3)
    for i, j, k in itertools.product(range(n), repeat=3):
        I, J, K = n + i, n + j, n + k
        out[i, j, k] = (-C[i, j, k] / 4 + C[i, k, j] / 4 + C[j, k, i] / 2
                        + (a[i, j, k] - a[i, k, j] - a[i, K, J] + a[i, J, K]) / 2)
        out[i, j, K] = (a[i, j, K] - a[i, K, j] + a[i, k, J] - a[i, J, k]) / 2
        out[i, J, k] = (a[i, J, k] - a[i, k, J] + a[i, K, j] - a[i, j, K]) / 2
        out[I, j, k] = (-a[i, J, k] + a[i, K, j] - a[i, k, J] + a[i, j, K]) / 2
        out[i, J, K] = (-C[i, k, j] / 4 + C[i, j, k] / 4
                        + (a[i, J, K] - a[i, K, J] - a[i, k, j] + a[i, j, k]) / 2)
        out[I, j, K] = (-C[i, k, j] / 4 - C[i, j, k] / 4
                        + (-a[i, J, K] - a[i, k, j] - a[i, K, J] - a[i, j, k]) / 2)
        out[I, J, k] = (C[i, j, k] / 4 + C[i, k, j] / 4
                        + (a[i, j, k] + a[i, k, j] + a[i, K, J] + a[i, J, K]) / 2)
        out[I, J, K] = (-a[i, J, k] + a[i, K, j] - a[i, k, J] + a[i, j, K]) / 2
    return out


def random_product(rng, n):
    m = rng.randint(1, n - 1) if n > 1 else 1
    L = semidirect(rng, m, n - m) if n > 1 else abelian(1)
    return AlmostHermitianAlgebra(product_with_abelian(shuffled(rng, L)))


@pytest.mark.parametrize("seed", range(12))
def test_product_hat_formulas(seed):
    rng = random.Random(seed)
    A = random_product(rng, rng.randint(2, 3))
    alpha = random_alpha(rng, A.n)
    Hh = hat_transform(hermitian_torsion(A, alpha)).components
    assert np.all(Hh == product_hat_oracle(A, alpha))


def test_product_hat_formulas_so3():
    A = H("so3xR3")
    for alpha in (trivial_alpha(A), gauduchon_alpha(A, F(1, 3)), random_alpha(random.Random(3), 3)):
        Hh = hat_transform(hermitian_torsion(A, alpha)).components
        assert np.all(Hh == product_hat_oracle(A, alpha))


@pytest.mark.parametrize("t", T_VALUES)
def test_product_gauduchon_hat_formulas(t):
    A = H("so3xR3")
    t = F(t)
    n, C = A.n, A.C
    Hc = hat_transform(A.base).components
    Hh = hat_transform(gauduchon_torsion(A, t)).components
    for i, j, k in itertools.product(range(n), repeat=3):
        I, J, K = n + i, n + j, n + k
        assert Hh[i, j, k] == -Hc[i, j, k] / 2 + (1 - t) / 4 * C[j, k, i]
        assert Hh[i, J, K] == Hc[i, j, k] / 2 + (1 - t) / 4 * C[j, k, i]
        assert Hh[I, j, K] == (1 - t) / 2 * Hc[k, i, j] + (t - 1) / 4 * C[j, k, i]
        assert Hh[I, J, k] == (t - 1) / 2 * Hc[k, i, j] + (1 - t) / 4 * C[j, k, i]
        assert Hh[i, j, K] == Hh[i, J, k] == Hh[I, j, k] == Hh[I, J, K] == 0


def test_gauduchon_torsion_zero_blocks_on_products():
    A = H("so3xR3")
    n = A.n
    for t in T_VALUES:
        T = gauduchon_torsion(A, t).components
        assert is_zero(T[:n, :n, n:])


# -- trivial connection ----------------------------------------------------

def test_trivial_alpha():
    A = H("so3xR3")
    alpha = trivial_alpha(A)
    assert alpha.component(1, 2, 3) == F(1, 2)
    assert alpha.component(4, 5, 3) == F(1, 2)
    assert connection_from_torsion(A, hermitian_torsion(A, alpha)).is_zero()
    assert trivial_alpha(AlmostHermitianAlgebra(product_with_abelian(abelian(2)))).is_zero()
    with pytest.raises(NotProductForm):
        trivial_alpha(H("abdo4"))


# -- Hermitian conditions --------------------------------------------------

def product_conditions_oracle(A, T):
    """The six component identities for ``H x R^n`` (all must vanish)."""
    n, C, X = A.n, A.C, T.components
    out = []
    for i, j, k in itertools.product(range(n), repeat=3):
        I, J, K = n + i, n + j, n + k
        out += [
            -X[I, j, K] - X[i, J, K] + X[i, j, k] - X[I, J, k] + C[i, j, k],
            X[I, j, k] + X[i, J, k] + X[i, j, K] - X[I, J, K],
            -X[i, j, K] - X[j, k, I] - X[k, i, J],
            X[i, j, k] - X[j, K, I] - X[K, i, J] + C[i, j, k],
            X[i, J, k] - X[J, K, I] + X[K, i, j],
            X[I, J, k] + X[J, K, i] + X[K, I, j],
        ]
    return all(v == 0 for v in out)


def test_hermitian_conditions_examples():
    A = H("abdo4")
    assert verify_hermitian_torsion_conditions(A, hermitian_torsion(A, ex_alpha()))
    B = H("so3xR3")
    for t in (0, 1, 2, -2):
        assert verify_hermitian_torsion_conditions(B, gauduchon_torsion(B, t))
    raw = VectorTwoForm(A.C)
    assert not verify_hermitian_torsion_conditions(A, raw)
    assert hermitian_torsion_condition_failures(A, raw)


@pytest.mark.parametrize("seed", range(10))
def test_product_conditions_agree(seed):
    rng = random.Random(seed)
    A = random_product(rng, rng.randint(2, 3))
    good = hermitian_torsion(A, random_alpha(rng, A.n))
    assert verify_hermitian_torsion_conditions(A, good)
    assert product_conditions_oracle(A, good)
    X = good.components.copy()
    a, b, c = rng.sample(range(2 * A.n), 2) + [rng.randrange(2 * A.n)]
    X[a, b, c] += 1
    X[b, a, c] -= 1
    bad = VectorTwoForm(X)
    assert verify_hermitian_torsion_conditions(A, bad) == product_conditions_oracle(A, bad)


# -- (1,1) part, Bismut, structural identities -----------------------------

def test_torsion_11_part():
    for name in ("abdo4", "so3xR3", "abelian4"):
        A = H(name)
        assert torsion_11_part(A, gauduchon_torsion(A, 0)).is_zero()
    A = H("abdo4")
    assert torsion_11_part(A, hermitian_torsion(A, ex_alpha())) == ex_alpha()


@settings(max_examples=30, deadline=None)
@given(pairs)
def test_alpha_recovery_random(pair):
    A, alpha = pair
    assert torsion_11_part(A, hermitian_torsion(A, alpha)) == alpha


def test_bismut_simplified_torsion():
    A = H("so3xR3")
    assert bismut_simplified_torsion(A) == gauduchon_torsion(A, 2)
    assert bismut_simplified_torsion(A).component(1, 2, 3) == 1
    assert bismut_simplified_torsion(H("abelian4")).is_zero()
    with pytest.raises(NijenhuisNotSkew):
        bismut_simplified_torsion(H("abdo4"))


@settings(max_examples=30, deadline=None)
@given(pairs)
def test_structural_identities_random(pair):
    A, alpha = pair
    T = hermitian_torsion(A, alpha)
    assert is_zero(torsion_pattern_defect(A, alpha, T))
    assert is_zero(domega_cyclic_defect(A, T))
    assert not hermitian_torsion_condition_failures(A, T)


@pytest.mark.parametrize("name", ["abdo4", "so3xR3", "abelian4"])
@pytest.mark.parametrize("t", T_VALUES)
def test_theta_J_condition(name, t):
    A = H(name)
    T = gauduchon_torsion(A, t)
    assert theta_J(T) + nijenhuis(A) == VectorTwoForm(zeros((A.dim,) * 3))
    assert is_zero(theta_J_defect(A, T))
    assert is_zero(domega_cyclic_defect(A, T))
    assert is_zero(torsion_pattern_defect(A, gauduchon_alpha(A, t), T))


# -- verification suite ------------------------------------------------------

def test_verify_suite_names_and_results():
    A = H("abdo4")
    checks = verify_suite(A, alpha=ex_alpha())
    assert all(c.passed and c.witness is None for c in checks)
    names = [c.name for c in checks]
    assert "hermitian_torsion_conditions" in names and "gauduchon_theta_formula" not in names
    names_t = [c.name for c in verify_suite(A, t=F(1, 3))]
    assert {"gauduchon_component_formula", "gauduchon_theta_formula"} <= set(names_t)
    with pytest.raises(ValueError):
        verify_suite(A)
    with pytest.raises(ValueError):
        verify_suite(A, alpha=ex_alpha(), t=1)


def test_J_witness_on_broken_connection():
    G = zeros((4, 4, 4))
    G[0, 2, 1] = F(1)  # Gamma^2_13 alone breaks the first nabla J equation
    assert not verify_J_parallel(Connection(G))
    assert _j_witness(G, 2) == (1, 3, 2)
    assert _j_witness(zeros((4, 4, 4)), 2) is None
