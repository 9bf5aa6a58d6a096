import math
from fractions import Fraction

import numpy as np
import pytest

from gfkit.hurwitz import (cayley_dickson_matrix, cayley_rotation,
                           cayley_rotation_closed3, cross_product,
                           gegenbauer_gaussian_closed,
                           gegenbauer_gaussian_identity, hurwitz_matrix,
                           hurwitz_symbolic, ks_transform,
                           laplacian_pullback_residual, levi_civita,
                           quad_map_polynomials, r8_to_r5, v_matrix,
                           v_matrix_properties)
from gfkit.polytools import (poly_add, poly_const, poly_mul, poly_var)


def test_hurwitz_symbolic_identity():
    for n in (2, 4, 8):
        H = hurwitz_symbolic(n)
        u2 = poly_const(0, n)
        for i in range(n):
            u2 = poly_add(u2, poly_mul(poly_var(i, n), poly_var(i, n)))
        for i in range(n):
            for j in range(n):
                acc = poly_const(0, n)
                for k in range(n):
                    acc = poly_add(acc, poly_mul(H[k][i], H[k][j]))
                assert acc == (u2 if i == j else {})


def test_hurwitz_matrix_layout():
    H = hurwitz_matrix(2, (1.0, 2.0))
    assert np.allclose(H, [[1, -2], [2, 1]])
    assert np.allclose(hurwitz_matrix(4, (1, 0, 0, 0)), np.eye(4))
    rng = np.random.default_rng(0)
    u = rng.normal(size=8)
    H = hurwitz_matrix(8, u)
    assert np.linalg.norm(H.T @ H - (u @ u) * np.eye(8)) < 1e-12
    with pytest.raises(ValueError):
        hurwitz_matrix(3, (1, 2, 3))


def test_recursive_generator_matches_layout():
    # Cayley-Dickson left-multiplication reproduces the tabulated layouts up
    # to row signs (n = 8 after transposition)
    rng = np.random.default_rng(1)
    for n in (2, 4, 8):
        u = rng.normal(size=n)
        Hcd = cayley_dickson_matrix(n, u)
        assert np.linalg.norm(Hcd.T @ Hcd - (u @ u) * np.eye(n)) < 1e-12
        Hp = hurwitz_matrix(n, u)
        M = Hcd if n < 8 else Hcd.T
        for i in range(n):
            assert np.allclose(M[i], Hp[i]) or np.allclose(M[i], -Hp[i])


def test_ks_examples():
    assert ks_transform((1, 0, 0, 0)) == (0, 0, 1)
    assert ks_transform((1, 0, 1, 0)) == (2, 0, 0)
    u = (Fraction(3, 2), Fraction(-1, 3), Fraction(2, 7), Fraction(5, 4))
    x = ks_transform(u)
    assert sum(v * v for v in x) == (sum(v * v for v in u)) ** 2


def test_quad_maps_norm_identity():
    rng = np.random.default_rng(2)
    u2 = rng.normal(size=2)
    x = levi_civita(u2)
    assert sum(v * v for v in x) == pytest.approx((u2 @ u2) ** 2, rel=1e-12)
    u8 = [Fraction(k, 7) for k in (3, -2, 5, 1, -4, 2, 6, -1)]
    x5 = r8_to_r5(u8)
    assert sum(v * v for v in x5) == (sum(v * v for v in u8)) ** 2


def test_cayley_rotation3():
    assert np.allclose(cayley_rotation(3, (1.0, 0, 0, 0)), np.eye(3))
    rng = np.random.default_rng(3)
    for _ in range(20):
        u = rng.normal(size=4)
        O = cayley_rotation(3, u)
        assert np.linalg.norm(O - cayley_rotation_closed3(u)) < 1e-12
        r2 = u @ u
        assert np.linalg.norm(O.T @ O - r2 * r2 * np.eye(3)) < 1e-10
        assert np.linalg.det(O) == pytest.approx(r2 ** 3, rel=1e-10)


def test_cayley_rotation7():
    rng = np.random.default_rng(4)
    for _ in range(20):
        u = rng.normal(size=8)
        O = cayley_rotation(7, u)
        r2 = u @ u
        assert np.linalg.norm(O.T @ O - r2 * r2 * np.eye(7)) < 1e-10
    with pytest.raises(ArithmeticError):
        cayley_rotation(3, (0.0, 1.0, 0.0, 0.0))


def test_cross_products():
    e = np.eye(7)
    assert np.allclose(cross_product(3, [1, 0, 0], [0, 1, 0]), [0, 0, 1])
    assert np.allclose(cross_product(7, e[0], e[1]), -e[6])
    rng = np.random.default_rng(5)
    for _ in range(1000):
        a, b = rng.normal(size=7), rng.normal(size=7)
        c = cross_product(7, a, b)
        lag = (a @ a) * (b @ b) - (a @ b) ** 2
        assert abs(c @ c - lag) < 1e-12 * max(1.0, abs(lag))
        assert abs(a @ c) < 1e-12 * np.linalg.norm(a) * np.linalg.norm(c) + 1e-12
        assert np.allclose(cross_product(7, b, a), -c)
    # bilinearity
    a, b, c = rng.normal(size=7), rng.normal(size=7), rng.normal(size=7)
    lhs = cross_product(7, a, 2.0 * b + c)
    rhs = 2.0 * cross_product(7, a, b) + cross_product(7, a, c)
    assert np.allclose(lhs, rhs)


def test_v_matrix_properties():
    rng = np.random.default_rng(6)
    rep = v_matrix_properties(7, rng.normal(size=7))
    assert rep["cube_residual"] < 1e-10
    assert rep["exp_residual"] < 1e-10
    rep = v_matrix_properties(3, rng.normal(size=3))
    assert rep["cube_residual"] < 1e-12 and rep["exp_residual"] < 1e-12
    rep0 = v_matrix_properties(3, [0.0, 0.0, 0.0])
    assert rep0["cube_residual"] == 0.0 and rep0["exp_residual"] == 0.0
    # n=3, x=e3, theta=pi/2: the exponential is the classic rotation about z
    import scipy.linalg
    V = v_matrix(3, [0, 0, 1.0])
    R = scipy.linalg.expm(math.pi / 2 * V)
    classic = np.array([[0.0, -1.0, 0], [1.0, 0, 0], [0, 0, 1.0]])
    assert np.linalg.norm(R - classic) < 1e-12


def test_laplacian_pullback():
    rng = np.random.default_rng(7)
    # (3,4), f = z: both sides vanish
    f = {(0, 0, 1): Fraction(1)}
    assert laplacian_pullback_residual((3, 4), f, rng.normal(size=4)) == 0.0
    f = {(2, 0, 0): Fraction(1)}
    assert laplacian_pullback_residual((3, 4), f, rng.normal(size=4)) < 1e-10
    f = {(1, 1, 0, 0, 0): Fraction(1)}
    assert laplacian_pullback_residual((5, 8), f, rng.normal(size=8)) < 1e-9
    with pytest.raises(ValueError):
        quad_map_polynomials((4, 6))


def test_laplacian_pullback_random_polys():
    rng = np.random.default_rng(8)
    for (n, N) in ((2, 2), (3, 4), (5, 8)):
        for _ in range(10):
            f = {}
            for _ in range(4):
                e = tuple(int(x) for x in rng.integers(0, 3, size=n))
                if sum(e) <= 6:
                    f[e] = Fraction(int(rng.integers(-5, 6)))
            if not f:
                continue
            u = rng.normal(size=N)
            assert laplacian_pullback_residual((n, N), f, u) < 1e-9


def test_gegenbauer_gaussian_identities():
    # A1: both sides 1 at alpha = 0
    assert gegenbauer_gaussian_identity(1, 0.0, (0.2, -0.1, 0.5)) < 1e-14
    # A1 at x3 = 0.5, r = 1: closed form 1/sqrt(1 - 2*0.5*0.3 + 0.09)
    x = (math.sqrt(0.75), 0.0, 0.5)
    closed = gegenbauer_gaussian_closed(1, 0.3, x)
    assert closed == pytest.approx(1 / math.sqrt(1 - 2 * 0.5 * 0.3 + 0.09), rel=1e-12)
    assert gegenbauer_gaussian_identity(1, 0.3, x, nodes=80) < 1e-8
    # A2, A3 stochastic
    rng = np.random.default_rng(9)
    x = rng.normal(size=4)
    x /= np.linalg.norm(x)
    assert gegenbauer_gaussian_identity(2, 0.2, tuple(x), samples=10 ** 6, seed=1) < 1e-3
    x6 = rng.normal(size=6)
    x6 /= np.linalg.norm(x6)
    assert gegenbauer_gaussian_identity(3, 0.15, tuple(x6), samples=10 ** 6, seed=2) < 1e-3
    with pytest.raises(ValueError):
        gegenbauer_gaussian_identity(1, 2.0, (0.0, 0.0, 1.0))
