"""Hurwitz matrices, octonionic quadratic transformations, Cayley rotations,
3-D and 7-D cross products and the Laplacian pullback identity.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import scipy.linalg

from .polytools import (poly_add, poly_compose, poly_const, poly_eval,
                        poly_laplacian, poly_mul, poly_scale, poly_var)

_H2 = ((("+", 1), ("-", 2)),
       (("+", 2), ("+", 1)))

_H4 = ((("+", 1), ("-", 2), ("-", 3), ("-", 4)),
       (("+", 2), ("+", 1), ("-", 4), ("+", 3)),
       (("+", 3), ("+", 4), ("+", 1), ("-", 2)),
       (("+", 4), ("-", 3), ("+", 2), ("+", 1)))

_H8 = ((("+", 1), ("+", 2), ("+", 3), ("+", 4), ("+", 5), ("+", 6), ("+", 7), ("+", 8)),
       (("-", 2), ("+", 1), ("+", 4), ("-", 3), ("+", 6), ("-", 5), ("-", 8), ("+", 7)),
       (("-", 3), ("-", 4), ("+", 1), ("+", 2), ("+", 7), ("+", 8), ("-", 5), ("-", 6)),
       (("-", 4), ("+", 3), ("-", 2), ("+", 1), ("+", 8), ("-", 7), ("+", 6), ("-", 5)),
       (("-", 5), ("-", 6), ("-", 7), ("-", 8), ("+", 1), ("+", 2), ("+", 3), ("+", 4)),
       (("-", 6), ("+", 5), ("-", 8), ("+", 7), ("-", 2), ("+", 1), ("-", 4), ("+", 3)),
       (("-", 7), ("+", 8), ("+", 5), ("-", 6), ("-", 3), ("+", 4), ("+", 1), ("-", 2)),
       (("-", 8), ("-", 7), ("+", 6), ("+", 5), ("-", 4), ("-", 3), ("+", 2), ("+", 1)))

_H_LAYOUT = {2: _H2, 4: _H4, 8: _H8}


def hurwitz_layout(n: int):
    """Signed-index layout of H_n, rows of (sign, variable index 1..n)."""
    if n not in _H_LAYOUT:
        raise ValueError("Hurwitz matrices exist for n in {2, 4, 8}")
    return _H_LAYOUT[n]


def hurwitz_matrix(n: int, u) -> np.ndarray:
    """Numeric H_n(u) with H^T H = |u|^2 I."""
    lay = hurwitz_layout(n)
    u = np.asarray(u, dtype=float)
    if u.shape != (n,):
        raise ValueError(f"u must have length {n}")
    out = np.empty((n, n))
    for i, row in enumerate(lay):
        for j, (sg, k) in enumerate(row):
            out[i, j] = u[k - 1] if sg == "+" else -u[k - 1]
    return out


def hurwitz_symbolic(n: int):
    """H_n with entries as exact linear polynomials in u_1..u_n."""
    lay = hurwitz_layout(n)
    return [[poly_var(k - 1, n, 1 if sg == "+" else -1) for sg, k in row]
            for row in lay]


def cayley_dickson_matrix(n: int, u) -> np.ndarray:
    """Left-multiplication matrix of the Cayley-Dickson doubling chain;
    recursive alternative generator of a Hurwitz matrix family."""
    if n == 1:
        return np.array([[float(u[0])]])
    if n not in (2, 4, 8):
        raise ValueError("n must be in {1, 2, 4, 8}")
    m = n // 2
    a, b = np.asarray(u[:m], dtype=float), np.asarray(u[m:], dtype=float)

    def conj(v):
        w = -np.asarray(v, dtype=float)
        w[0] = -w[0]
        return w

    cols = []
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        c, d = e[:m], e[m:]
        # (a,b)(c,d) = (a c - conj(d) b, d a + b conj(c))
        top = _cd_mul(m, a, c) - _cd_mul(m, conj(d), b)
        bot = _cd_mul(m, d, a) + _cd_mul(m, b, conj(c))
        cols.append(np.concatenate([top, bot]))
    return np.column_stack(cols)


def _cd_mul(m, x, y):
    if m == 1:
        return np.array([x[0] * y[0]])
    h = m // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]

    def conj(v):
        w = -np.asarray(v, dtype=float)
        w[0] = -w[0]
        return w

    top = _cd_mul(h, a, c) - _cd_mul(h, conj(d), b)
    bot = _cd_mul(h, d, a) + _cd_mul(h, b, conj(c))
    return np.concatenate([top, bot])


# ---------------------------------------------------------------------------
# quadratic transformations
# ---------------------------------------------------------------------------
def levi_civita(u):
    """R^2 -> R^2 conformal square, exact on Fraction input."""
    u1, u2 = u
    return (u1 * u1 - u2 * u2, 2 * u1 * u2)


def ks_transform(u):
    """Kustaanheimo-Stiefel R^4 -> R^3; |x| = |u|^2, exact on rationals."""
    u1, u2, u3, u4 = u
    return (2 * (u1 * u3 + u2 * u4),
            2 * (-u1 * u4 + u2 * u3),
            u1 * u1 + u2 * u2 - u3 * u3 - u4 * u4)


def r8_to_r5(u):
    """Octonionic R^8 -> R^5; sum x_i^2 = (sum u_i^2)^2.

    Quaternionic Hopf form (2 conj(q) p, |q|^2 - |p|^2) with q = (z1, z2),
    p = (z3, z4); the sesquilinear pairing is what the Dirac-matrix
    quadratic form z^dag A z encodes."""
    u1, u2, u3, u4, u5, u6, u7, u8 = u
    x1 = 2 * (u1 * u5 + u2 * u6 + u3 * u7 + u4 * u8)
    x2 = 2 * (u1 * u6 - u2 * u5 + u4 * u7 - u3 * u8)
    x3 = 2 * (u1 * u7 + u2 * u8 - u3 * u5 - u4 * u6)
    x4 = 2 * (u1 * u8 - u2 * u7 + u3 * u6 - u4 * u5)
    x5 = (u1 * u1 + u2 * u2 + u3 * u3 + u4 * u4
          - u5 * u5 - u6 * u6 - u7 * u7 - u8 * u8)
    return (x1, x2, x3, x4, x5)


QUAD_MAPS = {(2, 2): levi_civita, (3, 4): ks_transform, (5, 8): r8_to_r5}


def quad_map_polynomials(pair):
    """Component polynomials of the (n,N) quadratic map, exact."""
    if pair not in QUAD_MAPS:
        raise ValueError(f"unsupported pair {pair}")
    return _quad_polys(pair, pair[1])


def _quad_polys(pair, N):
    def var(i):
        return poly_var(i, N)

    def mul(a, b):
        return poly_mul(a, b)

    def sc(a, c):
        return poly_scale(a, Fraction(c))

    def add(*ps):
        out = {}
        for p in ps:
            out = poly_add(out, p)
        return out

    u = [var(i) for i in range(N)]
    if pair == (2, 2):
        return [add(mul(u[0], u[0]), sc(mul(u[1], u[1]), -1)),
                sc(mul(u[0], u[1]), 2)]
    if pair == (3, 4):
        return [sc(add(mul(u[0], u[2]), mul(u[1], u[3])), 2),
                sc(add(sc(mul(u[0], u[3]), -1), mul(u[1], u[2])), 2),
                add(mul(u[0], u[0]), mul(u[1], u[1]),
                    sc(mul(u[2], u[2]), -1), sc(mul(u[3], u[3]), -1))]
    if pair == (5, 8):
        return [sc(add(mul(u[0], u[4]), mul(u[1], u[5]),
                       mul(u[2], u[6]), mul(u[3], u[7])), 2),
                sc(add(mul(u[0], u[5]), sc(mul(u[1], u[4]), -1),
                       mul(u[3], u[6]), sc(mul(u[2], u[7]), -1)), 2),
                sc(add(mul(u[0], u[6]), mul(u[1], u[7]),
                       sc(mul(u[2], u[4]), -1), sc(mul(u[3], u[5]), -1)), 2),
                sc(add(mul(u[0], u[7]), sc(mul(u[1], u[6]), -1),
                       mul(u[2], u[5]), sc(mul(u[3], u[4]), -1)), 2),
                add(mul(u[0], u[0]), mul(u[1], u[1]), mul(u[2], u[2]),
                    mul(u[3], u[3]), sc(mul(u[4], u[4]), -1),
                    sc(mul(u[5], u[5]), -1), sc(mul(u[6], u[6]), -1),
                    sc(mul(u[7], u[7]), -1))]
    raise ValueError(pair)


# ---------------------------------------------------------------------------
# cross products and V matrices
# ---------------------------------------------------------------------------
def v_matrix(n: int, x) -> np.ndarray:
    """Matrix V with V(a) b = a x b; n = 3 or 7 (7-D layout of the Cayley
    octonion convention)."""
    x = np.asarray(x, dtype=float)
    if n == 3:
        x1, x2, x3 = x
        return np.array([[0, -x3, x2], [x3, 0, -x1], [-x2, x1, 0]])
    if n == 7:
        x1, x2, x3, x4, x5, x6, x7 = x
        return np.array([
            [0, x7, -x6, -x5, x4, x3, -x2],
            [-x7, 0, -x5, x6, x3, -x4, x1],
            [x6, x5, 0, x7, -x2, -x1, -x4],
            [x5, -x6, -x7, 0, -x1, x2, x3],
            [-x4, -x3, x2, x1, 0, x7, -x6],
            [-x3, x4, x1, -x2, -x7, 0, x5],
            [x2, -x1, x4, -x3, x6, -x5, 0]])
    raise ValueError("cross products exist only for n in {3, 7}")


def cross_product(n: int, a, b) -> np.ndarray:
    return v_matrix(n, a) @ np.asarray(b, dtype=float)


def v_matrix_properties(n: int, x, theta: float = math.pi / 2) -> dict:
    """Residuals of the V-matrix identities: V^3 = -r^2 V and the rotation
    exponential exp(-i theta (iV)) = 1 - i sin(theta) (iV) - (1-cos)(iV)^2
    (checked at unit |x| in its literal complex form)."""
    x = np.asarray(x, dtype=float)
    V = v_matrix(n, x)
    r2 = float(x @ x)
    res_cube = float(np.linalg.norm(V @ V @ V + r2 * V))
    if r2 == 0.0:
        return {"cube_residual": res_cube, "exp_residual": 0.0}
    xu = x / math.sqrt(r2)
    Vu = v_matrix(n, xu)
    J = 1j * Vu
    lhs = scipy.linalg.expm(-1j * theta * J)
    rhs = (np.eye(n) - 1j * math.sin(theta) * J
           - (1 - math.cos(theta)) * (J @ J))
    res_exp = float(np.linalg.norm(lhs - rhs))
    return {"cube_residual": res_cube, "exp_residual": res_exp}


# ---------------------------------------------------------------------------
# Cayley rotations
# ---------------------------------------------------------------------------
def _skew_s(n: int, u) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if n == 3:
        if u.shape != (4,):
            raise ValueError("n=3 needs a 4-vector u")
        _, u2, u3, u4 = u
        return np.array([[0, u2, u3], [-u2, 0, u4], [-u3, -u4, 0]])
    if n == 7:
        if u.shape != (8,):
            raise ValueError("n=7 needs an 8-vector u")
        return -v_matrix(7, u[1:])
    raise ValueError("Cayley rotations implemented for n in {3, 7}")


def cayley_rotation(n: int, u) -> np.ndarray:
    """O_n(u) = |u|^2 (u1 I - S)(u1 I + S)^{-1}; O^T O = (|u|^2)^2 I."""
    u = np.asarray(u, dtype=float)
    S = _skew_s(n, u)
    r2 = float(u @ u)
    A = u[0] * np.eye(n) - S
    B = u[0] * np.eye(n) + S
    try:
        return r2 * np.linalg.solve(B.T, A.T).T
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError("singular Cayley denominator") from exc


def cayley_rotation_closed3(u) -> np.ndarray:
    """Closed form for n=3: r I - 2 u1 S + 2 S^2."""
    u = np.asarray(u, dtype=float)
    S = _skew_s(3, u)
    r2 = float(u @ u)
    return r2 * np.eye(3) - 2 * u[0] * S + 2 * S @ S


# ---------------------------------------------------------------------------
# Laplacian pullback
# ---------------------------------------------------------------------------
def laplacian_pullback_residual(pair, f_poly, u) -> float:
    """|Delta_u f(x(u)) - 4 |u|^2 (Delta_x f)(x(u))| at the point u.

    f_poly: exact polynomial in the n target variables (dict exponents ->
    Fraction).  The difference is formed symbolically, so the residual is an
    exact zero evaluated in floating point.
    """
    n, N = pair
    comps = quad_map_polynomials(pair)
    composed = poly_compose(f_poly, comps, N)
    lap_u = poly_laplacian(composed, N)
    lap_x = poly_laplacian(f_poly, n)
    lap_x_pulled = poly_compose(lap_x, comps, N)
    u2 = poly_const(0, N)
    for i in range(N):
        u2 = poly_add(u2, poly_mul(poly_var(i, N), poly_var(i, N)))
    rhs = poly_scale(poly_mul(u2, lap_x_pulled), 4)
    diff = poly_add(lap_u, poly_scale(rhs, -1))
    return abs(float(poly_eval(diff, [Fraction(x) for x in u])))


# ---------------------------------------------------------------------------
# Gegenbauer-Gaussian identities
# ---------------------------------------------------------------------------
def _a_matrix(n_case, x):
    if n_case == 1:
        x1, x2, x3 = x
        return np.array([[x3 + 1j * x2, 1j * x1], [1j * x1, x3 - 1j * x2]])
    if n_case == 2:
        x1, x2, x3, x4 = x
        return np.array([[x4 + 1j * x3, x2 + 1j * x1],
                         [-x2 + 1j * x1, x4 - 1j * x3]])
    if n_case == 3:
        x1, x2, x3, x4, x5, x6 = x
        return np.array([
            [x6 + 1j * x5, 0, -x1 + 1j * x2, -x4 + 1j * x3],
            [0, x6 + 1j * x5, -x4 - 1j * x3, x1 + 1j * x2],
            [x1 + 1j * x2, x4 - 1j * x3, x6 - 1j * x5, 0],
            [x4 + 1j * x3, -x1 + 1j * x2, 0, x6 - 1j * x5]])
    raise ValueError("n_case must be 1, 2 or 3")


def gegenbauer_gaussian_closed(n_case, alpha, x) -> complex:
    """(1 - 2 x_last alpha + alpha^2 r^2)^{-m}, m = 1/2, 1, 2."""
    x = np.asarray(x, dtype=float)
    r2 = float(x @ x)
    base = 1 - 2 * x[-1] * alpha + alpha * alpha * r2
    m = {1: 0.5, 2: 1.0, 3: 2.0}[n_case]
    return base ** (-m)


def gegenbauer_gaussian_identity(n_case, alpha, x, samples=10 ** 6,
                                 seed=0, nodes=80):
    """Residual |numeric Gaussian integral - closed form|.

    Case 1 uses tensor Gauss-Hermite quadrature over the two real variables;
    cases 2 and 3 use seeded Monte Carlo over the Gaussian measure.
    """
    x = np.asarray(x, dtype=float)
    A = _a_matrix(n_case, x)
    closed = gegenbauer_gaussian_closed(n_case, alpha, x)
    if abs(alpha) * max(np.linalg.norm(x), 1.0) >= 1.0:
        raise ValueError("parameters outside the convergence domain")
    if n_case == 1:
        t, w = np.polynomial.hermite.hermgauss(nodes)
        U1, U2 = np.meshgrid(t, t)
        W = np.outer(w, w) / math.pi
        quad = (A[0, 0] * U1 * U1 + A[1, 1] * U2 * U2
                + (A[0, 1] + A[1, 0]) * U1 * U2)
        est = np.sum(W * np.exp(alpha * quad))
    else:
        rng = np.random.default_rng(seed)
        ncomplex = A.shape[0]
        zr = rng.normal(scale=math.sqrt(0.5), size=(samples, ncomplex))
        zi = rng.normal(scale=math.sqrt(0.5), size=(samples, ncomplex))
        z = zr + 1j * zi
        quad = np.einsum("si,ij,sj->s", z.conj(), A, z)
        est = np.mean(np.exp(alpha * quad))
    return abs(est - closed)
