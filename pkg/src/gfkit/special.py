"""Classical orthogonal polynomials, spherical and hyperspherical harmonics,
hydrogen wavefunctions in position and momentum space (3-D and N-D), the
numeric Hankel/Fourier oracle and generating-function residuals.

Atomic units, Z = 1.  N-dimensional states use delta_n = 1/(n + (N-3)/2);
the momentum-space closed form is the Gegenbauer expression
  ~ (delta p)^l C_{n-l-1}^{l+(N-1)/2}((p^2-d^2)/(p^2+d^2)) / (p^2+d^2)^{l+(N+1)/2}
validated pointwise against the Hankel-transform oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import gamma as _gamma
from scipy.special import gammaln as _gammaln
from scipy.special import jv as _besselj

from .quadrature import tanhsinh_halfline, gauss_legendre


# ---------------------------------------------------------------------------
# polynomial families by three-term recurrence
# ---------------------------------------------------------------------------
def laguerre(n, alpha, x):
    """L_n^{(alpha)}(x), stable upward recurrence; vectorized in x."""
    if alpha <= -1:
        raise ValueError("laguerre needs alpha > -1")
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = 1 + alpha - x
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1 + alpha - x) * p1 - (k + alpha) * p0) / (k + 1)
    return p1


def gegenbauer(n, alpha, x):
    """C_n^{(alpha)}(x); alpha > -1/2."""
    if alpha <= -0.5:
        raise ValueError("gegenbauer needs alpha > -1/2")
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = 2 * alpha * x
    for k in range(1, n):
        p0, p1 = p1, (2 * (k + alpha) * x * p1 - (k + 2 * alpha - 1) * p0) / (k + 1)
    return p1


def hermite(n, x):
    """Physicists' H_n(x)."""
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = 2 * x
    for k in range(1, n):
        p0, p1 = p1, 2 * x * p1 - 2 * k * p0
    return p1


def legendre(n, x):
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = x
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
    return p1


@dataclass(frozen=True)
class PolyFamily:
    family: str           # laguerre | gegenbauer | hermite | legendre
    degree: int
    alpha: float = 0.0

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree >= 0")
        if self.family == "laguerre" and self.alpha <= -1:
            raise ValueError("alpha > -1")
        if self.family == "gegenbauer" and self.alpha <= -0.5:
            raise ValueError("alpha > -1/2")


def poly_eval(p: PolyFamily, x):
    if p.family == "laguerre":
        return laguerre(p.degree, p.alpha, x)
    if p.family == "gegenbauer":
        return gegenbauer(p.degree, p.alpha, x)
    if p.family == "hermite":
        return hermite(p.degree, x)
    if p.family == "legendre":
        return legendre(p.degree, x)
    raise ValueError(f"unknown family {p.family}")


def laguerre_coeffs(n, alpha_num: Fraction):
    """Exact coefficients of L_n^{(alpha)}: a_k = (-1)^k binom(n+alpha, n-k)/k!."""
    out = []
    for k in range(n + 1):
        b = Fraction(1)
        for j in range(1, n - k + 1):
            b *= (alpha_num + k + j) / j
        out.append(Fraction((-1) ** k) * b / math.factorial(k))
    return out


# ---------------------------------------------------------------------------
# spherical harmonics (3-D) and hyperspherical chains
# ---------------------------------------------------------------------------
def _assoc_legendre_norm(l, m, x):
    """Normalized P_l^m with Condon-Shortley phase:
    sqrt((2l+1)/(4pi) (l-m)!/(l+m)!) P_l^m(x), for m >= 0."""
    x = np.asarray(x, dtype=float)
    somx2 = np.sqrt(np.maximum(0.0, 1 - x * x))
    # P_m^m with normalization folded in
    pmm = np.full_like(x, math.sqrt(1 / (4 * math.pi)))
    for k in range(1, m + 1):
        pmm = -pmm * somx2 * math.sqrt((2 * k + 1) / (2.0 * k))
    if l == m:
        return pmm
    pmm1 = x * math.sqrt(2 * m + 3) * pmm
    if l == m + 1:
        return pmm1
    for ll in range(m + 2, l + 1):
        a = math.sqrt((4 * ll * ll - 1) / (ll * ll - m * m))
        b = math.sqrt(((ll - 1) ** 2 - m * m) / (4 * (ll - 1) ** 2 - 1))
        pmm, pmm1 = pmm1, a * (x * pmm1 - b * pmm)
    return pmm1


def spherical_harmonic(l, m, theta, phi):
    """Y_{lm}(theta, phi), orthonormal on the sphere, Condon-Shortley."""
    if abs(m) > l:
        raise ValueError("|m| <= l")
    am = abs(m)
    base = _assoc_legendre_norm(l, am, np.cos(theta))
    val = base * np.exp(1j * am * np.asarray(phi))
    if m >= 0:
        return val
    return (-1) ** am * np.conj(val)


def hyperspherical_harmonic(N, l, mus, angles, _norm_cache={}):
    """Y_{l,{mu}} on S^{N-1}; chain l = mu_1 >= mu_2 >= ... >= |mu_{N-1}|.

    angles = (theta_1..theta_{N-2}, phi); normalization enforced numerically
    (more robust than the closed-form constant for general chains).
    N = 2 returns e^{i m phi}/sqrt(2 pi).
    """
    chain = (l,) + tuple(mus)
    if len(chain) != N - 1:
        raise ValueError("need mu_2..mu_{N-1}")
    if N == 2:
        (phi,) = angles
        return np.exp(1j * l * np.asarray(phi)) / math.sqrt(2 * math.pi)
    m = chain[-1]
    thetas = angles[:N - 2]
    phi = angles[N - 2]
    val = np.exp(1j * m * np.asarray(phi)) / math.sqrt(2 * math.pi)
    for j in range(1, N - 1):          # theta_j, j = 1..N-2
        alpha_j = (N - j - 1) / 2.0
        mu_j = chain[j - 1]
        mu_j1 = abs(chain[j])
        deg = mu_j - mu_j1
        ct = np.cos(thetas[j - 1])
        st = np.sin(thetas[j - 1])
        factor = gegenbauer(deg, alpha_j + mu_j1, ct) * st ** mu_j1
        key = (N, j, mu_j, mu_j1)
        if key not in _norm_cache:
            xs, ws = gauss_legendre(400, 0.0, math.pi)
            f = (gegenbauer(deg, alpha_j + mu_j1, np.cos(xs))
                 * np.sin(xs) ** mu_j1) ** 2 * np.sin(xs) ** (N - 1 - j)
            _norm_cache[key] = 1.0 / math.sqrt(float(np.sum(f * ws)))
        val = val * factor * _norm_cache[key]
    return val


# ---------------------------------------------------------------------------
# hydrogen states
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class HydrogenState:
    N: int
    n: int
    l: int
    mus: tuple = ()     # mu_2..mu_{N-1} hyperspherical chain; (m,) for N=3

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("N >= 2")
        if self.n < self.l + 1:
            raise ValueError("n >= l+1")
        chain = (self.l,) + tuple(self.mus)
        if self.mus:
            for a, b in zip(chain, chain[1:-1]):
                if a < b:
                    raise ValueError("chain must decrease")
            if abs(chain[-1]) > (chain[-2] if len(chain) > 1 else self.l):
                raise ValueError("|m| <= previous chain entry")

    @property
    def delta(self) -> float:
        return 1.0 / (self.n + (self.N - 3) / 2.0)


def radial_norm_constant(N, n, l) -> float:
    """Closed-form N_{n,l} * omega^{N/2} of the N-dim radial function."""
    halfshift = n + (N - 3) / 2.0
    omega = 2.0 / halfshift
    lognum = 0.5 * (_gammaln(n - l) - math.log(2 * halfshift)
                    - _gammaln(n + l + N - 2))
    return math.exp(lognum) * omega ** (N / 2.0)


def hydrogen_radial(N, n, l, r):
    """R_{n,l}(r) in N dimensions; integral of R^2 r^{N-1} dr = 1."""
    r = np.asarray(r, dtype=float)
    delta = 1.0 / (n + (N - 3) / 2.0)
    x = 2 * delta * r
    return (radial_norm_constant(N, n, l) * x ** l * np.exp(-x / 2)
            * laguerre(n - l - 1, 2 * l + N - 2, x))


def hydrogen_momentum_radial(N, n, l, p):
    """Closed-form radial momentum amplitude F_{n,l}(p), nonnegative-p grid;
    integral of F^2 p^{N-1} dp = 1."""
    p = np.asarray(p, dtype=float)
    d = 1.0 / (n + (N - 3) / 2.0)
    x = (p * p - d * d) / (p * p + d * d)
    pref = math.sqrt(math.factorial(n - l - 1) * (n + (N - 3) / 2.0)
                     / (2 * math.pi * _gamma(n + l + N - 2)))
    pref *= 2.0 ** (2 * l + N) * d ** (N / 2.0 + 1) * _gamma(l + (N - 1) / 2.0)
    return (pref * (d * p) ** l / (p * p + d * d) ** (l + (N + 1) / 2.0)
            * gegenbauer(n - l - 1, l + (N - 1) / 2.0, x))


def hydrogen_position_wf(state: HydrogenState, r, angles):
    """psi(r, angles) = R_{nl}(r) Y_{l,{mu}}(angles)."""
    R = hydrogen_radial(state.N, state.n, state.l, r)
    if state.N == 3 and len(state.mus) == 1:
        Y = spherical_harmonic(state.l, state.mus[0], *angles)
    else:
        Y = hyperspherical_harmonic(state.N, state.l, state.mus, angles)
    return R * Y


def hydrogen_momentum_wf(state: HydrogenState, p, angles):
    """Momentum-space wavefunction including the i^l phase convention (overall
    minus in N dimensions); magnitudes match the Fourier oracle."""
    F = hydrogen_momentum_radial(state.N, state.n, state.l, p)
    if state.N == 3 and len(state.mus) == 1:
        Y = spherical_harmonic(state.l, state.mus[0], *angles)
        return (1j) ** state.l * F * Y
    Y = hyperspherical_harmonic(state.N, state.l, state.mus, angles)
    return -((1j) ** state.l) * F * Y


def fourier_momentum_oracle(N, n, l, p_grid):
    """|radial momentum amplitude| from the Hankel integral
    int R_{nl}(r) J_nu(pr) (pr)^{-(N-2)/2} r^{N-1} dr, nu = l + (N-2)/2,
    by adaptive tanh-sinh quadrature, vectorized over the p grid."""
    p_grid = np.atleast_1d(np.asarray(p_grid, dtype=float))
    nu = l + (N - 2) / 2.0

    def integrand(r):
        r = np.asarray(r)
        pr = np.outer(p_grid, r)
        vals = (hydrogen_radial(N, n, l, r)[None, :] * _besselj(nu, pr)
                * pr ** (-(N - 2) / 2.0) * r[None, :] ** (N - 1))
        return vals

    est = tanhsinh_halfline(integrand)
    return np.abs(est)


def gaussian_hankel_selftransform(p_grid, N=3):
    """Oracle sanity input: exp(-r^2/2) maps to itself under the l = 0
    radial Fourier transform in N dimensions."""
    p_grid = np.atleast_1d(np.asarray(p_grid, dtype=float))
    nu = (N - 2) / 2.0

    def integrand(r):
        r = np.asarray(r)
        pr = np.outer(p_grid, r)
        return (np.exp(-r * r / 2)[None, :] * _besselj(nu, pr)
                * pr ** (-(N - 2) / 2.0) * r[None, :] ** (N - 1))

    return tanhsinh_halfline(integrand)


# ---------------------------------------------------------------------------
# generating function residuals
# ---------------------------------------------------------------------------
def genfunc_residual(kind, r, t, alpha=1.0, order=80):
    """|truncated series - closed form| for the classical generating
    functions; r is the expansion variable (|r| < 1), t the argument."""
    if abs(r) >= 1:
        raise ValueError("need |r| < 1")
    if kind == "legendre":
        closed = 1.0 / math.sqrt(1 - 2 * r * t + r * r)
        series = sum(r ** n * float(legendre(n, t)) for n in range(order + 1))
    elif kind == "gegenbauer":
        closed = (1 - 2 * r * t + r * r) ** (-alpha)
        series = sum(r ** n * float(gegenbauer(n, alpha, t)) for n in range(order + 1))
    elif kind == "character":
        # sum_j r^{2j} chi_j(theta) = 1/(1 - 2 r cos(theta) + r^2) with
        # chi_j = sin((2j+1)theta)/sin(theta) and r stepping by sqrt there;
        # equivalently sum_k r^k U_k(cos theta)
        closed = 1.0 / (1 - 2 * r * t + r * r)
        series = 0.0
        for k in range(order + 1):
            series += r ** k * float(gegenbauer(k, 1.0, t))
    else:
        raise ValueError(f"unknown kind {kind}")
    return abs(series - closed)
