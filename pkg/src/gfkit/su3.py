"""SU(3): multiplicity-free couplings (lambda1,0) x (lambda2,0), isoscalar
factors, and the Euler-angle factorization of SU(3) matrices.

Wigner coefficients come from the invariant polynomial
  h = N [z1.(z3 x z5)]^{mu3} (z3.z56)^{lam2-mu3} (z1.z56)^{lam1-mu3}
contracted against basis states in Fock-Bargmann space; everything is
exact rational arithmetic, the normalization is fixed by orthonormality
(the per-state sum of squared coefficients equals 1/dim), and the values
factor exactly into isoscalar times SU(2) 3j.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact import SR_ZERO, SqrtRational, HalfInt
from .polytools import bargmann_dot, poly_mul, poly_pow
from .wigner import threej


@dataclass(frozen=True)
class Su3Label:
    lam: int
    mu: int
    p: int
    q: int
    two_t: int
    two_t0: int
    y: int

    def __post_init__(self):
        if not (0 <= self.p <= self.lam and 0 <= self.q <= self.mu):
            raise ValueError("p,q out of range")
        if self.two_t != self.mu + self.p - self.q:
            raise ValueError("t != mu/2 + (p-q)/2")
        if self.y != -(2 * self.lam + self.mu) + 3 * (self.p + self.q):
            raise ValueError("hypercharge inconsistent")
        if abs(self.two_t0) > self.two_t or (self.two_t - self.two_t0) % 2:
            raise ValueError("t0 out of range")

    @staticmethod
    def from_key(lam, mu, key) -> "Su3Label":
        y, tt, tt0 = key
        psum3 = y + (2 * lam + mu)
        if psum3 % 3:
            raise ValueError("no such state")
        s = psum3 // 3
        p = (s + (tt - mu)) // 2
        q = s - p
        return Su3Label(lam, mu, p, q, tt, tt0, y)

    @property
    def key(self):
        return (self.y, self.two_t, self.two_t0)


def dim_su3(lam: int, mu: int) -> int:
    return (lam + 1) * (mu + 1) * (lam + mu + 2) // 2


def su3_state_keys(lam: int, mu: int):
    """(y, two_t, two_t0) keys of the SU(2)xU(1) basis of (lam, mu)."""
    out = []
    for p in range(lam + 1):
        for q in range(mu + 1):
            tt = mu + p - q
            y = -(2 * lam + mu) + 3 * (p + q)
            for tt0 in range(-tt, tt + 1, 2):
                out.append((y, tt, tt0))
    return out


def su3_decompose_multfree(lam1: int, lam2: int):
    """(lam1,0) x (lam2,0) -> [(lam3, mu3)], mu3 = 0..min(lam1,lam2)."""
    return [(lam1 + lam2 - 2 * mu3, mu3) for mu3 in range(min(lam1, lam2) + 1)]


# ---------------------------------------------------------------------------
# basis polynomials in Fock-Bargmann variables
# ---------------------------------------------------------------------------
def _v_poly(lam, mu, p, q, tt0, zoff, woff, nvars):
    """Generating-function extraction of V^{(lam,mu)}_{p,q,t0}, unnormalized.

    z triplet at zoff, w triplet at woff.  Convention carries the (-1)^q of
    the state normalization separately (see _v_state)."""
    tt = mu + p - q
    b = mu - q
    out = {}
    for i in range(p + 1):
        j = i + b - (tt + tt0) // 2
        if j < 0 or j > b or (p - i) + j != (tt - tt0) // 2:
            continue
        coef = Fraction(math.comb(p, i) * math.comb(b, j) * (-1) ** (b - j),
                        math.factorial(p) * math.factorial(lam - p)
                        * math.factorial(b) * math.factorial(q))
        e = [0] * nvars
        e[zoff] += i
        e[zoff + 1] += p - i
        e[zoff + 2] += lam - p
        e[woff] += j
        e[woff + 1] += b - j
        e[woff + 2] += q
        key = tuple(e)
        out[key] = out.get(key, Fraction(0)) + coef
    return out


def _cross_sub(poly, woff, aoff, boff, nvars_out):
    """Substitute w = a x b and project onto the first nvars_out variables."""
    def comp(k):
        i1, i2 = (k + 1) % 3, (k + 2) % 3
        e1 = [0] * nvars_out
        e1[aoff + i1] = 1
        e1[boff + i2] = 1
        e2 = [0] * nvars_out
        e2[aoff + i2] = 1
        e2[boff + i1] = 1
        return {tuple(e1): Fraction(1), tuple(e2): Fraction(-1)}

    W = [comp(k) for k in range(3)]
    out = {}
    for e, c in poly.items():
        base = list(e[:nvars_out])
        wexp = e[woff:woff + 3]
        term = {tuple(base): c}
        for k in range(3):
            if wexp[k]:
                term = poly_mul(term, poly_pow(W[k], wexp[k], nvars_out))
        for ee, cc in term.items():
            out[ee] = out.get(ee, Fraction(0)) + cc
    return {e: c for e, c in out.items() if c}


_NV = 12  # z1: 0-2, z3: 3-5, z5: 6-8, z6: 9-11


def _invariant(lam1, lam2, mu3):
    k1, k2, k3 = mu3, lam2 - mu3, lam1 - mu3
    det = {}
    for perm in itertools.permutations(range(3)):
        sg = 1 if perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1
        e = [0] * _NV
        e[0 + perm[0]] = 1
        e[3 + perm[1]] = 1
        e[6 + perm[2]] = 1
        det[tuple(e)] = Fraction(sg)

    def dot_with_cross56(off):
        out = {}
        for k in range(3):
            i1, i2 = (k + 1) % 3, (k + 2) % 3
            for (a, b, sgn) in ((i1, i2, 1), (i2, i1, -1)):
                e = [0] * _NV
                e[off + k] += 1
                e[6 + a] += 1
                e[9 + b] += 1
                out[tuple(e)] = out.get(tuple(e), Fraction(0)) + sgn
        return out

    h = poly_pow(det, k1, _NV)
    h = poly_mul(h, poly_pow(dot_with_cross56(3), k2, _NV))
    h = poly_mul(h, poly_pow(dot_with_cross56(0), k3, _NV))
    return h


def _mono_state(lam, key, zoff):
    """(lam,0) basis state: monomial and its squared norm."""
    y, tt, tt0 = key
    p = (y + 2 * lam) // 3
    a = (tt + tt0) // 2
    b = (tt - tt0) // 2
    c = lam - p
    e = [0] * _NV
    e[zoff] = a
    e[zoff + 1] = b
    e[zoff + 2] = c
    nsq = Fraction(math.factorial(a) * math.factorial(b) * math.factorial(c))
    return {tuple(e): Fraction(1)}, nsq


@lru_cache(maxsize=64)
def coupling_table(lam1: int, lam2: int, mu3: int):
    """Exact Wigner table for (lam1,0) x (lam2,0) -> (lam3, mu3).

    Returns {(key1, key2, key3): SqrtRational}; keys are (y, 2t, 2t0).
    Normalized so sum over (key1,key2) of w^2 = 1/dim(lam3,mu3) per key3;
    overall sign makes the highest-weight coefficient positive.
    """
    if lam1 < 0 or lam2 < 0 or not 0 <= mu3 <= min(lam1, lam2):
        raise ValueError("bad multiplicity-free coupling labels")
    lam3 = lam1 + lam2 - 2 * mu3
    h0 = _invariant(lam1, lam2, mu3)
    # conjugated third-state polynomials on (z5, z6)
    v3 = {}
    n3sq = {}
    for p3 in range(lam3 + 1):
        for q3 in range(mu3 + 1):
            tt3 = mu3 + p3 - q3
            y3 = -(2 * lam3 + mu3) + 3 * (p3 + q3)
            pc, qc = mu3 - q3, lam3 - p3
            for tt03 in range(-tt3, tt3 + 1, 2):
                raw = _v_poly(mu3, lam3, pc, qc, -tt03, 6, 12, 15)
                vc = _cross_sub(raw, 12, 6, 9, _NV)
                # conjugation phase (-1)^{y_c/2 - t0_c} with y_c=-y3,
                # t0_c=-t03, plus the state's own (-1)^{q} convention
                expo = (tt03 - y3) // 2 + qc
                if expo % 2:
                    vc = {e: -c for e, c in vc.items()}
                v3[(y3, tt3, tt03)] = vc
                n3sq[(y3, tt3, tt03)] = bargmann_dot(vc, vc)
    raw_vals = {}
    for key1 in su3_state_keys(lam1, 0):
        m1, n1sq = _mono_state(lam1, key1, 0)
        for key2 in su3_state_keys(lam2, 0):
            m2, n2sq = _mono_state(lam2, key2, 3)
            m12 = poly_mul(m1, m2)
            for key3, vc in v3.items():
                if key1[0] + key2[0] != key3[0] or key1[2] + key2[2] != key3[2]:
                    continue
                t = bargmann_dot(poly_mul(m12, vc), h0)
                if t:
                    raw_vals[(key1, key2, key3)] = (t, n1sq * n2sq * n3sq[key3])
    if not raw_vals:
        return {}
    # squared values and Schur normalization
    per3 = {}
    for (k1, k2, k3), (t, nsq) in raw_vals.items():
        per3[k3] = per3.get(k3, Fraction(0)) + t * t / nsq
    s0 = next(iter(per3.values()))
    if any(v != s0 for v in per3.values()):
        raise AssertionError("invariant tensor failed Schur constancy")
    dim3 = dim_su3(lam3, mu3)
    scale_sq = 1 / (s0 * dim3)   # wigner^2 = t^2/nsq * scale_sq
    # conjugation metric phase, making wigner = isoscalar * 3j exact
    table = {}
    for (k1, k2, k3), (t, nsq) in raw_vals.items():
        sign = 1 if t > 0 else -1
        sign *= (-1) ** ((k3[1] - k3[2]) // 2)
        table[(k1, k2, k3)] = SqrtRational.from_square(t * t / nsq * scale_sq, sign)
    # overall sign: highest key3, then highest (key1,key2), coefficient > 0
    top = max(table, key=lambda k: (k[2], k[0], k[1]))
    if table[top].coeff < 0:
        table = {k: -v for k, v in table.items()}
    return table


def su3_wigner_multfree(lam1, lam2, lam3, mu3, a1: Su3Label, a2: Su3Label,
                        a3: Su3Label):
    """(wigner, isoscalar) for <(lam1,0) a1; (lam2,0) a2 | (lam3,mu3) a3>-type
    3j-normalized coefficients; exact zeros on selection-rule failure."""
    if a1.mu != 0 or a2.mu != 0:
        raise ValueError("multiplicity-free route needs mu1 = mu2 = 0")
    if (lam3, mu3) not in su3_decompose_multfree(lam1, lam2):
        return SR_ZERO, SR_ZERO
    table = coupling_table(lam1, lam2, mu3)
    w = table.get((a1.key, a2.key, a3.key), SR_ZERO)
    iso = su3_isoscalar(lam1, lam2, lam3, mu3,
                        (a1.y, a1.two_t), (a2.y, a2.two_t), (a3.y, a3.two_t))
    return w, iso


def su3_isoscalar(lam1, lam2, lam3, mu3, chain1, chain2, chain3):
    """Isoscalar factor for the (y,t)-chains; wigner = isoscalar * 3j."""
    if (lam3, mu3) not in su3_decompose_multfree(lam1, lam2):
        return SR_ZERO
    table = coupling_table(lam1, lam2, mu3)
    y1, tt1 = chain1
    y2, tt2 = chain2
    y3, tt3 = chain3
    for tt01 in range(-tt1, tt1 + 1, 2):
        for tt02 in range(-tt2, tt2 + 1, 2):
            tt03 = tt01 + tt02
            if abs(tt03) > tt3:
                continue
            tj = threej(tt1, tt2, tt3, tt01, tt02, -tt03)
            if not tj:
                continue
            w = table.get(((y1, tt1, tt01), (y2, tt2, tt02), (y3, tt3, tt03)))
            if w is None:
                return SR_ZERO
            return w / tj
    return SR_ZERO


# ---------------------------------------------------------------------------
# generators on the product space (for verification / projection)
# ---------------------------------------------------------------------------
def product_states(lam1, lam2):
    return [(k1, k2) for k1 in su3_state_keys(lam1, 0)
            for k2 in su3_state_keys(lam2, 0)]


def _gell_mann_action(lam, key, i, j):
    """E_ij acting on the (lam,0) monomial state: list of (key', amplitude).

    States are monomials z1^a z2^b z3^c / sqrt(a! b! c!), E_ij = z_i d/d z_j.
    """
    y, tt, tt0 = key
    p = (y + 2 * lam) // 3
    abc = [(tt + tt0) // 2, (tt - tt0) // 2, lam - p]
    if abc[j] == 0:
        return []
    nb = list(abc)
    nb[j] -= 1
    nb[i] += 1
    amp = math.sqrt(nb[i] * abc[j])
    a, b, _ = nb
    return [((-(2 * lam) + 3 * (a + b), a + b, a - b), amp)]


def casimir_matrix(lam1, lam2):
    """Quadratic Casimir sum_{ij} E_ij E_ji on (lam1,0) x (lam2,0), numpy."""
    states = product_states(lam1, lam2)
    idx = {s: i for i, s in enumerate(states)}
    dim = len(states)

    def e_action(i, j, vec):
        out = np.zeros(dim)
        for s, a in enumerate(vec):
            if a == 0.0:
                continue
            k1, k2 = states[s]
            for nk1, amp in _gell_mann_action(lam1, k1, i, j):
                out[idx[(nk1, k2)]] += a * amp
            for nk2, amp in _gell_mann_action(lam2, k2, i, j):
                out[idx[(k1, nk2)]] += a * amp
        return out

    C = np.zeros((dim, dim))
    for col in range(dim):
        v = np.zeros(dim)
        v[col] = 1.0
        acc = np.zeros(dim)
        for i in range(3):
            for j in range(3):
                acc += e_action(i, j, e_action(j, i, v))
        C[:, col] = acc
    return C, states


def casimir_eigenvalue(lam, mu):
    """Eigenvalue of sum E_ij E_ji on (lam,mu) in the U(3) normalization used
    by casimir_matrix (boson realization with lam+mu boxes)."""
    # highest weight w = (lam+mu, mu, 0): <C> = sum w_i(w_i + 3 - 2i) + ... use
    # standard formula sum_i w_i(w_i + n + 1 - 2i) for sum_{ij} E_ij E_ji
    w = (lam + mu, mu, 0)
    return float(sum(wi * (wi + 3 + 1 - 2 * (i + 1)) for i, wi in enumerate(w)))


def coupled_vectors(lam1, lam2, mu3):
    """Float vectors of the coupled states in the product basis, one per key3,
    built from the exact wigner table (columns are orthonormal)."""
    lam3 = lam1 + lam2 - 2 * mu3
    table = coupling_table(lam1, lam2, mu3)
    states = product_states(lam1, lam2)
    idx = {s: i for i, s in enumerate(states)}
    keys3 = su3_state_keys(lam3, mu3)
    dim3 = dim_su3(lam3, mu3)
    vecs = {}
    for k3 in keys3:
        v = np.zeros(len(states))
        for (k1, k2, kk3), w in table.items():
            if kk3 != k3:
                continue
            # undo the conjugation metric so the vector is the plain coupled
            # state; the metric squares away in norms either way
            v[idx[(k1, k2)]] = float(w) * (-1) ** ((k3[1] - k3[2]) // 2)
        vecs[k3] = v * math.sqrt(dim3)
    return vecs, states


# ---------------------------------------------------------------------------
# SU(3) Euler factorization U3 = A2[B3 D3]A2
# ---------------------------------------------------------------------------
def su2_cayley_klein(psi, theta, phi):
    """Embedded SU(2) Cayley-Klein pair (a1, a2)."""
    a1 = math.cos(theta / 2) * np.exp(-1j * (psi + phi) / 2)
    a2 = math.sin(theta / 2) * np.exp(-1j * (psi - phi) / 2)
    return a1, a2


def su3_euler_matrix(a_params, nu3, beta3, b_params):
    """U3 = A2(a) [B3(nu3) D(beta3)] A2(b); unitary with unit determinant.

    a_params, b_params: SU(2) Euler triples (psi, theta, phi).
    """
    def embedded_su2(params):
        a1, a2 = su2_cayley_klein(*params)
        return np.array([[a1, a2, 0], [-np.conj(a2), np.conj(a1), 0],
                         [0, 0, 1.0]], dtype=complex)

    B = np.array([[1, 0, 0],
                  [0, math.cos(nu3 / 2), math.sin(nu3 / 2)],
                  [0, -math.sin(nu3 / 2), math.cos(nu3 / 2)]], dtype=complex)
    d3 = np.exp(1j * beta3)
    D = np.diag([d3, d3, np.conj(d3) ** 2])
    return embedded_su2(a_params) @ B @ D @ embedded_su2(b_params)
