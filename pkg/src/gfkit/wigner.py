"""Exact SU(2) recoupling coefficients.

All angular momenta travel as doubled integers (two_j), all values as
SqrtRational.  The 6j symbol has two independent routes: the definitional
magnetic sum over four 3j symbols, and coefficient extraction from the
generating function g(tau)^-2 with the triangle-delta normalization; the
two must agree exactly and the test suite enforces it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (SR_ZERO, SqrtRational, factorials, fact2, neg_one_pow,
                    sqrt_ratio_of_squares, triangle_ok, HalfInt)
from .polytools import TruncatedSeries


# ---------------------------------------------------------------------------
# labels
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class ThreeJLabel:
    two_j: tuple
    two_m: tuple

    def __post_init__(self):
        for tj, tm in zip(self.two_j, self.two_m):
            if (tj - tm) % 2:
                raise ValueError("two_m parity must match two_j")
            if abs(tm) > tj:
                raise ValueError("|m| <= j violated")


@dataclass(frozen=True)
class SixJLabel:
    two_j: tuple  # (j1, j2, j3, l1, l2, l3) doubled

    def __post_init__(self):
        tj1, tj2, tj3, tl1, tl2, tl3 = self.two_j
        for (a, b, c) in ((tj1, tj2, tj3), (tj1, tl2, tl3),
                          (tl1, tj2, tl3), (tl1, tl2, tj3)):
            if (a + b + c) % 2:
                raise ValueError("each 6j triad needs even doubled sum")


@dataclass(frozen=True)
class NineJLabel:
    two_j: tuple  # 3x3 nested tuple, doubled

    def __post_init__(self):
        rows = self.two_j
        for r in rows:
            if sum(r) % 2:
                raise ValueError("9j row triad parity")
        for c in range(3):
            if sum(rows[r][c] for r in range(3)) % 2:
                raise ValueError("9j column triad parity")


# ---------------------------------------------------------------------------
# 3j: Van der Waerden single sum (sign, square) core
# ---------------------------------------------------------------------------
@lru_cache(maxsize=200000)
def _threej_core(tj1, tj2, tj3, tm1, tm2, tm3):
    """(sign, square) of the 3j symbol, doubled arguments."""
    if tm1 + tm2 + tm3 != 0:
        return 0, Fraction(0)
    if not triangle_ok(tj1, tj2, tj3):
        return 0, Fraction(0)
    for tj, tm in ((tj1, tm1), (tj2, tm2), (tj3, tm3)):
        if abs(tm) > tj or (tj - tm) % 2:
            return 0, Fraction(0)
    kmin = max(0, (tj2 - tj3 - tm1) // 2, (tj1 - tj3 + tm2) // 2)
    kmax = min((tj1 + tj2 - tj3) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    s = Fraction(0)
    for k in range(kmin, kmax + 1):
        den = (factorials(k)
               * fact2(tj1 + tj2 - tj3 - 2 * k)
               * fact2(tj1 - tm1 - 2 * k)
               * fact2(tj2 + tm2 - 2 * k)
               * fact2(tj3 - tj2 + tm1 + 2 * k)
               * fact2(tj3 - tj1 - tm2 + 2 * k))
        s += Fraction((-1) ** k, den)
    if s == 0:
        return 0, Fraction(0)
    J = (tj1 + tj2 + tj3) // 2
    pref = Fraction(fact2(tj1 + tj2 - tj3) * fact2(tj1 - tj2 + tj3)
                    * fact2(-tj1 + tj2 + tj3), factorials(J + 1))
    pref *= (fact2(tj1 + tm1) * fact2(tj1 - tm1) * fact2(tj2 + tm2)
             * fact2(tj2 - tm2) * fact2(tj3 + tm3) * fact2(tj3 - tm3))
    phase = neg_one_pow((tj1 - tj2 - tm3) // 2)
    sign = phase if s > 0 else -phase
    return sign, pref * s * s


def threej(tj1, tj2, tj3, tm1, tm2, tm3) -> SqrtRational:
    """3j symbol with doubled integer arguments."""
    sign, sq = _threej_core(tj1, tj2, tj3, tm1, tm2, tm3)
    if sign == 0:
        return SR_ZERO
    return SqrtRational.from_square(sq, sign)


def wigner_3j(label: ThreeJLabel) -> SqrtRational:
    return threej(*label.two_j, *label.two_m)


def threej_second_route(tj1, tj2, tj3, tm1, tm2, tm3) -> SqrtRational:
    """Independent 3j evaluation: the defining factorial sum of the
    Clebsch-Gordan coefficient, summed in descending order with raw
    math.factorial, then converted through the 3j phase relation.

    Deliberately avoids the cached-factorial path of _threej_core.
    """
    if tm1 + tm2 + tm3 != 0 or not triangle_ok(tj1, tj2, tj3):
        return SR_ZERO
    for tj, tm in ((tj1, tm1), (tj2, tm2), (tj3, tm3)):
        if abs(tm) > tj or (tj - tm) % 2:
            return SR_ZERO
    tj12, tm12 = tj3, -tm3

    def f(two_n):
        return math.factorial(two_n // 2)

    kmin = max(0, (tj2 - tj12 - tm1) // 2, (tj1 + tm2 - tj12) // 2)
    kmax = min((tj1 + tj2 - tj12) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    s = Fraction(0)
    for k in range(kmax, kmin - 1, -1):
        den = (math.factorial(k) * f(tj1 + tj2 - tj12 - 2 * k)
               * f(tj1 - tm1 - 2 * k) * f(tj2 + tm2 - 2 * k)
               * f(tj12 - tj2 + tm1 + 2 * k) * f(tj12 - tj1 - tm2 + 2 * k))
        s += Fraction((-1) ** k, den)
    if s == 0:
        return SR_ZERO
    sq = Fraction((tj12 + 1) * f(tj12 + tj1 - tj2) * f(tj12 - tj1 + tj2)
                  * f(tj1 + tj2 - tj12), f(tj1 + tj2 + tj12 + 2))
    sq *= (f(tj12 + tm12) * f(tj12 - tm12) * f(tj1 - tm1) * f(tj1 + tm1)
           * f(tj2 - tm2) * f(tj2 + tm2))
    cg_sign = 1 if s > 0 else -1
    cg = SqrtRational.from_square(sq * s * s, cg_sign)
    # 3j = (-1)^{j1-j2-m3} / sqrt(2 j3 + 1) * <j1 m1 j2 m2 | j3 -m3>
    phase = neg_one_pow((tj1 - tj2 - tm3) // 2)
    return cg * SqrtRational.from_square(Fraction(1, tj3 + 1), phase)


def clebsch_gordan(j1, m1, j2, m2, j3, m3) -> SqrtRational:
    """<j1 m1, j2 m2 | j3 m3> in the Condon-Shortley convention."""
    tj1, tm1, tj2, tm2, tj3, tm3 = (
        x.two_j if isinstance(x, HalfInt) else 2 * x
        for x in (j1, m1, j2, m2, j3, m3))
    phase = neg_one_pow((tj1 - tj2 + tm3) // 2)
    val = threej(tj1, tj2, tj3, tm1, tm2, -tm3)
    return val * SqrtRational.from_square(Fraction(tj3 + 1), phase)


# ---------------------------------------------------------------------------
# exact sums of same-radicand square roots (ratio trick, no factorization)
# ---------------------------------------------------------------------------
def _sum_signed_sqrts(terms) -> SqrtRational:
    """Sum of s_i*sqrt(q_i) where all q_i share one squarefree part."""
    ref = None
    acc = Fraction(0)
    for sign, sq in terms:
        if sign == 0 or sq == 0:
            continue
        if ref is None:
            ref = sq
        acc += sign * sqrt_ratio_of_squares(sq, ref)
    if ref is None or acc == 0:
        return SR_ZERO
    return SqrtRational.from_square(ref) * acc


# ---------------------------------------------------------------------------
# 6j definitional oracle: full magnetic contraction of four 3j symbols
# ---------------------------------------------------------------------------
def _sixj_triads(two_j):
    tj1, tj2, tj3, tl1, tl2, tl3 = two_j
    return ((tj1, tj2, tj3), (tj1, tl2, tl3), (tl1, tj2, tl3), (tl1, tl2, tj3))


def sixj_oracle(tj1, tj2, tj3, tl1, tl2, tl3) -> SqrtRational:
    two_j = (tj1, tj2, tj3, tl1, tl2, tl3)
    if any((a + b + c) % 2 or not triangle_ok(a, b, c) for a, b, c in _sixj_triads(two_j)):
        return SR_ZERO
    terms = []
    for tm1 in range(-tj1, tj1 + 1, 2):
        for tm2 in range(-tj2, tj2 + 1, 2):
            tm3 = -tm1 - tm2
            if abs(tm3) > tj3:
                continue
            s0, q0 = _threej_core(tj1, tj2, tj3, tm1, tm2, tm3)
            if s0 == 0:
                continue
            for tmu1 in range(-tl1, tl1 + 1, 2):
                s1, q1 = None, None
                for tmu2 in range(-tl2, tl2 + 1, 2):
                    s1, q1 = _threej_core(tl1, tl2, tj3, tmu1, -tmu2, tm3)
                    if s1 == 0:
                        continue
                    tmu3 = tmu2 + tm1
                    if abs(tmu3) > tl3:
                        continue
                    s2, q2 = _threej_core(tl2, tl3, tj1, tmu2, -tmu3, tm1)
                    if s2 == 0:
                        continue
                    s3, q3 = _threej_core(tl3, tl1, tj2, tmu3, -tmu1, tm2)
                    if s3 == 0:
                        continue
                    ph = neg_one_pow((tl1 + tl2 + tl3 + tmu1 + tmu2 + tmu3) // 2)
                    terms.append((ph * s0 * s1 * s2 * s3, q0 * q1 * q2 * q3))
    return _sum_signed_sqrts(terms)


def sixj_fixed_m(tj1, tj2, tj3, tl1, tl2, tl3, tm1, tm2, tm3) -> SqrtRational:
    """6j from the mu-sum at one fixed magnetic configuration, divided by the
    accompanying 3j; used to assert the m-independence of the contraction."""
    s0, q0 = _threej_core(tj1, tj2, tj3, tm1, tm2, tm3)
    if s0 == 0:
        raise ValueError("chosen (m1,m2,m3) has vanishing 3j")
    terms = []
    for tmu1 in range(-tl1, tl1 + 1, 2):
        for tmu2 in range(-tl2, tl2 + 1, 2):
            s1, q1 = _threej_core(tl1, tl2, tj3, tmu1, -tmu2, tm3)
            if s1 == 0:
                continue
            tmu3 = tmu2 + tm1
            if abs(tmu3) > tl3:
                continue
            s2, q2 = _threej_core(tl2, tl3, tj1, tmu2, -tmu3, tm1)
            if s2 == 0:
                continue
            s3, q3 = _threej_core(tl3, tl1, tj2, tmu3, -tmu1, tm2)
            if s3 == 0:
                continue
            ph = neg_one_pow((tl1 + tl2 + tl3 + tmu1 + tmu2 + tmu3) // 2)
            terms.append((ph * s1 * s2 * s3, q1 * q2 * q3))
    inner = _sum_signed_sqrts(terms)
    return inner / SqrtRational.from_square(q0, s0)


def wigner_6j_oracle(label: SixJLabel) -> SqrtRational:
    return sixj_oracle(*label.two_j)


# ---------------------------------------------------------------------------
# 6j via the generating function g(tau)^-2
# ---------------------------------------------------------------------------
# tau variable order, tau_{i nu} for the four-triad coupling scheme
_TAU_VARS = ("01", "02", "03", "10", "20", "30", "12", "21", "13", "31", "23", "32")
_TAU_IDX = {v: i for i, v in enumerate(_TAU_VARS)}


def _tau_monomial(*names):
    e = [0] * 12
    for nm in names:
        e[_TAU_IDX[nm]] += 1
    return tuple(e)


# g = 1 + a0+a1+a2+a3 + b1+b2+b3.  Each b_i pairs tau_{0i} tau_{i0} with the
# opposite column's product, completing the symmetric pattern; only this
# completion reproduces the definitional magnetic sum (tests enforce equality
# on every label).
_G_TERMS = [
    _tau_monomial("10", "20", "30"),
    _tau_monomial("01", "31", "21"),
    _tau_monomial("32", "02", "12"),
    _tau_monomial("23", "13", "03"),
    _tau_monomial("01", "10", "23", "32"),
    _tau_monomial("02", "20", "13", "31"),
    _tau_monomial("03", "30", "12", "21"),
]

_series_cache = {"degree": -1, "series": None}


def _g_inverse_squared(max_degree: int) -> TruncatedSeries:
    if _series_cache["degree"] >= max_degree:
        return _series_cache["series"]
    one = tuple([0] * 12)
    g = {one: 1}
    for t in _G_TERMS:
        g[t] = g.get(t, 0) + 1
    gs = TruncatedSeries(g, 12, max_degree)
    inv = gs.mul(gs).inverse()
    _series_cache["degree"] = max_degree
    _series_cache["series"] = inv
    return inv


# pair labels: j_{01}=j1, j_{02}=j2, j_{03}=j3, j_{12}=l3, j_{13}=l2, j_{23}=l1
_PAIR_OF = {(0, 1): 0, (0, 2): 1, (0, 3): 2, (1, 2): 5, (1, 3): 4, (2, 3): 3}


def sixj_gf(tj1, tj2, tj3, tl1, tl2, tl3) -> SqrtRational:
    two_j = (tj1, tj2, tj3, tl1, tl2, tl3)
    triads = _sixj_triads(two_j)
    for t in triads:
        if sum(t) % 2 or not triangle_ok(*t):
            return SR_ZERO
    expo = [0] * 12
    for i in range(4):
        Ji2 = sum(triads[i])
        for nu in range(4):
            if nu == i:
                continue
            pair = (min(i, nu), max(i, nu))
            tk = Ji2 - 2 * two_j[_PAIR_OF[pair]]
            expo[_TAU_IDX[f"{i}{nu}"]] = tk // 2
    series = _g_inverse_squared(sum(expo))
    coeff = series.coefficient(expo)
    if coeff == 0:
        return SR_ZERO
    val = SqrtRational(Fraction(coeff))
    for (a, b, c) in triads:
        J = (a + b + c) // 2
        dsq = Fraction(fact2(a + b - c) * fact2(a - b + c) * fact2(-a + b + c),
                       factorials(J + 1))
        val = val * SqrtRational.from_square(dsq)
    return val


def wigner_6j_gf(label: SixJLabel) -> SqrtRational:
    return sixj_gf(*label.two_j)


# ---------------------------------------------------------------------------
# 9j: magnetic sum over six 3j symbols
# ---------------------------------------------------------------------------
def ninej(two_j_rows) -> SqrtRational:
    (a, b, c), (d, e, f), (g, h, i) = two_j_rows
    for tri in ((a, b, c), (d, e, f), (g, h, i), (a, d, g), (b, e, h), (c, f, i)):
        if sum(tri) % 2 or not triangle_ok(*tri):
            return SR_ZERO
    terms = []
    for ma in range(-a, a + 1, 2):
        for mb in range(-b, b + 1, 2):
            mc = -ma - mb
            if abs(mc) > c:
                continue
            s1, q1 = _threej_core(a, b, c, ma, mb, mc)
            if s1 == 0:
                continue
            for md in range(-d, d + 1, 2):
                for me in range(-e, e + 1, 2):
                    mf = -md - me
                    if abs(mf) > f:
                        continue
                    s2, q2 = _threej_core(d, e, f, md, me, mf)
                    if s2 == 0:
                        continue
                    mg = -ma - md
                    mh = -mb - me
                    mi = -mc - mf
                    if abs(mg) > g or abs(mh) > h or abs(mi) > i:
                        continue
                    s3, q3 = _threej_core(g, h, i, mg, mh, mi)
                    if s3 == 0:
                        continue
                    s4, q4 = _threej_core(a, d, g, ma, md, mg)
                    if s4 == 0:
                        continue
                    s5, q5 = _threej_core(b, e, h, mb, me, mh)
                    if s5 == 0:
                        continue
                    s6, q6 = _threej_core(c, f, i, mc, mf, mi)
                    if s6 == 0:
                        continue
                    terms.append((s1 * s2 * s3 * s4 * s5 * s6,
                                  q1 * q2 * q3 * q4 * q5 * q6))
    return _sum_signed_sqrts(terms)


def wigner_9j(label: NineJLabel) -> SqrtRational:
    return ninej(label.two_j)


# ---------------------------------------------------------------------------
# Regge symmetries: 72-element group on the magic square
# ---------------------------------------------------------------------------
_PERM3 = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
_PARITY = {(0, 1, 2): 0, (1, 2, 0): 0, (2, 0, 1): 0,
           (0, 2, 1): 1, (1, 0, 2): 1, (2, 1, 0): 1}


def _magic_square(two_j, two_m):
    tj1, tj2, tj3 = two_j
    tm1, tm2, tm3 = two_m
    return ((( -tj1 + tj2 + tj3) // 2, (tj1 - tj2 + tj3) // 2, (tj1 + tj2 - tj3) // 2),
            ((tj1 - tm1) // 2, (tj2 - tm2) // 2, (tj3 - tm3) // 2),
            ((tj1 + tm1) // 2, (tj2 + tm2) // 2, (tj3 + tm3) // 2))


def _label_from_square(sq):
    two_j = tuple(sq[1][c] + sq[2][c] for c in range(3))
    two_m = tuple(sq[2][c] - sq[1][c] for c in range(3))
    return ThreeJLabel(two_j, two_m)


def regge_orbit(label: ThreeJLabel):
    """Closure under the 72-element Regge group, as {(label, phase)}.

    phase is (+1/-1): the 3j of the member equals phase times the seed's.
    Odd row or column permutations contribute (-1)^J; transposition none.
    """
    two_j, two_m = label.two_j, label.two_m
    if not triangle_ok(*two_j):
        raise ValueError("regge_orbit needs a triangle-valid label")
    if sum(two_j) % 2:
        raise ValueError("J must be integral")
    J = sum(two_j) // 2
    sq0 = _magic_square(two_j, two_m)
    seen = {}
    for rp in _PERM3:
        for cp in _PERM3:
            for transpose in (False, True):
                sq = sq0
                if transpose:
                    sq = tuple(tuple(sq[r][c] for r in range(3)) for c in range(3))
                sq = tuple(sq[r] for r in rp)
                sq = tuple(tuple(row[c] for c in cp) for row in sq)
                phase = neg_one_pow(J * (_PARITY[rp] + _PARITY[cp]))
                lab = _label_from_square(sq)
                key = (lab.two_j, lab.two_m)
                if key not in seen:
                    seen[key] = phase
    return {(ThreeJLabel(*k), v) for k, v in seen.items()}


# ---------------------------------------------------------------------------
# Gaunt coefficient
# ---------------------------------------------------------------------------
def gaunt(l1, m1, l2, m2, l3, m3) -> float:
    """Integral of Y_{l1 m1} Y_{l2 m2} Y_{l3 m3} over the sphere."""
    if (l1 + l2 + l3) % 2 or m1 + m2 + m3 != 0:
        return 0.0
    a = threej(2 * l1, 2 * l2, 2 * l3, 0, 0, 0)
    b = threej(2 * l1, 2 * l2, 2 * l3, 2 * m1, 2 * m2, 2 * m3)
    if not a or not b:
        return 0.0
    pref = math.sqrt((2 * l1 + 1) * (2 * l2 + 1) * (2 * l3 + 1) / (4 * math.pi))
    return pref * float(a) * float(b)
