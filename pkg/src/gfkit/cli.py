"""gfkit command line: every module exposed as subcommands with
machine-readable output (json, csv, text).

Half-integers are always passed doubled (--two-j / --two-m); randomized
verification subcommands accept --seed.  Exit codes: 0 ok, 1 domain error,
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exact, hurwitz, manybody, oscillator, special, su3, unitary, wigner


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class ResultEnvelope:
    status: str = "ok"
    value_exact: str | None = None
    value_float: float | None = None
    table: dict | None = None
    meta: str = ""
    message: str | None = None

    def to_dict(self):
        out = {"status": self.status}
        if self.status == "ok":
            out["meta"] = self.meta
            if self.value_exact is not None:
                out["value_exact"] = self.value_exact
            if self.value_float is not None:
                out["value_float"] = self.value_float
            if self.table is not None:
                out["table"] = self.table
        else:
            out["message"] = self.message or ""
        return out


def render(env: ResultEnvelope, fmt: str) -> bytes:
    d = env.to_dict()
    if fmt == "json":
        return (json.dumps(d, sort_keys=True, default=str) + "\n").encode()
    if fmt == "csv":
        lines = []
        if env.status != "ok":
            lines.append("status,message")
            lines.append(f"error,{env.message}")
        elif env.table is not None:
            lines.append(",".join(env.table["columns"]))
            for row in env.table["rows"]:
                lines.append(",".join(str(x) for x in row))
        else:
            cols, vals = [], []
            for k in ("value_exact", "value_float"):
                if d.get(k) is not None:
                    cols.append(k)
                    vals.append(str(d[k]))
            lines.append(",".join(cols))
            lines.append(",".join(vals))
        return ("\n".join(lines) + "\n").encode()
    if fmt == "text":
        lines = [f"{k}: {v}" for k, v in sorted(d.items()) if k != "table"]
        if env.table is not None:
            lines.append(" | ".join(env.table["columns"]))
            for row in env.table["rows"]:
                lines.append(" | ".join(str(x) for x in row))
        return ("\n".join(lines) + "\n").encode()
    raise UsageError(f"unknown format {fmt}")


def _sr_env(value, meta) -> ResultEnvelope:
    return ResultEnvelope(value_exact=str(value), value_float=float(value),
                          meta=meta)


def _build_parser() -> _Parser:
    p = _Parser(prog="gfkit", description=__doc__)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sub = p.add_subparsers(dest="group", required=True)

    def add(group, name, **kw):
        q = group.add_parser(name, **kw)
        return q

    # --- wigner ------------------------------------------------------------
    wg = add(sub, "wigner").add_subparsers(dest="op", required=True)
    q = wg.add_parser("3j")
    q.add_argument("--two-j", nargs=3, type=int, required=True)
    q.add_argument("--two-m", nargs=3, type=int, required=True)
    q = wg.add_parser("cg")
    q.add_argument("--two-j", nargs=3, type=int, required=True)
    q.add_argument("--two-m", nargs=3, type=int, required=True)
    q = wg.add_parser("6j")
    q.add_argument("--two-j", nargs=6, type=int, required=True)
    q.add_argument("--route", choices=("gf", "oracle"), default="gf")
    q = wg.add_parser("9j")
    q.add_argument("--two-j", nargs=9, type=int, required=True)
    q = wg.add_parser("regge")
    q.add_argument("--two-j", nargs=3, type=int, required=True)
    q.add_argument("--two-m", nargs=3, type=int, required=True)
    q = wg.add_parser("gaunt")
    q.add_argument("--l", nargs=3, type=int, required=True)
    q.add_argument("--m", nargs=3, type=int, required=True)

    # --- su3 ----------------------------------------------------------------
    sg = add(sub, "su3").add_subparsers(dest="op", required=True)
    q = sg.add_parser("decompose")
    q.add_argument("--lam1", type=int, required=True)
    q.add_argument("--lam2", type=int, required=True)
    q = sg.add_parser("wigner")
    for nm in ("lam1", "lam2", "lam3", "mu3"):
        q.add_argument(f"--{nm}", type=int, required=True)
    q.add_argument("--a1", nargs=3, type=int, required=True,
                   metavar=("Y", "TWO_T", "TWO_T0"))
    q.add_argument("--a2", nargs=3, type=int, required=True)
    q.add_argument("--a3", nargs=3, type=int, required=True)
    q = sg.add_parser("isoscalar")
    for nm in ("lam1", "lam2", "lam3", "mu3"):
        q.add_argument(f"--{nm}", type=int, required=True)
    q.add_argument("--chain1", nargs=2, type=int, required=True, metavar=("Y", "TWO_T"))
    q.add_argument("--chain2", nargs=2, type=int, required=True)
    q.add_argument("--chain3", nargs=2, type=int, required=True)
    q = sg.add_parser("euler")
    q.add_argument("--a", nargs=3, type=float, required=True, metavar=("PSI", "THETA", "PHI"))
    q.add_argument("--nu3", type=float, required=True)
    q.add_argument("--beta3", type=float, required=True)
    q.add_argument("--b", nargs=3, type=float, required=True)

    # --- gelfand -------------------------------------------------------------
    gg = add(sub, "gelfand").add_subparsers(dest="op", required=True)
    q = gg.add_parser("dim")
    q.add_argument("--h", nargs="+", type=int, required=True)
    q = gg.add_parser("enumerate")
    q.add_argument("--h", nargs="+", type=int, required=True)
    q = gg.add_parser("weight")
    q.add_argument("--pattern", type=str, required=True)
    q = gg.add_parser("poly")
    q.add_argument("--pattern", type=str, required=True)

    # --- hurwitz --------------------------------------------------------------
    hg = add(sub, "hurwitz").add_subparsers(dest="op", required=True)
    q = hg.add_parser("matrix")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--u", nargs="+", type=float, required=True)
    q = hg.add_parser("ks")
    q.add_argument("--u", nargs=4, type=float, required=True)
    q = hg.add_parser("cayley")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--u", nargs="+", type=float, required=True)
    q = hg.add_parser("cross")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--a", nargs="+", type=float, required=True)
    q.add_argument("--b", nargs="+", type=float, required=True)
    q = hg.add_parser("check")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)

    # --- hydrogen ---------------------------------------------------------------
    yg = add(sub, "hydrogen").add_subparsers(dest="op", required=True)
    for nm in ("position", "momentum", "verify"):
        q = yg.add_parser(nm)
        q.add_argument("--dim", type=int, default=3)
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--l", type=int, required=True)
        q.add_argument("--points", type=int, default=50)
        q.add_argument("--rmax", type=float, default=None)
        if nm == "verify":
            q.add_argument("--seed", type=int, default=0)

    # --- oscillator ---------------------------------------------------------------
    og = add(sub, "oscillator").add_subparsers(dest="op", required=True)
    q = og.add_parser("wf")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--qmax", type=float, default=5.0)
    q.add_argument("--points", type=int, default=41)
    q = og.add_parser("genfunc")
    q.add_argument("--z", nargs=2, type=float, required=True, metavar=("RE", "IM"))
    q.add_argument("--q", type=float, required=True)
    q = og.add_parser("propagator")
    q.add_argument("--beta", type=float, required=True)
    q.add_argument("--xmax", type=float, default=2.0)
    q.add_argument("--points", type=int, default=9)
    q = og.add_parser("magnetic")
    q.add_argument("--beta", type=float, required=True)
    q.add_argument("--omega-c", type=float, default=0.0)
    q.add_argument("--r1", nargs=2, type=float, required=True)
    q.add_argument("--r2", nargs=2, type=float, required=True)

    # --- manybody ---------------------------------------------------------------
    mg = add(sub, "manybody").add_subparsers(dest="op", required=True)
    q = mg.add_parser("cramer")
    q.add_argument("--n", type=int, default=4)
    q.add_argument("--s", type=int, default=2)
    q.add_argument("--seed", type=int, default=0)
    for nm in ("overlap", "lowdin", "thouless"):
        q = mg.add_parser(nm)
        q.add_argument("--m", type=int, default=4)
        q.add_argument("--n-occ", type=int, default=2)
        q.add_argument("--seed", type=int, default=0)
    q = mg.add_parser("lipkin")
    q.add_argument("--n-particles", type=int, required=True)
    q.add_argument("--e", type=float, default=1.0)
    q.add_argument("--v", type=float, default=1.0)
    q = mg.add_parser("boson-coeffs")
    q.add_argument("--k-max", type=int, default=4)
    return p


def _fmt_float(x) -> str:
    return repr(float(x))


def _random_rational_matrix(rng, n, m):
    return tuple(tuple(Fraction(int(rng.integers(-9, 10))) for _ in range(m))
                 for _ in range(n))


def _dispatch(args) -> ResultEnvelope:
    g, op = args.group, getattr(args, "op", None)
    if g == "wigner":
        if op == "3j":
            val = wigner.threej(*args.two_j, *args.two_m)
            return _sr_env(val, "van der Waerden single-sum 3j")
        if op == "cg":
            tj, tm = args.two_j, args.two_m
            val = wigner.clebsch_gordan(*(exact.HalfInt(x) for pair in
                                          zip(tj, tm) for x in pair))
            return _sr_env(val, "Clebsch-Gordan from 3j, Condon-Shortley")
        if op == "6j":
            fn = wigner.sixj_gf if args.route == "gf" else wigner.sixj_oracle
            val = fn(*args.two_j)
            return _sr_env(val, f"6j via {args.route}")
        if op == "9j":
            rows = tuple(tuple(args.two_j[3 * r:3 * r + 3]) for r in range(3))
            return _sr_env(wigner.ninej(rows), "9j magnetic sum")
        if op == "regge":
            orbit = wigner.regge_orbit(wigner.ThreeJLabel(tuple(args.two_j),
                                                          tuple(args.two_m)))
            rows = sorted([list(l.two_j) + list(l.two_m) + [ph]
                           for l, ph in orbit])
            return ResultEnvelope(
                value_float=float(len(rows)),
                table={"columns": ["tj1", "tj2", "tj3", "tm1", "tm2", "tm3", "phase"],
                       "rows": rows},
                meta="Regge magic-square orbit")
        if op == "gaunt":
            val = wigner.gaunt(args.l[0], args.m[0], args.l[1], args.m[1],
                               args.l[2], args.m[2])
            return ResultEnvelope(value_float=val, meta="Gaunt triple-Y integral")
    if g == "su3":
        if op == "decompose":
            rows = [[lam3, mu3, su3.dim_su3(lam3, mu3)]
                    for lam3, mu3 in su3.su3_decompose_multfree(args.lam1, args.lam2)]
            return ResultEnvelope(table={"columns": ["lam3", "mu3", "dim"],
                                         "rows": rows},
                                  value_float=float(len(rows)),
                                  meta="multiplicity-free decomposition")
        if op == "wigner":
            def lab(lam, mu, a):
                return su3.Su3Label.from_key(lam, mu, tuple(a))
            w, iso = su3.su3_wigner_multfree(
                args.lam1, args.lam2, args.lam3, args.mu3,
                lab(args.lam1, 0, args.a1), lab(args.lam2, 0, args.a2),
                lab(args.lam3, args.mu3, args.a3))
            env = _sr_env(w, "SU(3) invariant-contraction Wigner")
            env.table = {"columns": ["isoscalar_exact", "isoscalar_float"],
                         "rows": [[str(iso), _fmt_float(iso)]]}
            return env
        if op == "isoscalar":
            iso = su3.su3_isoscalar(args.lam1, args.lam2, args.lam3, args.mu3,
                                    tuple(args.chain1), tuple(args.chain2),
                                    tuple(args.chain3))
            return _sr_env(iso, "SU(3) isoscalar factor")
        if op == "euler":
            U = su3.su3_euler_matrix(tuple(args.a), args.nu3, args.beta3,
                                     tuple(args.b))
            rows = [[i, j, _fmt_float(U[i, j].real), _fmt_float(U[i, j].imag)]
                    for i in range(3) for j in range(3)]
            unit = float(np.linalg.norm(U.conj().T @ U - np.eye(3)))
            return ResultEnvelope(table={"columns": ["row", "col", "re", "im"],
                                         "rows": rows},
                                  value_float=unit,
                                  meta="SU(3) Euler factorization; value is ||U^dag U - 1||")
    if g == "gelfand":
        if op == "dim":
            return ResultEnvelope(
                value_float=float(unitary.weyl_dimension(unitary.IrrepLabel(tuple(args.h)))),
                meta="Weyl dimension formula")
        if op == "enumerate":
            pats = unitary.gelfand_enumerate(unitary.IrrepLabel(tuple(args.h)))
            rows = [[p.to_text(), " ".join(map(str, unitary.pattern_weight(p)))]
                    for p in pats]
            return ResultEnvelope(table={"columns": ["pattern", "weight"],
                                         "rows": rows},
                                  value_float=float(len(pats)),
                                  meta="betweenness enumeration")
        if op == "weight":
            pat = unitary.GelfandPattern.from_text(args.pattern)
            w = unitary.pattern_weight(pat)
            return ResultEnvelope(table={"columns": [f"w{i+1}" for i in range(len(w))],
                                         "rows": [list(w)]},
                                  value_float=float(sum(w)),
                                  meta="diagonal generator eigenvalues")
        if op == "poly":
            pat = unitary.GelfandPattern.from_text(args.pattern)
            terms = unitary.boson_polynomial(pat)
            rows = [[str(c), " ".join(f"D{''.join(map(str, m))}^{e}"
                                      for m, e in sorted(expo.items()))]
                    for c, expo in terms]
            return ResultEnvelope(table={"columns": ["coefficient", "monomial"],
                                         "rows": rows},
                                  value_float=float(len(rows)),
                                  meta="boson polynomial (unnormalized)")
    if g == "hurwitz":
        if op == "matrix":
            H = hurwitz.hurwitz_matrix(args.n, args.u)
            rows = [[i] + [_fmt_float(v) for v in H[i]] for i in range(args.n)]
            return ResultEnvelope(table={"columns": ["row"] + [f"c{j}" for j in range(args.n)],
                                         "rows": rows},
                                  value_float=float(np.linalg.norm(H.T @ H - (np.asarray(args.u) ** 2).sum() * np.eye(args.n))),
                                  meta="Hurwitz matrix; value is ||H^T H - |u|^2 I||")
        if op == "ks":
            x = hurwitz.ks_transform(args.u)
            return ResultEnvelope(table={"columns": ["x", "y", "z"],
                                         "rows": [[_fmt_float(v) for v in x]]},
                                  value_float=math.sqrt(sum(float(v) ** 2 for v in x)),
                                  meta="KS transform; value is |x| = |u|^2")
        if op == "cayley":
            O = hurwitz.cayley_rotation(args.n, args.u)
            rows = [[i] + [_fmt_float(v) for v in O[i]] for i in range(args.n)]
            r2 = float(np.dot(args.u, args.u))
            res = float(np.linalg.norm(O.T @ O - r2 * r2 * np.eye(args.n)))
            return ResultEnvelope(table={"columns": ["row"] + [f"c{j}" for j in range(args.n)],
                                         "rows": rows},
                                  value_float=res,
                                  meta="Cayley rotation; value is orthogonality residual")
        if op == "cross":
            v = hurwitz.cross_product(args.n, args.a, args.b)
            return ResultEnvelope(table={"columns": [f"x{i+1}" for i in range(args.n)],
                                         "rows": [[_fmt_float(t) for t in v]]},
                                  value_float=float(np.linalg.norm(v)),
                                  meta="cross product; value is |a x b|")
        if op == "check":
            rng = np.random.default_rng(args.seed)
            u = rng.normal(size=args.n)
            H = hurwitz.hurwitz_matrix(args.n, u)
            res = float(np.linalg.norm(H.T @ H - float(u @ u) * np.eye(args.n)))
            return ResultEnvelope(value_float=res,
                                  meta="||H^T H - |u|^2 I|| at a seeded random point")
    if g == "hydrogen":
        N, n, l = args.dim, args.n, args.l
        if op == "position":
            rmax = args.rmax or 8.0 * n * n
            r = np.linspace(1e-6, rmax, args.points)
            vals = special.hydrogen_radial(N, n, l, r)
            rows = [[_fmt_float(r[i]), _fmt_float(vals[i]), "0.0",
                     _fmt_float(vals[i] ** 2)] for i in range(len(r))]
            return ResultEnvelope(table={"columns": ["r", "real", "imag", "abs2"],
                                         "rows": rows},
                                  value_float=float(np.max(np.abs(vals))),
                                  meta="radial wavefunction samples")
        if op == "momentum":
            d = 1.0 / (n + (N - 3) / 2.0)
            pmax = args.rmax or 6.0 * d * 5
            p = np.linspace(1e-4, pmax, args.points)
            vals = special.hydrogen_momentum_radial(N, n, l, p)
            rows = [[_fmt_float(p[i]), _fmt_float(vals[i]), "0.0",
                     _fmt_float(vals[i] ** 2)] for i in range(len(p))]
            return ResultEnvelope(table={"columns": ["p", "real", "imag", "abs2"],
                                         "rows": rows},
                                  value_float=float(np.max(np.abs(vals))),
                                  meta="momentum wavefunction samples (Gegenbauer form)")
        if op == "verify":
            d = 1.0 / (n + (N - 3) / 2.0)
            p = np.linspace(0.05 * d, 5.0 * d, args.points)
            closed = np.abs(special.hydrogen_momentum_radial(N, n, l, p))
            oracle = special.fourier_momentum_oracle(N, n, l, p)
            scale = np.max(oracle)
            rel = float(np.max(np.abs(closed - oracle)
                               / np.maximum(oracle, 1e-3 * scale)))
            return ResultEnvelope(value_float=rel,
                                  meta="max relative gap closed-form vs Hankel oracle")
    if g == "oscillator":
        if op == "wf":
            q = np.linspace(-args.qmax, args.qmax, args.points)
            vals = oscillator.ho_wavefunction(args.n, q)
            rows = [[_fmt_float(q[i]), _fmt_float(vals[i]), "0.0",
                     _fmt_float(vals[i] ** 2)] for i in range(len(q))]
            return ResultEnvelope(table={"columns": ["q", "real", "imag", "abs2"],
                                         "rows": rows},
                                  value_float=float(np.max(np.abs(vals))),
                                  meta="oscillator eigenfunction samples")
        if op == "genfunc":
            z = complex(args.z[0], args.z[1])
            val = complex(oscillator.ho_generating_function(z, args.q))
            series = sum((z ** k / math.sqrt(math.factorial(k)))
                         * float(oscillator.ho_wavefunction(k, args.q))
                         for k in range(61))
            return ResultEnvelope(value_float=abs(val - series),
                                  table={"columns": ["re", "im"],
                                         "rows": [[_fmt_float(val.real), _fmt_float(val.imag)]]},
                                  meta="closed generating function; value is |closed - 60-term sum|")
        if op == "propagator":
            params = oscillator.OscillatorParams()
            xs = np.linspace(-args.xmax, args.xmax, args.points)
            rows = []
            for x in xs:
                for xp in xs:
                    k = oscillator.ho_propagator(params, x, xp, -1j * args.beta)
                    rows.append([_fmt_float(x), _fmt_float(xp),
                                 _fmt_float(k.real), _fmt_float(k.imag)])
            return ResultEnvelope(table={"columns": ["x", "xp", "re_k", "im_k"],
                                         "rows": rows},
                                  value_float=float(len(rows)),
                                  meta="imaginary-time oscillator kernel samples")
        if op == "magnetic":
            params = oscillator.OscillatorParams()
            k = oscillator.magnetic_propagator(params, args.omega_c,
                                               tuple(args.r1), tuple(args.r2),
                                               -1j * args.beta)
            return ResultEnvelope(table={"columns": ["re_k", "im_k"],
                                         "rows": [[_fmt_float(k.real), _fmt_float(k.imag)]]},
                                  value_float=abs(k),
                                  meta="magnetic-oscillator kernel")
    if g == "manybody":
        if op == "cramer":
            rng = np.random.default_rng(args.seed)
            A = _random_rational_matrix(rng, args.n, args.n)
            B = _random_rational_matrix(rng, args.n, args.s)
            pos = tuple(sorted(rng.permutation(args.n)[:args.s].tolist()))
            q = manybody.SubstitutionQuery(A, B, pos)
            v1 = manybody.generalized_cramer(q)
            v2 = manybody.substituted_determinant_direct(q)
            return ResultEnvelope(value_exact=f"{v1.numerator}/{v1.denominator}",
                                  value_float=float(v1 - v2),
                                  meta="generalized Cramer; value_float is (cramer - direct)")
        if op in ("overlap", "lowdin", "thouless"):
            rng = np.random.default_rng(args.seed)
            R = np.eye(args.m) + 0.3 * (rng.normal(size=(args.m, args.m))
                                        + 1j * rng.normal(size=(args.m, args.m)))
            sysm = manybody.SlaterSystem(args.m, args.n_occ,
                                         tuple(map(tuple, R.tolist())))
            if op == "overlap":
                a = manybody.slater_overlap(sysm)
                b = manybody.slater_overlap_fock(sysm)
                return ResultEnvelope(value_float=abs(a - b),
                                      table={"columns": ["re", "im"],
                                             "rows": [[_fmt_float(a.real), _fmt_float(a.imag)]]},
                                      meta="overlap determinant; value is |det - Fock oracle|")
            if op == "lowdin":
                T = rng.normal(size=(args.m, args.m)) + 1j * rng.normal(size=(args.m, args.m))
                a = manybody.lowdin_matrix_element(sysm, T)
                b = manybody.lowdin_matrix_element_fock(sysm, T)
                return ResultEnvelope(value_float=abs(a - b),
                                      table={"columns": ["re", "im"],
                                             "rows": [[_fmt_float(a.real), _fmt_float(a.imag)]]},
                                      meta="one-body Lowdin element; value is |formula - oracle|")
            res = manybody.thouless_residual(sysm)
            return ResultEnvelope(value_float=res,
                                  meta="Thouless reconstruction residual")
        if op == "lipkin":
            model = manybody.LipkinModel(args.n_particles, args.e, args.v)
            ev = manybody.lipkin_spectrum(model)
            rows = [[i, _fmt_float(ev[i])] for i in range(len(ev))]
            return ResultEnvelope(table={"columns": ["index", "energy"], "rows": rows},
                                  value_float=float(ev[0]),
                                  meta="Lipkin exact spectrum")
        if op == "boson-coeffs":
            al = manybody.boson_expansion_coeffs(args.k_max)
            rows = [[k, _fmt_float(al[k])] for k in range(len(al))]
            return ResultEnvelope(table={"columns": ["k", "alpha"], "rows": rows},
                                  value_float=al[-1],
                                  meta="quasi-boson expansion coefficients")
    raise UsageError(f"unhandled command {g} {op}")


def run_command(argv) -> tuple[ResultEnvelope, int]:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return ResultEnvelope(status="error", message=f"usage: {exc}"), 2
    try:
        env = _dispatch(args)
        return env, 0
    except UsageError as exc:
        return ResultEnvelope(status="error", message=f"usage: {exc}"), 2
    except (ValueError, ArithmeticError, KeyError) as exc:
        return ResultEnvelope(status="error", message=str(exc)), 1


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json"
    if "--format" in argv:
        i = argv.index("--format")
        if i + 1 < len(argv):
            fmt = argv[i + 1]
            argv = argv[:i] + argv[i + 2:]
    env, code = run_command(argv)
    try:
        sys.stdout.buffer.write(render(env, fmt))
    except UsageError as exc:
        sys.stdout.buffer.write(render(ResultEnvelope(status="error",
                                                      message=str(exc)), "json"))
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
