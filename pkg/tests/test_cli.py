import json

import pytest

from gfkit.cli import ResultEnvelope, render, run_command
from gfkit.exact import parse_sqrt_rational
from gfkit.wigner import threej


def run(argv):
    env, code = run_command(argv)
    return env, code


def test_wigner_3j_example():
    env, code = run(["wigner", "3j", "--two-j", "2", "2", "2",
                     "--two-m", "2", "-2", "0"])
    assert code == 0
    assert env.value_exact == "1/1*sqrt(1/6)"
    assert env.value_float == pytest.approx(0.408248, abs=1e-6)
    # exact string reparses to the library value
    assert parse_sqrt_rational(env.value_exact) == threej(2, 2, 2, 2, -2, 0)


def test_gelfand_dim_example():
    env, code = run(["gelfand", "dim", "--h", "2", "1", "0"])
    assert code == 0 and env.value_float == 8.0


def test_usage_error():
    env, code = run(["frobnicate"])
    assert code == 2 and env.status == "error"
    env, code = run(["wigner", "3j", "--two-j", "2", "2"])
    assert code == 2


def test_domain_error_exit_one():
    env, code = run(["gelfand", "weight", "--pattern", "2 0 / 3"])
    assert code == 1 and env.status == "error"


def test_json_rendering_sorted():
    env, code = run(["wigner", "6j", "--two-j", "2", "2", "2", "2", "2", "2"])
    data = json.loads(render(env, "json"))
    assert list(data.keys()) == sorted(data.keys())
    assert data["value_exact"] == "1/6"


def test_csv_rendering():
    env, code = run(["manybody", "lipkin", "--n-particles", "2",
                     "--e", "1", "--v", "0"])
    out = render(env, "csv").decode()
    lines = out.splitlines()
    assert lines[0] == "index,energy"
    assert len(lines) == 4
    assert out.endswith("\n")


def test_text_rendering():
    env, code = run(["hurwitz", "ks", "--u", "1", "0", "0", "0"])
    out = render(env, "text").decode()
    assert "status: ok" in out


def test_error_envelope_render():
    env = ResultEnvelope(status="error", message="boom")
    data = json.loads(render(env, "json"))
    assert data == {"status": "error", "message": "boom"}


CORPUS = [
    ["wigner", "3j", "--two-j", "2", "2", "2", "--two-m", "2", "-2", "0"],
    ["wigner", "3j", "--two-j", "2", "2", "4", "--two-m", "0", "0", "0"],
    ["wigner", "cg", "--two-j", "1", "1", "0", "--two-m", "1", "-1", "0"],
    ["wigner", "6j", "--two-j", "2", "2", "2", "2", "2", "2"],
    ["wigner", "6j", "--two-j", "0", "2", "2", "2", "2", "2", "--route", "oracle"],
    ["wigner", "9j", "--two-j", "1", "1", "2", "1", "1", "2", "2", "2", "0"],
    ["wigner", "regge", "--two-j", "2", "2", "2", "--two-m", "2", "-2", "0"],
    ["wigner", "gaunt", "--l", "1", "1", "2", "--m", "0", "0", "0"],
    ["su3", "decompose", "--lam1", "2", "--lam2", "1"],
    ["su3", "isoscalar", "--lam1", "1", "--lam2", "1", "--lam3", "0", "--mu3", "1",
     "--chain1", "-2", "0", "--chain2", "1", "1", "--chain3", "-1", "1"],
    ["su3", "euler", "--a", "0.3", "1.1", "-0.4", "--nu3", "0.7",
     "--beta3", "0.5", "--b", "1.0", "0.2", "2.2"],
    ["gelfand", "dim", "--h", "2", "1", "0"],
    ["gelfand", "enumerate", "--h", "1", "0", "0"],
    ["gelfand", "weight", "--pattern", "2 1 0 / 2 1 / 1"],
    ["gelfand", "poly", "--pattern", "2 1 0 / 2 0 / 1"],
    ["hurwitz", "matrix", "--n", "4", "--u", "1", "2", "3", "4"],
    ["hurwitz", "ks", "--u", "1", "0", "1", "0"],
    ["hurwitz", "cayley", "--n", "3", "--u", "1", "0.5", "-0.25", "2"],
    ["hurwitz", "cross", "--n", "7", "--a", "1", "0", "0", "0", "0", "0", "0",
     "--b", "0", "1", "0", "0", "0", "0", "0"],
    ["hurwitz", "check", "--n", "8", "--seed", "3"],
    ["hydrogen", "position", "--dim", "3", "--n", "2", "--l", "1", "--points", "5"],
    ["hydrogen", "momentum", "--dim", "4", "--n", "2", "--l", "0", "--points", "5"],
    ["oscillator", "wf", "--n", "3", "--points", "7"],
    ["oscillator", "genfunc", "--z", "0.5", "0.2", "--q", "1.0"],
    ["oscillator", "propagator", "--beta", "1.0", "--points", "3"],
    ["oscillator", "magnetic", "--beta", "0.7", "--omega-c", "0.4",
     "--r1", "0.3", "-0.4", "--r2", "-0.2", "0.5"],
    ["manybody", "cramer", "--n", "4", "--s", "2", "--seed", "7"],
    ["manybody", "overlap", "--m", "4", "--n-occ", "2", "--seed", "1"],
    ["manybody", "lowdin", "--m", "4", "--n-occ", "2", "--seed", "2"],
    ["manybody", "thouless", "--m", "5", "--n-occ", "2", "--seed", "3"],
    ["manybody", "lipkin", "--n-particles", "4", "--e", "1.0", "--v", "0.3"],
    ["manybody", "boson-coeffs", "--k-max", "4"],
]


def test_cli_determinism_corpus():
    assert len(CORPUS) >= 25
    for argv in CORPUS:
        env1, code1 = run(list(argv))
        env2, code2 = run(list(argv))
        assert code1 == 0, argv
        assert code1 == code2
        for fmt in ("json", "csv", "text"):
            assert render(env1, fmt) == render(env2, fmt), argv
