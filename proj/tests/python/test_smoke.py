import math
import os
import subprocess

import numpy as np
import pytest

import ghcode


def test_params():
    cp = ghcode.curve_params(2, 5)
    assert (cp.a, cp.b, cp.g, cp.n, cp.v0, cp.A, cp.B) == (3, 2, 75, 496, 155, 278, 92)
    cp = ghcode.curve_params(3, 3)
    assert (cp.g, cp.n, cp.A, cp.B) == (37, 234, 259, 25)


def test_unsupported_curve():
    with pytest.raises(ValueError, match="divides a"):
        ghcode.curve_params(3, 5)
    with pytest.raises(ghcode.CurveError):
        ghcode.Curve(2, 4)


def test_points():
    curve = ghcode.Curve(3, 3)
    pts = curve.points()
    assert len(pts) == 234
    assert pts == sorted(pts)
    assert curve.field_modulus() == "x^3+2x+1"
    assert curve.special_places()["v_rational_count"] == 0


def test_omega_and_reduction():
    cp = ghcode.curve_params(3, 3)
    assert ghcode.omega(cp, (0, 0, 0, 0)) == [(0, 0, 0)]
    assert len(ghcode.omega(cp, (100, 0, 0, 0))) == 64
    red = ghcode.omega_reduce(cp, (10, 1, 30, 5))
    assert red["spec"] == (35, 0, 13, 2)
    assert red["lambda_"] == 1 and red["sigma"] == 1
    assert ghcode.omega_count_formula(cp, (100, 0, 0, 0)) == 64
    with pytest.raises(ghcode.ThresholdError):
        ghcode.omega_count_formula(cp, (10, 0, 0, 0))


def test_flagship_code():
    curve = ghcode.Curve(2, 5)
    code = ghcode.build_code(curve, (324, 0, 0, 0))
    assert (code.n, code.k, code.goppa_lb) == (496, 250, 172)
    g = code.generator()
    assert g.shape == (250, 496)
    assert g.dtype == np.uint32
    assert np.all(g == 1, axis=1).any()


def test_duality_and_witness():
    curve = ghcode.Curve(3, 3)
    cp = curve.params
    spec = (80, 0, 3, 2)
    dual = ghcode.dual_spec(cp, spec)
    assert ghcode.dual_spec(cp, dual) == spec
    a = ghcode.build_code(curve, spec)
    b = ghcode.build_code(curve, dual)
    assert a.k + b.k == cp.n
    w = ghcode.equivalence_witness(curve, (10, 1, 30, 5))
    assert len(w) == 234 and all(x != 0 for x in w)


def test_min_distance():
    curve = ghcode.Curve(3, 3)
    assert ghcode.build_code(curve, (0, 0, 0, 0)).min_distance() == 234
    with pytest.raises(ghcode.BudgetExceeded):
        ghcode.build_code(curve, (100, 0, 0, 0)).min_distance()


def test_gv_compare():
    cp = ghcode.curve_params(2, 5)
    (row,) = ghcode.gv_compare(cp, [(324, 0, 0, 0)])
    l, d = 32.0, 172 / 496
    h = d * math.log(l - 1, l) - d * math.log(d, l) - (1 - d) * math.log(1 - d, l)
    assert row["gv_rate"] == pytest.approx(1 - h)
    assert row["rate"] - row["gv_rate"] > 0.03
    assert row["beats_gv"] == "1"
    assert ghcode.q_ary_entropy(32, 0.0) == 0.0


def test_pick_and_psi():
    assert ghcode.pick_count([(0, 0), (0, -2), (31, 6)]) == {"area2": 62, "boundary": 4, "interior": 30}
    cp = ghcode.curve_params(2, 5)
    assert ghcode.psi_count(cp, 0, 0, 0) + ghcode.psi_count(cp, 1, 0, 0) == 81


def test_run_cli_in_process():
    code, out, err = ghcode.run_cli(["code", "--q", "2", "--c", "5", "--v", "324"])
    assert code == 0
    assert out == "496 250 172 324\n"
    assert ghcode.run_cli(["params", "--q", "3", "--c", "5"])[0] == 2


@pytest.mark.skipif("GHCODE_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary_matches_module():
    args = ["gv-compare", "--q", "2", "--c", "5", "--sweep", "300:340:5"]
    proc = subprocess.run([os.environ["GHCODE_CLI"], *args], capture_output=True, text=True, check=True)
    assert proc.stdout == ghcode.run_cli(args)[1]
