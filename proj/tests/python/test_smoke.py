import math

import pytest

import lethargy


def test_version():
    assert lethargy.__version__.startswith("0.")


def test_best_approx_quantizer_reciprocal():
    # 2t - 1 on a fine grid, m cells: the sup error sits just under 1/m.
    for n in (1, 2, 4):
        r = lethargy.best_approx("quantizer", {"fn": "ramp"}, n)
        assert 1.0 / n - 2e-3 <= r["value"] <= 1.0 / n
        assert r["status"] == "exact"


def test_error_profile_is_nonincreasing():
    p = lethargy.error_profile("monomial", {"fn": "abs"}, 6)
    values = [e["value"] for e in p["entries"]]
    assert len(values) == 7
    assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))


def test_lethargy_majorant_postconditions():
    eps = [1.0, 0.5, 0.5, 1e-3, 1e-3, 1e-4, 1e-6, 1e-6]
    h = [2 * n for n in range(len(eps))]
    xi = lethargy.lethargy_majorant(eps, h)
    for n in range(len(eps)):
        assert xi[n] >= eps[n]
        if h[n] < len(eps):
            assert xi[n] <= 2 * xi[h[n]]
    assert all(a >= b for a, b in zip(xi, xi[1:]))


def test_convex_majorant_dominates():
    eps = [1.0, 0.2, 0.19, 0.0]
    xi = lethargy.convex_majorant(eps)
    assert all(x >= e for x, e in zip(xi, eps))


def test_witness_roundtrip_and_tamper():
    bundle = lethargy.witness({"type": "tensor", "n": 4, "norm": "op"})
    assert lethargy.verify_witness(bundle)["ok"]
    for b in bundle["bounds"]:
        if b["tag"] == "tensor-tail-singular-values":
            assert math.isclose(b["computed"], 0.25, rel_tol=1e-12)
    bundle["bounds"][0]["bound"] *= 1.5
    assert not lethargy.verify_witness(bundle)["ok"]


def test_shapiro_dichotomy():
    assert lethargy.shapiro_check("quantizer", 4, 8, 3)["verdict"] == "Shapiro-fails"
    assert lethargy.shapiro_check("interleaved-c0", 6, 4, 3)["verdict"] == "consistent-with-Shapiro"


def test_run_and_replay(tmp_path):
    cfg = {"task": "witness", "scheme": "interleaved-c0", "eps": {"rule": "geometric", "length": 8, "ratio": 0.5}}
    code, report = lethargy.run(cfg, str(tmp_path))
    assert code == 0
    assert report["verified"]
    assert (tmp_path / "witness_report.json").exists()
    assert lethargy.replay(report) == 0
    report["claims"][1]["bound"] = 0.123
    assert lethargy.replay(report) == 2


def test_errors_map_to_exceptions():
    with pytest.raises(lethargy.UsageError):
        lethargy.run({"task": "nope"})
    with pytest.raises(lethargy.LethargyError):
        lethargy.best_approx("no-such-scheme", {"fn": "abs"}, 1)
    report = lethargy.run({"task": "witness", "scheme": "interleaved-c0",
                           "eps": {"rule": "geometric", "length": 4, "ratio": 0.5}})[1]
    report["schema"] = 99
    with pytest.raises(lethargy.IncompatibleVersion):
        lethargy.replay(report)


def test_list_schemes():
    names = {s["name"] for s in lethargy.list_schemes()}
    assert {"monomial", "quantizer", "interleaved-c0", "rank"} <= names
