import json
import math

import pytest

import russell


def test_special_functions():
    assert russell.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert russell.gauss_2f1(0.5, 0.5, 1.5, -1.0) == pytest.approx(math.asinh(1.0), rel=1e-13)
    assert russell.ellip_k(0.5) == pytest.approx(1.8540746773013719, rel=1e-13)
    sn, cn, dn = russell.jacobi(0.4, 0.3)
    assert sn * sn + cn * cn == pytest.approx(1.0, abs=1e-13)
    assert russell.gauss_constant() == pytest.approx(1.0 / russell.agm(1.0, math.sqrt(2.0)), rel=1e-14)


def test_quadrature_accepts_python_callables():
    value, err, evals, ok = russell.integrate_finite(math.sin, 0.0, math.pi, 1e-12)
    assert ok and value == pytest.approx(2.0, abs=1e-12)
    value, _, _, ok = russell.integrate_semi_infinite(lambda x: math.exp(-x), 1e-12)
    assert ok and value == pytest.approx(1.0, abs=1e-12)


def test_moments():
    assert russell.moment_recursive(1, 3, 2) == pytest.approx(russell.lemma1_closed_form(1, 1), rel=1e-12)


def test_verify_and_sweep():
    assert "R7" in russell.identity_ids()
    rec = russell.verify("R2", {"x": 0.5})
    assert rec["pass"] and rec["params"] == {"x": 0.5}
    assert len(russell.sweep("R6-gen", 5)) == 25
    with pytest.raises(russell.DomainError):
        russell.verify("R2", {"x": 1.5})
    with pytest.raises(KeyError):
        russell.verify("missing", {})


def test_run_report():
    status, text = russell.run("E-*", 1)
    assert status == 0
    report = json.loads(text)
    assert report["summary"]["failed"] == 0
    assert report["summary"]["total"] == 5
    assert russell.run("nothing", 1)[0] == 2
