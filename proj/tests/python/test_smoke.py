"""Smoke tests for the python bindings; the deep verification lives in the
C++ suites."""

import json

import pytest

import diffeoinv


def test_low_order_values_by_every_route():
    assert diffeoinv.b_poly(1) == "1"
    assert diffeoinv.b_poly(2) == "-2*a1"
    for method in ("direct", "recurrence", "closed", "inverse"):
        assert diffeoinv.b_poly(3, method=method) == "12*a1^2 - 6*a2"


def test_bell_polynomial():
    assert diffeoinv.bell(3, 2) == "3*x1*x2"
    assert diffeoinv.bell(6, 6) == "1*x1^6"
    assert diffeoinv.bell(4, 2, subst={"x1": "1", "x2": "1"}) == "4*x3 + 3"
    assert diffeoinv.bell(2, 5) == "0"


def test_vertex_coefficients():
    assert diffeoinv.d_coeff(1) == "4*a1"
    assert diffeoinv.d_coeff(2) == "8*a1^2 + 12*a2"
    assert diffeoinv.c_coeff(1) == "12*a1"


def test_inverse_series_coefficients():
    egf = diffeoinv.inverse_series(4, kind="egf")
    assert egf[1] == "1"
    assert egf[2] == "-2*a1"
    assert egf[3] == "12*a1^2 - 6*a2"
    ogf = diffeoinv.inverse_series(4, kind="ogf")
    assert ogf[2] == "-1*a1"
    assert diffeoinv.loday_coeffs(4) == ogf


def test_smatrix_theorem_values():
    assert diffeoinv.w_coeff(3, 4) == "12*a1*l3"
    assert diffeoinv.W_coeff(3, 3) == "1*l3"
    assert diffeoinv.W_coeff(3, 5) == "0"


def test_legendre_coefficients():
    coeffs = diffeoinv.legendre_coeffs(5)
    assert coeffs[2] == "1/2"
    assert coeffs[3] == "-1/3*a1"  # EGF coefficient b_2 = -2 a1


def test_verify_reports():
    report = diffeoinv.verify("ode", order=6)
    assert report["passed"] is True
    assert report["suite"] == "ode"
    assert all(item["ok"] for item in report["items"])

    report = diffeoinv.verify("smatrix", order=5)
    assert report["passed"] is True


def test_poly_eval_and_errors():
    assert diffeoinv.poly_eval("12*a1^2 - 6*a2", {"a1": "1", "a2": "1"}) == "6"
    assert diffeoinv.poly_eval("1/2*M", {"M": "3"}) == "3/2"
    with pytest.raises(ValueError):
        diffeoinv.bell(3, 2, subst={"bogus": "1"})
    with pytest.raises(ValueError):
        diffeoinv.b_poly(3, method="magic")


def test_series_json_schema():
    data = json.loads(diffeoinv.series_json(3, kind="ogf"))
    assert data["kind"] == "ogf"
    assert data["variable"] == "t"
    assert data["truncation"] == 3
    assert data["coefficients"][2] == {"n": 2, "poly": "-1*a1"}
