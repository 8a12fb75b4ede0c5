from fractions import Fraction

import pytest

import cubictheta as ct


def test_a_coefficients():
    c = ct.coefficients("a", 8)
    assert [c.get(Fraction(n), 0) for n in range(8)] == [1, 6, 0, 6, 6, 0, 0, 12]


def test_eta_and_j():
    assert ct.coefficients("eta", 1) == {Fraction(1, 24): 1}
    j = ct.coefficients("j-invariant", 2)
    assert j[Fraction(-1)] == 1 and j[Fraction(0)] == 744 and j[Fraction(1)] == 196884


def test_theta_has_cyclotomic_coefficients():
    s = ct.expand("theta:1/3,1", 2)
    assert s["pi_grade"] == 0 and s["N"] == 12
    with pytest.raises(ct.Error):
        ct.coefficients("theta:1/3,1", 2)


def test_verify():
    r = ct.verify("thm11.P", 20)
    assert r["verdict"] == "pass"
    assert r["first_discrepancy"] is None


def test_verify_category():
    reports = ct.verify_all(10, category="sampled-point", jobs=2)
    assert len(reports) == 5
    assert all(r["verdict"] == "pass" for r in reports)


def test_identities_listing():
    ids = {r["id"] for r in ct.identities()}
    assert {"thm11.P", "heat.family", "ramanujan-cubic"} <= ids


def test_errors():
    with pytest.raises(ct.UnknownName):
        ct.expand("nosuch", 5)
    with pytest.raises(ct.ParseError):
        ct.expand("eta-quotient:1^x", 5)
    with pytest.raises(ct.UnknownIdentity):
        ct.verify("nosuch", 5)
    with pytest.raises(ValueError):
        ct.verify_all(5, category="nosuch")


def test_cli_passthrough():
    code, out, err = ct.run_cli(["table", "--kind", "representations", "--n-max", "7"])
    assert code == 0 and out.splitlines()[-1] == "7 12" and err == ""
    assert ct.run_cli(["expand", "nosuch"])[0] == 2
