from fractions import Fraction

import pytest

import m1n


def test_trigonal_pullback_and_pairings():
    pulled = m1n.glue_pullback(m1n.export("bn:3"), 4)
    assert pulled == m1n.export("golden:trigonal")
    assert m1n.pair(m1n.export("profile:trig"), pulled) == -1
    assert m1n.pair(m1n.export("profile:bnd"), pulled) == -2


def test_gp_pairing_is_constant():
    pulled = m1n.glue_pullback(m1n.export("gp"), 3)
    assert Fraction(pulled["lambda"]) == 10
    assert m1n.pair(m1n.export("profile:gp"), pulled) == -16


def test_gonal_routes():
    assert m1n.pairing_direct(4) == m1n.pairing_binomial(4) == m1n.pairing_closed(4) == -4118
    assert m1n.pairing_closed(3) == 2
    with pytest.raises(m1n.ResourceGuardError):
        m1n.pairing_direct(7)


def test_certificates():
    cert = m1n.certify(m1n.export("gp"), 3, m1n.export("profile:gp"))
    assert cert["pairing"] == "-16"
    assert cert["inference"] == "ChenCoskun Lemma 4.1"
    with pytest.raises(m1n.CertificateRefused):
        m1n.certify(m1n.export("bn:3"), 4, m1n.export("profile:gonal:3"), irreducible=True)


def test_forget_pullback_and_errors():
    cls = {"space": {"type": "M1n", "n": 2}, "lambda": "0",
           "boundary": [{"S": [1, 2], "coeff": "1"}]}
    lifted = m1n.forget_pullback(cls, 3)
    assert [t["S"] for t in lifted["boundary"]] == [[1, 2], [1, 2, 3]]
    with pytest.raises(m1n.DomainError):
        m1n.forget_pullback(cls, 1)
    with pytest.raises(m1n.SpaceMismatchError):
        m1n.glue_pullback(m1n.export("gp"), 4)
    with pytest.raises(m1n.ParseError):
        m1n.normalize({"space": {"type": "Mg", "g": 4}})
    assert issubclass(m1n.MarkingIndexError, m1n.Error)


def test_chow_invariants():
    inv = m1n.export("chow:invariants")
    assert m1n.scalar(inv["c2_TD"]) == [-11, 13]
    assert m1n.scalar(inv["kd_squared"]) == [-1, -1]


def test_verify_and_cli():
    ok, report = m1n.verify("chow")
    assert ok and report["failed"] == 0
    code, out, _ = m1n.run_cli(["verify", "gp"])
    assert code == 0 and "T.pullback_GP" in out
    code, _, err = m1n.run_cli(["export", "--name", "nope"])
    assert code == 2 and "unknown corpus item" in err
