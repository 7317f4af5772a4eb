from fractions import Fraction

import pytest

import supercong


def test_harmonic():
    assert supercong.harmonic(3) == Fraction(11, 6)
    assert supercong.harmonic(2, 2) == Fraction(5, 4)


def test_gamma_and_oracle():
    assert supercong.gamma_p(4, 7, 1) == 6
    assert supercong.oracle_value(3, 1, 7) == -31
    assert supercong.oracle_value(1, 1, 3) == 1


def test_corollary():
    assert supercong.corollary_lhs(3, 3) == 26
    row = supercong.corollary_check(3, 3)
    assert (row["lhs"], row["rhs"], row["status"]) == ("26", "26", "PASS")


def test_theorem_and_identities():
    assert supercong.theorem_check(13, 2, 5)["status"] == "PASS"
    lhs, rhs = supercong.eval_identity("SUMNMK", 4)
    assert lhs == rhs == Fraction(-560, 3)
    assert len(supercong.identity_names()) == 15
    assert supercong.verify_identity("COOL", 20)["status"] == "PASS"


def test_run():
    code, report = supercong.run("corollary", "--max-prime", "50", "--no-timestamp")
    assert code == 0
    assert report["summary"]["fail"] == 0
    assert len(report["checks"]) == 2 * 14


def test_errors():
    with pytest.raises(ValueError):
        supercong.eval_identity("NOPE", 3)
    with pytest.raises(ValueError):
        supercong.run("theorem", "--max-prime", "100")
