import pytest

import regset


def test_names():
    assert "gamma" in regset.families()
    assert "lift" in regset.families()
    assert "thm12" in regset.suites()


def test_hermitian_unital():
    H = regset.build("hermitian", 3)
    assert len(H) == 28
    assert H.order == 9
    assert 9 * 9 + 9 in H  # (0:1:0)
    r = regset.classify(H)
    assert r["unital"]
    assert r["signature"] == "[3; 1,4]"
    assert r["report"]["flags"]["regular_pointed"]


def test_gamma_types_and_code():
    X = regset.build("gamma", 9, a=2)
    r = regset.classify(X)
    assert r["report"]["affine_types"] == [4, 7, 10, 13]
    c = regset.code(X)
    assert (c["n"], c["k"], c["d_min"]) == (730, 3, 717)


def test_oval_and_exhaustive_code():
    X = regset.build("oval3", 5)
    assert regset.classify(X)["signature"] == "[3; 1,3,4]"
    c = regset.code(X, exhaustive=True)
    assert c["exhaustive_agrees"]


def test_spectrum_double_counting():
    s = regset.spectrum(regset.build("touching", 9, s=2))
    assert s["double_counting"]


def test_round_trip(tmp_path):
    X = regset.build("lift", 5, s=1, h=2, base="oval1")
    path = tmp_path / "lift.json"
    X.save(str(path), True)
    assert regset.load(str(path)) == X


def test_verify_and_scans():
    assert regset.verify("example26", q=7)["pass"]
    h = regset.hermitian_scan(4)
    assert h["all_allowed"]
    assert regset.scan_f(2)["claim_holds"]
    assert regset.conjecture(2, 1)["holds"]


def test_errors():
    with pytest.raises(ValueError):
        regset.build("nope", 5)
    with pytest.raises(regset.VerifyError):
        regset.verify("nope")
    with pytest.raises(regset.ConstructionError):
        regset.build("oval1", 4)
