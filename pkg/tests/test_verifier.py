import json

import pytest

from twoswitch import CLAIMS, from_graph6, negative_control, verify
from twoswitch.verifier import MAX_N, STANDARD, VerificationError, VerificationReport

PER_GRAPH = ("lem2.1", "thm2.2", "thm2.5", "cor2.6", "cor3.1", "lem3.2", "thm3.3", "thm4.2")


@pytest.mark.parametrize("claim", CLAIMS)
def test_claims_pass_up_to_6(claim):
    rep = verify(claim, 6)
    assert rep.passed, rep.summary()
    assert rep.checked > 0


@pytest.mark.parametrize("claim", CLAIMS)
def test_negative_controls_fail(claim):
    defs = negative_control(claim)
    assert defs != STANDARD and defs.label != "standard"
    rep = verify(claim, 7, defs=defs)
    assert not rep.passed, f"{claim} negative control found nothing"
    for c in rep.counterexamples:
        if c.graph6:
            from_graph6(c.graph6)
        assert c.detail


def test_thm42_without_sbar_fails_at_6():
    rep = verify("thm4.2", 6, defs=negative_control("thm4.2"))
    assert not rep.passed
    assert rep.to_json()["pass"] is False


def test_report_schema_and_reproducibility():
    a = verify("thm2.2", 5).to_json()
    b = verify("thm2.2", 5).to_json()
    assert list(a)[:5] == ["claim", "max_n", "checked", "counterexamples", "pass"]
    a.pop("elapsed_seconds")
    b.pop("elapsed_seconds")
    assert json.dumps(a) == json.dumps(b)
    cex = verify("thm2.2", 6, defs=negative_control("thm2.2")).to_json()["counterexamples"]
    assert cex and list(cex[0]) == ["graph6", "cycle", "detail"] and len(cex[0]["cycle"]) == 4


def test_parallel_matches_serial():
    serial = verify("thm2.5", 6)
    par = verify("thm2.5", 6, jobs=2)
    assert par.checked == serial.checked and par.counterexamples == serial.counterexamples
    neg = negative_control("cor2.6")
    assert verify("cor2.6", 6, defs=neg, jobs=2).counterexamples == verify("cor2.6", 6, defs=neg).counterexamples


def test_verify_errors():
    with pytest.raises(VerificationError):
        verify("thm9.9", 5)
    with pytest.raises(VerificationError):
        verify("thm2.2", MAX_N + 1)
    with pytest.raises(VerificationError):
        negative_control("thm9.9")


def test_summary_line():
    rep = VerificationReport("thm2.2", 7, 10)
    assert rep.summary().startswith("thm2.2: PASS (n <= 7, 10 checked, 0 counterexamples")


@pytest.mark.slow
@pytest.mark.parametrize("claim", CLAIMS)
def test_claims_pass_at_8(claim):
    rep = verify(claim, 8)
    assert rep.passed, rep.summary()
