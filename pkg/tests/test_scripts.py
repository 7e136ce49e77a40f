from importlib import resources

import pytest

from twistscl.certificates import boundary_pair_script
from twistscl.scripts import (
    ProofScript,
    ScriptSyntaxError,
    check_script,
    parse_script,
    serialize_script,
)
from twistscl.twists import Step, default_configuration

CFG = default_configuration()
W = CFG.word


def shipped_text() -> str:
    return resources.files("twistscl").joinpath("data/tenth_power.script").read_text()


def test_empty_step_list_reflexivity():
    script = ProofScript(W("t4 t5"), (), W("t4 t5"))
    assert check_script(script, CFG).accepted


def test_claim_mismatch_rejected():
    script = ProofScript(W("t4 t5"), (), W("t5 t4"))
    report = check_script(script, CFG)
    assert not report.accepted
    assert report.failure[0] == 0 and "differs" in report.failure[1]


def test_shipped_script_is_accepted_and_value_preserving():
    script, cfg = parse_script(shipped_text(), CFG)
    report = check_script(script, cfg)
    assert report.accepted
    assert report.value_preserving()
    assert script.source == W("t4 t5")
    assert script.claimed == W("t1 t_alpha t2^4 t1 t2^-1 t_beta t2^-1 t2^6")
    assert len(report.records) == len(script.steps)


def test_shipped_script_matches_generated_derivation():
    script, _ = parse_script(shipped_text(), CFG)
    assert script == boundary_pair_script(CFG)


def test_rejection_carries_first_failing_step():
    script = ProofScript(
        W("t4 t5"),
        (Step("chain-substitute", 0), Step("braid", 0)),  # braid at t1 t2 t3 fails
        W("t4 t5"),
    )
    report = check_script(script, CFG)
    assert not report.accepted
    assert report.failure[0] == 1
    assert report.records[-1].index == 0


def test_braid_step_on_disjoint_pair_rejected_as_unregistered():
    script = ProofScript(W("t1 t3 t1"), (Step("braid", 0),), W("t3 t1 t3"))
    report = check_script(script, CFG)
    assert not report.accepted
    assert "not a registered braid pair" in report.failure[1]


def test_insert_then_cancel_is_invariant():
    base, cfg = parse_script(shipped_text(), CFG)
    padded = ProofScript(
        base.source,
        (Step("free-insert", 0, "t5"), Step("free-cancel", 0)) + base.steps,
        base.claimed,
    )
    assert check_script(padded, cfg).accepted


def test_conjugation_is_tracked_in_report():
    script = ProofScript(
        W("t4 t5"),
        (Step("conjugate-equation", 0, "t2^-1"),),
        W("t2^-1 t4 t5 t2"),
    )
    report = check_script(script, CFG)
    assert report.accepted
    assert not report.value_preserving()
    assert str(report.conjugator) == "t2^-1"


# ---------------------------------------------------------------------------
# parsing and serialization
# ---------------------------------------------------------------------------

def test_parse_serialize_round_trip():
    script, _ = parse_script(shipped_text(), CFG)
    text = serialize_script(script)
    reparsed, _ = parse_script(text, CFG)
    assert reparsed == script


def test_parser_handles_comments_bindings_and_maps():
    text = """
    # a tiny derivation
    map g a4->a1 alpha->a5
    let pair = t4 t_alpha^-1
    let source = pair g pair^-1 g^-1
    claim pair g pair^-1 g^-1
    """
    script, cfg = parse_script(text, CFG)
    assert "g" in cfg.mappings
    assert len(script.source) == 6
    assert check_script(script, cfg).accepted


def test_parser_crlf_normalization():
    text = shipped_text().replace("\n", "\r\n")
    script, cfg = parse_script(text, CFG)
    assert check_script(script, cfg).accepted


@pytest.mark.parametrize("bad, message", [
    ("claim t1", "must bind `source`"),
    ("let source = t1", "must end with a claim"),
    ("let source = t1\nstep braid t1\nclaim t1", "step needs"),
    ("let source = t1\nstep warp @0\nclaim t1", "unknown move"),
    ("let source = t1\nfoo bar\nclaim t1", "unknown directive"),
    ("let source = t9\nclaim t9", "unknown symbol"),
    ("map g a4->\nlet source = t1\nclaim t1", "malformed pair"),
    ("let source = t1\nlet source = t2\nclaim t1", "redefined"),
])
def test_parser_rejects_malformed_scripts(bad, message):
    with pytest.raises(ScriptSyntaxError) as err:
        parse_script(bad, CFG)
    assert message in str(err.value)


def test_script_text_format_is_locked():
    """The shipped fixture doubles as the format's golden file."""
    lines = [l for l in shipped_text().splitlines() if l and not l.startswith("#")]
    assert lines[0] == "let source = t4 t5"
    assert lines[1] == "step free-insert @0 t2^-1"
    assert lines[-1] == "claim t1 t_alpha t2^4 t1 t2^-1 t_beta t2^-1 t2^6"
    assert sum(1 for l in lines if l.startswith("step ")) == 20
