import random

import pytest

from pfsm import FormatError, format_fsm, format_suite, parse_fsm, parse_suite, parse_word
from pfsm.catalog import faulty_four_state, spec_two_state
from pfsm.textio import read_fsm, write_fsm

from oracles import random_fsm

FIG2_TEXT = """\
# two-state specification
fsm M
inputs 0 1
outputs 0 1
initial s0
trans s0 0/1 s0
trans s0 1/1 s1   # move on
trans s1 0/0 s1
"""


def test_parse_reference_machine():
    assert parse_fsm(FIG2_TEXT) == spec_two_state()


def test_states_without_declaration_follow_first_appearance():
    m = parse_fsm("fsm A\ninputs a\noutputs b\ninitial z\ntrans y a/b z\n")
    assert m.states == ("z", "y")


def test_explicit_states_line_fixes_order_and_keeps_isolated_states():
    m = parse_fsm("fsm A\ninputs a\noutputs b\nstates p z q\ninitial q\n")
    assert m.states == ("p", "z", "q")
    assert m.initial == "q"


@pytest.mark.parametrize("text,line", [
    ("fsm A\ninputs 0\noutputs 0\ninitial s\ntrans s 0/0 s\ntrans s 0/0 s\n", 6),
    ("fsm A\ninputs 0\noutputs 0\ninitial s\ntrans s 00 s\n", 5),
    ("fsm A\nbogus\n", 2),
    ("fsm A\nfsm B\n", 2),
])
def test_format_errors_cite_line_numbers(text, line):
    with pytest.raises(FormatError) as info:
        parse_fsm(text, source="x.fsm")
    assert info.value.line == line
    assert f"x.fsm:{line}:" in str(info.value)


def test_missing_header_and_bad_symbols():
    with pytest.raises(FormatError, match="initial"):
        parse_fsm("fsm A\ninputs 0\noutputs 0\n")
    with pytest.raises(FormatError):
        parse_fsm("fsm A\ninputs 0\noutputs 0\ninitial s\ntrans s 1/0 s\n")
    with pytest.raises(FormatError, match="not declared"):
        parse_fsm("fsm A\ninputs 0\noutputs 0\nstates s\ninitial s\ntrans s 0/0 t\n")


def test_round_trip_preserves_names_and_order():
    rng = random.Random(7)
    for _ in range(200):
        m = random_fsm(rng, rng.randint(1, 5))
        back = parse_fsm(format_fsm(m, ["note"]))
        assert back == m
        assert back.states == m.states


def test_file_helpers(tmp_path):
    p = tmp_path / "n.fsm"
    write_fsm(faulty_four_state(), p, ["made in a test"])
    assert p.read_text().startswith("# made in a test\n")
    assert read_fsm(p) == faulty_four_state()


def test_parse_word_forms():
    assert parse_word("eps") == ()
    assert parse_word("100") == ("1", "0", "0")
    assert parse_word("ab c") == ("ab", "c")
    assert parse_word("ab", alphabet=["ab", "c"]) == ("ab",)
    assert parse_word("ab", alphabet=["a", "b"]) == ("a", "b")


def test_suite_round_trip():
    text = "# suite\n0000\n100\neps\n100\n"
    suite = parse_suite(text)
    assert suite == {("0",) * 4, ("1", "0", "0"), ()}
    assert format_suite(suite, {"0": 0, "1": 1}) == "eps\n100\n0000\n"
    with pytest.raises(FormatError):
        parse_suite("# nothing\n")
