"""Session parsing and end-to-end CLI runs against golden JSON files."""

import io
import os
from contextlib import redirect_stdout

import pytest
from hypothesis import given, settings, strategies as st

from diffalg import cli
from diffalg.errors import SessionSyntaxError, SessionTypeError
from diffalg.session import SessionFile, parse_session

HERE = os.path.dirname(__file__)
GOLDEN = os.path.join(HERE, "golden")
QX = os.path.join(GOLDEN, "qx.session")
F3X = os.path.join(GOLDEN, "f3x.session")

# (golden file, argv, expected exit code); every documented command
CASES = [
    ("mul.json", ["mul", QX, "t", "x", "--json"], 0),
    ("mul_binding.json", ["mul", QX, "f", "g", "--json"], 0),
    ("divmod_r.json", ["divmod-r", QX, "f", "g", "--json"], 0),
    ("divmod_l.json", ["divmod-l", QX, "f", "g", "--json"], 0),
    ("gcd_r.json", ["gcd-r", QX, "f", "g", "--json"], 0),
    ("petit.json", ["petit", F3X, "f", "--json"], 0),
    ("assoc.json", ["assoc", QX, "f", "t", "t", "x", "--json"], 0),
    ("two_sided.json", ["two-sided", F3X, "w", "--json"], 0),
    ("nuclei.json", ["nuclei", F3X, "f", "--json"], 0),
    ("eigenring.json", ["eigenring", QX, "f", "--json", "--bound", "2"], 0),
    ("apoly.json", ["apoly", QX, "f", "--json", "--bound", "2"], 0),
    ("vp.json", ["vp", F3X, "x", "--json"], 0),
    ("minpoly.json", ["minpoly", F3X, "--json"], 0),
    ("center.json", ["center", F3X, "--json"], 0),
    ("bound.json", ["bound", F3X, "t - x", "--json"], 0),
    ("diffext.json", ["diffext", F3X, "x^3", "--json"], 0),
    ("split.json", ["split", F3X, "x^3", "--json"], 0),
    ("split_division.json",
     ["split", F3X, "1/x^3", "--json", "--bound", "10"], 2),
    ("roots.json", ["roots", F3X, "f", "--json", "--bound", "6"], 0),
    ("resultant.json", ["resultant", QX, "g", "t - x^2", "--json"], 0),
    ("charpoly.json", ["charpoly", QX, "f", "--json"], 0),
    ("similar.json", ["similar", QX, "g", "g", "--json", "--bound", "2"], 0),
    ("similar_not_found.json",
     ["similar", QX, "t", "t - 1", "--json", "--bound", "3"], 2),
    ("scenario.json", ["scenario", "3", "1", "2", "--json"], 0),
]


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue()


@pytest.mark.parametrize("golden,argv,expected_code",
                         CASES, ids=[c[0] for c in CASES])
def test_golden(golden, argv, expected_code):
    code, out = run_cli(argv)
    assert code == expected_code
    path = os.path.join(GOLDEN, golden)
    with open(path, encoding="utf-8") as fh:
        assert out == fh.read()


def test_deterministic_repeat():
    _, first = run_cli(["eigenring", QX, "f", "--json", "--bound", "2"])
    _, second = run_cli(["eigenring", QX, "f", "--json", "--bound", "2"])
    assert first == second


def test_text_output():
    code, out = run_cli(["mul", QX, "t", "x"])
    assert code == 0
    assert out == "product = x*t+1\n"


def test_error_exit_code(capsys):
    import sys
    err = io.StringIO()
    old = sys.stderr
    sys.stderr = err
    try:
        code, _ = run_cli(["vp", QX, "x", "--json"])
    finally:
        sys.stderr = old
    assert code == 1
    assert "error:" in err.getvalue()


class TestSessionParsing:
    def test_basic(self):
        s = parse_session("base=F3\nlayer rational x\ndelta x = 1\n"
                          "f = t^2 - x\n")
        assert s.base == "F3"
        assert s.layers == [("rational", "x")]
        assert s.delta == {"x": "1"}
        assert list(s.bindings) == ["f"]

    def test_pinsep_over_q_rejected(self):
        with pytest.raises(SessionTypeError):
            parse_session("base=Q\nlayer pinsep u 2\n")

    def test_syntax_error_location(self):
        with pytest.raises(SessionSyntaxError) as e:
            parse_session("base=Q\nlayer rational x\ndelta x = 1\nf = t^\n")
        assert e.value.line == 4

    def test_unknown_name(self):
        s = parse_session("base=Q\nlayer rational x\ndelta x = 1\n"
                          "f = t + y\n")
        tower = s.build_tower()
        with pytest.raises(SessionSyntaxError):
            s.build_bindings(tower)

    def test_bindings_see_earlier_bindings(self):
        s = parse_session("base=Q\nlayer rational x\ndelta x = 1\n"
                          "f = t - x\ng = f*f\n")
        env = s.build_bindings(s.build_tower())
        assert env["g"] == env["f"] * env["f"]

    names = st.sampled_from(["f", "g", "h", "q"])
    exprs = st.sampled_from(["t", "t^2 - x", "x*t + 1", "(t - x)*(t + x)"])

    @given(st.dictionaries(names, exprs, min_size=0, max_size=4),
           st.sampled_from(["Q", "F3", "F5"]))
    @settings(max_examples=40, deadline=None)
    def test_roundtrip(self, bindings, base):
        s = SessionFile(base=base, layers=[("rational", "x")],
                        delta={"x": "1"}, options={"bound": "4"},
                        bindings=dict(bindings))
        assert parse_session(s.to_text()) == s
