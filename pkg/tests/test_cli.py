import io
import json
import os

import jsonschema
import pytest

from mundici.cli import run
from mundici.schema import OUTPUT

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def d(name):
    return os.path.join(DATA, name)


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--json")
    doc = json.loads(text)
    jsonschema.validate(doc, OUTPUT)
    return code, doc


@pytest.mark.parametrize(
    "argv",
    [
        ("mv-axioms", "L4", "Chang"),
        ("mv-axioms", d("chain4.json"), d("l2xl3.json")),
        ("lu-axioms", "Z,3", d("z2_11.json")),
        ("gamma", d("zu3.json")),
        ("lfunctor", "L2", "--max-len", "2"),
        ("roundtrip", "--algebra", "L3"),
        ("roundtrip", "--group", "LexZ2(1,0)"),
        ("sequent", "--model", "L4", "-f", d("mv_axioms.txt")),
        ("interpret", "--guard", "tt |- [x] neg(neg(x)) = x"),
        ("soundness", "--group", "Z,2", "-f", d("mv_axioms.txt")),
        ("sheaf-roundtrip", d("sierpinski_mv.json"), "--max-len", "2"),
        ("sheaf-roundtrip", d("sierpinski_lu.json")),
        ("sheaf-naturality", "--map", d("collapse_map.json"), "--max-len", "2"),
    ],
    ids=lambda a: " ".join(os.path.basename(x) for x in a),
)
def test_passing_commands(argv):
    code, doc = call_json(*argv)
    assert code == 0 and doc["status"] == "pass"
    assert doc["command"] == argv[0]


def test_gamma_lists_elements():
    code, text = call("gamma", "Z,2")
    assert code == 0
    assert text.splitlines()[0].endswith("0, 1, 2")


def test_interpret_output():
    code, doc = call_json("interpret", "tt |- [x] x = neg(0)")
    assert code == 0 and doc["reports"] == []
    assert doc["output"] == ["tt |- [x] x = add(u, minus(0))"]


@pytest.mark.parametrize(
    "argv,axiom",
    [
        (("mv-axioms", d("broken_table.json")), 6),
        (("sheaf-roundtrip", d("sierpinski_bad_unit.json")), "unit"),
        (("sequent", "--model", "L2", "tt |- [x] oplus(x, x) = x"), None),
    ],
)
def test_failing_commands(argv, axiom):
    code, doc = call_json(*argv)
    assert code == 1 and doc["status"] == "fail"
    bad = [r for r in doc["reports"] if r["status"] == "fail"][0]
    assert bad["witness"]
    if axiom is not None:
        assert bad["axiom"] == axiom


def test_planted_defect():
    code, doc = call_json("lu-axioms", d("z2_planted.json"))
    assert code == 1
    r = doc["reports"][0]
    assert r["axiom"] == 14 and r["witness"] == {"x": "(0,1)"}
    code, _ = call("lu-axioms", "planted")
    assert code == 1


def test_unknown_exits_one():
    code, doc = call_json("sequent", "--model", "planted", "0 <= x |- [x] bigvee n. x <= times(n, u)")
    assert code == 1 and doc["status"] == "unknown"


@pytest.mark.parametrize(
    "argv",
    [
        ("mv-axioms", "nope"),
        ("mv-axioms", "Z,1"),
        ("lu-axioms", "L2"),
        ("sequent", "--model", "L2"),
        ("sequent", "--model", "L2", "tt |- x = x"),
        ("sequent", "--model", "L2", "tt |- [] u = 0"),
        ("sheaf-roundtrip", "L2"),
        ("gamma", d("mv_axioms.txt")),
    ],
)
def test_usage_errors(argv, capsys):
    code, _ = call(*argv)
    assert code == 2
    assert "mundici" in capsys.readouterr().err


def test_argparse_errors():
    with pytest.raises(SystemExit) as e:
        run(["roundtrip"])
    assert e.value.code == 2


def test_text_output_summary():
    code, text = call("mv-axioms", "L2", "L3")
    assert code == 0
    assert text.strip().splitlines()[-1] == "pass: 2/2 checks passed"


def test_seed_is_reported():
    _, doc = call_json("lu-axioms", "Q,1", "--seed", "7", "--budget", "20")
    assert doc["seed"] == 7 and doc["budget"] == 20
    assert doc["reports"][0]["seed"] == 7


def test_same_seed_same_output():
    a = call("lu-axioms", "Q,1", "--seed", "3", "--json")
    b = call("lu-axioms", "Q,1", "--seed", "3", "--json")
    assert a == b


def test_invariant_violation_exits_three(monkeypatch, capsys):
    from mundici import cli
    from mundici.errors import InvariantViolation

    def boom(*a, **k):
        raise InvariantViolation("phi is not injective")

    monkeypatch.setattr(cli, "phi", boom)
    code, _ = call("roundtrip", "--algebra", "L2")
    assert code == 3
    assert "invariant" in capsys.readouterr().err
