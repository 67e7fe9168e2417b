import io
import json
import random
import subprocess
import sys

import pytest

from amalgbase.cli import run
from amalgbase.groups import FinAbGroup
from amalgbase.literals import LiteralError, parse_element, parse_group
from oracles import ordered_factorizations


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_base_klein_four():
    code, out, _ = call("check-base", "Z/2xZ/2", "(1,1)")
    assert code == 0
    payload = json.loads(out)
    assert payload["is_base"] is False
    H, K = payload["witness"]["H"], payload["witness"]["K"]
    assert sorted([H["elements"], K["elements"]]) == [[[0, 0], [0, 1]], [[0, 0], [1, 0]]]


def test_check_base_cyclic():
    code, out, _ = call("check-base", "Z/8", "1")
    assert code == 0
    payload = json.loads(out)
    assert (payload["is_base"], payload["p"], payload["n"]) == (True, 2, 3)


def test_check_base_zero_point_is_an_input_error():
    code, out, err = call("check-base", "Z/4", "0")
    assert code == 2 and out == ""
    assert "g must be nonzero" in err


@pytest.mark.parametrize("method", ["bruteforce", "structural"])
def test_check_base_methods(method):
    code, out, _ = call("check-base", "Z/12", "3", "--method", method)
    assert code == 0 and json.loads(out)["is_base"] is True


def test_check_base_text():
    code, out, _ = call("check-base", "Z/2 x Z/2", "(1,1)", "--format", "text")
    assert code == 0 and "not an h-amalgamation base" in out and "witness" in out
    code, out, _ = call("check-base", "Z/9", "3", "--format", "text")
    assert "cyclic of order 3^2" in out


def test_bound_refusal_exit_code():
    code, _, err = call("check-base", "Z/512", "1")
    assert code == 1 and "bound" in err
    code, out, _ = call("--bound", "512", "check-base", "Z/512", "1")
    assert code == 0 and json.loads(out)["is_base"]
    code, out, _ = call("check-base", "Z/512", "1", "--method", "structural")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ("check-base", "Z/1", "0"),
        ("check-base", "Z/4 x", "(1,0)"),
        ("check-base", "Z/4", "(1,0)"),
        ("check-base", "Q/4", "1"),
        ("check-base", "Z/4", "a"),
        ("frobnicate",),
        ("enumerate-bases",),
    ],
)
def test_input_errors(argv, capsys):
    code, _, _ = call(*argv)
    assert code == 2


def test_subgroups_command():
    code, out, _ = call("subgroups", "Z/2 x Z/2 x Z/2")
    assert code == 0 and json.loads(out)["count"] == 16
    code, out, _ = call("subgroups", "Z/12", "--format", "text")
    assert out.startswith("Z/12: 6 subgroups")


def test_canonical_command():
    code, out, _ = call("canonical", "Z/4 x Z/6")
    payload = json.loads(out)
    assert payload["invariant_factors"] == [2, 12]
    assert payload["elementary_divisors"] == [2, 3, 4]


def test_amalgamate_command(tmp_path):
    span = {
        "source": {"group": "Z/2", "g": [1]},
        "left": {"codomain": "Z/4", "k": [2], "images": [[2]]},
        "right": {"codomain": "Z/2", "l": [1], "images": [[1]]},
    }
    path = tmp_path / "span.json"
    path.write_text(json.dumps(span))
    code, out, _ = call("amalgamate", str(path))
    payload = json.loads(out)
    assert code == 0 and payload["amalgamable"] and payload["square_verified"]
    assert payload["D"]["invariant_factors"] == [4]

    blocked = {
        "source": {"group": "Z/2 x Z/2", "g": [1, 1]},
        "left": {"codomain": "Z/2", "k": [1], "images": [[1], [0]]},
        "right": {"codomain": "Z/2", "l": [1], "images": [[0], [1]]},
    }
    path.write_text(json.dumps(blocked))
    code, out, _ = call("amalgamate", str(path))
    payload = json.loads(out)
    assert code == 0 and payload["amalgamable"] is False
    assert payload["witness"] == {"element": [0, 1], "clause": "l in h(ker f)"}

    path.write_text("{not json")
    assert call("amalgamate", str(path))[0] == 2
    assert call("amalgamate", str(tmp_path / "missing.json"))[0] == 2


def test_enumerate_bases_formats():
    code, out, _ = call("enumerate-bases", "--max-order", "4", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "group,g,is_base,detail"
    assert lines[1].startswith("Z/2,1,true,")
    assert len(lines) == 1 + 1 + 2 + 3 + 3

    code, out, _ = call("enumerate-bases", "--max-order", "4")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["is_base"] for r in rows].count(True) == 6

    code, out, _ = call("enumerate-bases", "--max-order", "8", "--format", "text", "--bases-only")
    assert all(line.startswith("base") for line in out.splitlines())


def test_selftest_command():
    code, out, _ = call("selftest", "--max-order", "16")
    assert code == 0 and out.rstrip().endswith("OK")


def test_json_output_is_byte_stable():
    argv = ("enumerate-bases", "--max-order", "12", "--format", "jsonl")
    assert call(*argv)[1] == call(*argv)[1]
    assert call("check-base", "Z/2 x Z/4", "(0,1)")[1] == call("check-base", "Z/2 x Z/4", "(0,1)")[1]


@pytest.mark.parametrize("text, moduli", [("Z/4 x Z/2", (4, 2)), ("z/8", (8,)), ("  Z / 3X z/9 ", (3, 9)), ("0", ())])
def test_parse_group(text, moduli):
    assert parse_group(text).moduli == moduli


@pytest.mark.parametrize("text, where", [("Z/1", "position 2"), ("Z/4 x", "position 5"), ("Z4", "position 1"),
                                         ("", "empty"), ("Z/4 Z/2", "position 4")])
def test_parse_group_errors(text, where):
    with pytest.raises(LiteralError, match=where):
        parse_group(text)


def test_parse_element():
    G = FinAbGroup((4, 2))
    assert parse_element("(3,1)", G) == (3, 1)
    assert parse_element("( 5 , -1 )", G) == (1, 1)
    assert parse_element("7", FinAbGroup((4,))) == (3,)
    with pytest.raises(LiteralError, match="coordinates"):
        parse_element("(1,2,3)", G)
    with pytest.raises(LiteralError, match="integer"):
        parse_element("(1,x)", G)


def test_round_trip_all_small_groups():
    for n in range(2, 65):
        for m in ordered_factorizations(n):
            G = FinAbGroup(m)
            assert parse_group(str(G)) == G


def test_round_trip_generated_literals():
    rng = random.Random(2024)
    for _ in range(50):
        moduli = tuple(rng.randint(2, 30) for _ in range(rng.randint(1, 4)))
        G = FinAbGroup(moduli)
        sep = rng.choice([" x ", "x", " X ", "  x  "])
        text = sep.join(f"{rng.choice('zZ')}/{m}" for m in moduli)
        assert parse_group(text) == G
        assert parse_group(str(G)) == G


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "amalgbase", "check-base", "Z/8", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["is_base"] is True
