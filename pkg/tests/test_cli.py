import io
import json
import random
import subprocess
import sys

import pytest

from conftest import random_element
from product_laws import random_word
from garside import (braid_structure, delta_power, gn_make, gn_structure, identity, power,
                     torus_structure)
from garside.cli import ParseError, main, parse_element, parse_group
from garside.core import element_text

B3 = braid_structure(3)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run("--json", *argv)
    return code, json.loads(text)


def test_parse_examples():
    assert parse_element("braid:3", "a1 a2 a1") == delta_power(B3, 1)
    assert parse_element("braid:3", "") == identity(B3)
    G2 = gn_structure(B3, 2)
    x = parse_element("gn:braid:3:2", "d^1 [ a1 | ]")
    assert x == gn_make(G2, 1, (parse_element(B3, "a1"), identity(B3)))


def test_parse_exponents_and_literals():
    assert parse_element("braid:3", "a1^3 a1^-3") == identity(B3)
    assert parse_element("braid:3", "<2,1,3>") == parse_element("braid:3", "a1")
    assert parse_element("braid:3", "D^-1 . <2,3,1>") == parse_element("braid:3", "a1^-1")
    assert parse_element("torus:2,3", "x2^3") == parse_element("torus:2,3", "D")
    assert parse_element("z", "d^2 d^-5").inf == -3


@pytest.mark.parametrize("group, text, column", [
    ("braid:3", "a1 a3", 4),
    ("braid:3", "a1 ?", 4),
    ("braid:3", "x1", 1),
    ("braid:3", "<1,1,2>", 1),
    ("braid:3", "<1,2", 1),
    ("gn:braid:3:2", "d^1 [ a1 ]", 5),
    ("gn:braid:3:2", "d^1 [ a1 | a2 | a1 ]", 5),
    ("gn:braid:3:2", "d^1 [ a1 | a2", 14),
    ("torus:2,2", "a1", 1),
])
def test_parse_errors(group, text, column):
    with pytest.raises(ParseError) as info:
        parse_element(group, text)
    assert info.value.position + 1 == column


@pytest.mark.parametrize("spec", ["braid:9", "braid:x", "torus:1,2", "q", "gn:braid:3:0", "gn:braid:3"])
def test_bad_groups(spec):
    with pytest.raises(ValueError):
        parse_group(spec)


def _random_in(spec, rng):
    st = parse_group(spec)
    if spec.startswith("gn:"):
        comps = tuple(random_word(st.base, rng, 3) for _ in range(st.n))
        return gn_make(st, rng.randint(-2, 2), comps)
    return random_word(st, rng, 6)


@pytest.mark.parametrize("spec", ["braid:3", "braid:4", "braid:5", "torus:2,3", "torus:2,2,2",
                                  "z", "gn:braid:3:2", "gn:torus:2,2:3"])
def test_print_parse_round_trip(spec):
    rng = random.Random(spec)
    st = parse_group(spec)
    for _ in range(1000):
        x = _random_in(spec, rng)
        assert parse_element(st, element_text(x)) == x


def test_nf_identity():
    code, out = run("nf", "braid:3", "a1 a1^-1")
    assert code == 0
    assert out.splitlines()[0] == "D^0 ."


def test_root_command():
    code, out = run("root", "braid:3", "a1 a2 a1 a1 a2 a1", "2")
    assert code == 0
    x = parse_element("braid:3", out.strip())
    assert power(x, 2) == delta_power(B3, 2)
    assert run("root", "braid:3", "a1", "2")[0] == 1


def test_conj_command():
    code, out = run("conj", "braid:3", "a1", "a1 a2")
    assert (code, out.strip()) == (1, "not-conjugate")
    code, out = run("conj", "braid:3", "a1", "a2")
    assert code == 0 and out.startswith("conjugate")


def test_exit_codes():
    assert run("nf", "braid:3", "a7")[0] == 2
    assert run("nf", "braid:12", "a1")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2
    assert run("--cap", "10", "root", "braid:3", "a1", "2")[0] == 4
    assert run("--cap", "1", "sss", "braid:4", "a1 a2^-1 a3")[0] == 4
    assert run("oracle", "divisors", "braid:3", "D^3")[0] == 2
    assert run("classes", "braid:3", "--max-t", "1")[0] == 0
    assert run("classes", "braid:3", "--max-t", "2/3", "--n-max", "4")[0] == 3
    assert run("classes", "braid:3", "--max-t", "x")[0] == 2


def test_json_schema():
    for argv in (["nf", "braid:3", "a1 a2"], ["conj", "braid:3", "a1", "a2"],
                 ["conj", "braid:3", "a1", "a1 a2"], ["sss", "braid:3", "a1"],
                 ["uss", "braid:3", "a1"], ["root", "torus:2,2", "D", "2"],
                 ["tnum", "braid:3", "a1", "--power", "10"],
                 ["classes", "braid:3", "--max-t", "1/2"],
                 ["oracle", "bfs", "braid:3", "D^2"], ["nf", "braid:3", "a9"]):
        code, text = run("--json", *argv)
        line = text.strip()
        assert "\n" not in line
        record = json.loads(line)
        assert {"group", "query", "result", "certificates"} <= set(record)
        assert line == json.dumps(record, sort_keys=True, ensure_ascii=False)
        assert record["exit"] == code
        assert "." not in json.dumps(_numbers(record))


def _numbers(obj):
    # collect every numeric leaf so a float would show up as "x.y"
    if isinstance(obj, dict):
        return [_numbers(v) for v in obj.values()]
    if isinstance(obj, list):
        return [_numbers(v) for v in obj]
    return obj if isinstance(obj, (int, float)) and not isinstance(obj, bool) else 0


def test_tnum_json_rationals():
    code, record = run_json("tnum", "braid:3", "a1", "--power", "10")
    assert record["result"]["lower"] == [4, 5]
    assert record["result"]["upper"] == [1, 1]


def test_conj_certificate_json():
    code, record = run_json("conj", "braid:3", "a1", "a2")
    u = parse_element("braid:3", record["certificates"][0]["value"])
    a, b = parse_element("braid:3", "a1"), parse_element("braid:3", "a2")
    assert a.conjugate(u) == b
    code, record = run_json("conj", "braid:3", "a1", "a1 a2")
    cert = record["certificates"][0]
    assert cert["a"] != cert["b"]


def test_batch(tmp_path):
    path = tmp_path / "cmds.txt"
    path.write_text("\n".join([
        'nf braid:3 "a1 a2 a1"',
        "# comment",
        "conj braid:3 a1 'a1 a2'",
        "nf braid:3 a9",
        "bogus",
        "tnum braid:3 D --power 4",
    ]) + "\n")
    code, out = run("--batch", str(path))
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["exit"] for r in records] == [0, 1, 2, 2, 0]
    assert records[0]["result"]["normal_form"] == "D^1 ."
    assert code == 2
    assert run("--batch", str(tmp_path / "missing"))[0] == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "garside", "nf", "braid:3", "a1 a1^-1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "D^0 ."
