import io
import json
import subprocess
import sys

import pytest

from factroid.cli import run, split_elements
from factroid.rings import parse_ring


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(list(argv), out, err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue(), err.getvalue()


QUARTIC = "(x+y^2)*(y+x^2)"


def test_closure_json():
    code, out, _ = call("closure", "--ring", "GF(2)[x,y]", "--gens", QUARTIC)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "factroid/1"
    assert doc["result"]["dim"] == 6 and doc["result"]["degree_bound"] == 4
    assert doc["invocation"]["command"] == "closure"


def test_byte_determinism():
    argv = ["--seed", "7", "closure", "--ring", "GF(2)[x,y]", "--gens", QUARTIC, "--trace"]
    assert call(*argv)[1] == call(*argv)[1]
    proc = [subprocess.run([sys.executable, "-m", "factroid", *argv], capture_output=True) for _ in range(2)]
    assert proc[0].stdout == proc[1].stdout and proc[0].returncode == 0


def test_exit_codes():
    assert call("closure", "--ring", "Q", "--gens", "1")[0] == 1
    assert call("closure", "--ring", "GF(4)", "--gens", "1")[0] == 1
    assert call("egyptian", "--ring", "Z", "--num", "1", "--den", "9", "--mulset", "gen:{2}")[0] == 1
    code, out, _ = call("gmember", "--ring", "Z", "--mulset", "gen:{2}", "--gens", "9", "--element", "1",
                        "--max-witness-degree", "5")
    assert code == 2 and json.loads(out)["error"]["category"] == "not-found"
    code, out, _ = call("oracle", "enumerate", "--ring", "GF(2)[x,y]", "--degree", "3")
    assert code == 2 and json.loads(out)["error"]["category"] == "budget"


def test_stdin_gens():
    code, out, _ = call("closure", "--ring", "GF(2)[x]", "--gens", "-", stdin="x^2+1\n")
    assert code == 0 and json.loads(out)["result"]["dim"] == 3


def test_printed_elements_round_trip():
    R = parse_ring("GF(2)[x,y]")
    _, out, _ = call("closure", "--ring", "GF(2)[x,y]", "--gens", QUARTIC)
    basis = json.loads(out)["result"]["basis"]
    f = R.parse_element(QUARTIC)
    assert f in {R.parse_element(b) for b in basis}
    assert all(R.format_element(R.parse_element(b)) == b for b in basis)


def test_text_output_and_subcommands():
    code, out, _ = call("--output", "text", "greedy", "--rational", "5/6")
    assert code == 0 and "2" in out and "3" in out
    code, out, _ = call("classify", "--ring", "Z/6")
    doc = json.loads(out)["result"]
    assert doc["predicates"]["unit_additive"] is False
    code, out, _ = call("wof", "--ring", "GF(2)[x]", "--gens", "1,x^2")
    assert code == 0 and "degree != 1" in json.loads(out)["result"]["rule"]
    code, out, _ = call("oracle", "closure", "--ring", "GF(2)[x]", "--gens", "x^3", "--compare")
    assert code == 0
    code, out, _ = call("check", "--ring", "GF(2)[x]", "--gens", "1,x^2", "--mulset", "evendeg")
    assert code == 0


@pytest.mark.parametrize("text,parts", [("a, b", ["a", "b"]), ("(a,b);c", ["(a,b)", "c"]), ("a\nb", ["a", "b"])])
def test_split_elements(text, parts):
    assert split_elements(text) == parts
