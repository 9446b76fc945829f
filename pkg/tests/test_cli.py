import io
import json
from pathlib import Path

import pytest

from coverpoly.cli import main
from coverpoly.numeric import parse_rational

CIRC = str(Path(__file__).resolve().parent.parent / "data" / "circ3.txt")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_vertices_text():
    code, out, _ = run("vertices", CIRC, "--kind", "q")
    assert code == 0
    assert "(1/2,1/2,1/2)" in out.splitlines()
    assert out.count("ray ") == 3


def test_vertices_json_round_trip():
    code, out, _ = run("vertices", CIRC, "--kind", "qbar", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    pts = {tuple(parse_rational(x) for x in v) for v in doc["vertices"]}
    assert len(pts) == 5 and doc["rays"] == [] and doc["empty"] is False


def test_inline_matrix():
    code, out, _ = run("vertices", "--inline", "3 3;1 1 0;0 1 1;1 0 1", "--kind", "qstarbar")
    assert code == 0 and len(out.splitlines()) == 4


def test_skeleton_formats():
    code, dot, _ = run("skeleton", CIRC, "--kind", "qstar", "--method", "both", "--format", "dot")
    assert code == 0 and dot.count(" -- ") == 3
    code, js, _ = run("skeleton", CIRC, "--kind", "qstar", "--format", "json")
    assert json.loads(js)["edges"] == [[0, 1], [0, 2], [1, 2]]
    assert run("skeleton", CIRC, "--kind", "qstar", "--format", "json")[1] == js
    code, text, _ = run("skeleton", CIRC, "--kind", "q")
    assert text.startswith("4 nodes, 3 edges")


@pytest.mark.parametrize("kind,method,expected", [
    ("q", "rank", "not adjacent"),
    ("qbar", "rank", "adjacent"),
    ("qstar", "vrep-lp", "adjacent"),
    ("qstar", "certificate", "adjacent"),
])
def test_adjacent(kind, method, expected):
    code, out, _ = run("adjacent", CIRC, "--kind", kind, "--u", "1,1,0", "--v", "0,1,1", "--method", method)
    assert code == 0
    assert out.splitlines()[0] == expected


def test_adjacent_certificate_line():
    _, out, _ = run("adjacent", CIRC, "--kind", "qstar", "--u", "1,1,0", "--v", "0,1,1",
                    "--method", "certificate")
    assert out.splitlines()[1].startswith("certificate c=")


def test_adjacent_errors():
    assert run("adjacent", CIRC, "--kind", "q", "--u", "1,1", "--v", "0,1,1")[0] == 2
    code, _, err = run("adjacent", CIRC, "--kind", "q", "--u", "1,1,1", "--v", "0,1,1")
    assert code == 2 and "not a vertex" in err


def test_trubin_exit_codes():
    code, out, _ = run("trubin", CIRC, "--sub", "qstar", "--super", "q")
    assert code == 1 and out.startswith("FAILS")
    code, out, _ = run("trubin", CIRC, "--sub", "qstarbar", "--super", "qbar", "--format", "json")
    assert code == 0 and json.loads(out)["holds"] is True


def test_verify_outputs_and_determinism():
    code, one, _ = run("verify", "--suite", "1-6", "--statement", "thm34,cor36", "--jobs", "2")
    assert code == 0
    assert one == run("verify", "--suite", "1-6", "--statement", "thm34,cor36")[1]
    lines = one.splitlines()
    assert len(lines) == 2 * 7
    assert all(json.loads(ln)["verdict"] == "CONFIRMED" for ln in lines)


def test_verify_sources():
    assert run("verify", "--matrix", CIRC, "--statement", "all")[0] == 0
    assert run("verify", "--random", "5,4,4,1/2", "--statement", "cor35")[0] == 0
    code, out, _ = run("verify", "--graph-suite", "1-2", "--statement", "graph-case")
    assert code == 0 and len(out.splitlines()) == 2
    assert run("verify", "--suite", "1-2", "--matrix", CIRC)[0] == 2
    assert run("verify", "--random", "5,4,4", "--statement", "cor35")[0] == 2
    assert run("verify", "--suite", "1-2", "--statement", "bogus")[0] == 2


def test_demo():
    code, out, _ = run("demo", "circulant3")
    assert code == 0 and "Verdict: CONFIRMED" in out
    code, out, _ = run("demo", "circulant3", "--format", "json")
    assert json.loads(out)["statement"] == "TRUBIN_FAIL_RELAX"


def test_input_errors():
    code, _, err = run("vertices", "--inline", "1 2/0 0", "--kind", "q")
    assert code == 2 and "row 1" in err
    assert run("vertices", "--kind", "q")[0] == 2
    assert run("vertices", "/no/such/file", "--kind", "q")[0] == 2
    assert run("bogus")[0] == 2
    assert run("vertices", CIRC, "--kind", "zzz")[0] == 2
