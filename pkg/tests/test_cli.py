import json
import subprocess
import sys

import pytest

from zrspace.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), (json.loads(err) if err.strip() else None)


def test_closure_cons_adds_generic(capsys):
    code, out, _ = call(capsys, "closure", "--kind", "cons", "--base", "q-z",
                        "--set", '{"mode":"cofinite","places":[],"generic":false}')
    assert code == 0 and out == {"mode": "cofinite", "places": [], "generic": True}


def test_kr_member(capsys):
    code, out, _ = call(capsys, "kr-member", "--base", "q-z", "--Y", "all", "--h", "1/2")
    assert code == 0 and out == {"member": False, "witness": "p:2"}
    code, out, _ = call(capsys, "kr-member", "--Y", "all", "--h", "(2+T)/(1+2*T)")
    assert out == {"member": True, "witness": None}


def test_star_eq(capsys):
    code, out, _ = call(capsys, "star-eq", "--Y1", "all", "--Y2", "all+K")
    assert code == 0 and out == {"equal": True}
    code, out, _ = call(capsys, "star-eq", "--Y1", '{"mode":"finite","places":["p:2"]}',
                        "--Y2", '{"mode":"finite","places":["p:3"]}')
    assert out["equal"] is False and out["witness"]["exponents"] in ({"p:2": -1}, {"p:3": -1})


def test_subset_from_file(tmp_path, capsys):
    f = tmp_path / "y.json"
    f.write_text('{"mode": "finite", "places": ["irr:x+1"], "generic": false}')
    code, out, _ = call(capsys, "closure", "--kind", "gen", "--base", "fpx-fpx:2", "--set", str(f))
    assert code == 0 and out == {"mode": "finite", "places": ["irr:x+1"], "generic": True}


def test_limit_and_bx(capsys):
    _, out, _ = call(capsys, "limit", "--set", "all", "--ultrafilter", "free")
    assert out == {"ultrafilter": "free", "limit": "K", "center": "(0)"}
    _, out, _ = call(capsys, "limit", "--set", "all", "--ultrafilter", "p:5")
    assert out["limit"] == "p:5" and out["center"] == "(5)"
    _, out, _ = call(capsys, "bx", "--x", "3/2", "--x", "1/5")
    assert out["open"] == {"mode": "cofinite", "places": ["p:2", "p:5"], "generic": True}


def test_intersect_and_phi(capsys):
    _, out, _ = call(capsys, "intersect", "--set", "all", "--x", "3/2", "--x", "4")
    assert out["members"] == {"3/2": False, "4": True}
    _, out, _ = call(capsys, "phi-pullback", "--h", "(2+T)/3")
    assert sorted(out["F"]) == [["1", "1/2", "2/3"], ["1", "1/3", "2"]]


def test_star_ops(capsys):
    _, out, _ = call(capsys, "star-apply", "--Y", '{"mode":"finite","places":["p:2","p:3"]}', "--ideal", "ideal:[6]")
    assert out["result"]["exceptions"] == {"p:2": 1, "p:3": 1}
    _, out, _ = call(capsys, "star-complete", "--Y", "all")
    assert out["witness"] == {"mode": "cofinite", "places": [], "generic": True}
    _, out, _ = call(capsys, "vacant", "--base", "fpx-fpx:2")
    assert out["passed"] is True
    _, out, _ = call(capsys, "kr-axioms", "--base", "qx-qx", "--Y", "all", "--samples", "3")
    assert out["axioms"]["passed"] and out["content"]["passed"]


def test_poset(capsys):
    P = '{"elements":["a","b","c"],"leq":[["a","b"],["a","c"]]}'
    _, out, _ = call(capsys, "poset", "--poset", P, "--op", "zar", "--set", '["a"]')
    assert out == {"op": "zar", "result": ["a", "b", "c"]}
    _, out, _ = call(capsys, "poset", "--poset", P, "--op", "dual")
    assert out["leq"] == [["b", "a"], ["c", "a"]]
    code, _, err = call(capsys, "poset", "--poset", '{"elements":["a","b"],"leq":[["a","b"],["b","a"]]}', "--op", "check")
    assert code == 1 and err["error"] == "domain"


def test_suite_json(capsys):
    code, out, _ = call(capsys, "suite", "vacancy", "--seed", "7")
    assert code == 0 and out["passed"] and out["seed"] == 7 and out["suites"][0]["checked"] > 0


@pytest.mark.parametrize(
    "argv,code,kind",
    [
        (["bogus"], 2, "parse"),
        ([], 2, "parse"),
        (["kr-member", "--Y", "all", "--h", "1/("], 2, "parse"),
        (["kr-member", "--Y", "{not json", "--h", "1"], 2, "parse"),
        (["closure", "--kind", "cons", "--base", "zz", "--set", "all"], 2, "parse"),
        (["kr-member", "--Y", "empty", "--h", "1"], 1, "domain"),
        (["bx", "--x", "0"], 1, "domain"),
        (["star-apply", "--base", "fpx-fp:2", "--Y", "all", "--ideal", "ideal:[x]"], 1, "domain"),
        (["closure", "--kind", "cons", "--set", '{"mode":"finite","places":["p:4"]}'], 1, "domain"),
    ],
)
def test_errors_are_structured(capsys, argv, code, kind):
    got, out, err = call(capsys, *argv)
    assert got == code and out is None
    assert err["error"] == kind and err["message"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zrspace", "star-eq", "--Y1", "all", "--Y2", "all+K"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"equal": True}
    proc = subprocess.run([sys.executable, "-m", "zrspace", "nope"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and "usage" in json.loads(proc.stderr)["message"]
