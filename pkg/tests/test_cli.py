import io
import json
import subprocess
import sys

import pytest

from excycle.cli import main
from excycle.constructions import cactus, complete, complete_bipartite, h1_graph
from excycle.graph6 import g6_decode, g6_encode


def run(*argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def run_json(*argv, **kw):
    code, text = run(*argv, **kw)
    doc = json.loads(text)
    assert doc["schema_version"] == 1
    assert set(doc) == {"schema_version", "command", "params", "result", "timing"}
    return code, doc


def test_formula():
    code, text = run("formula", "--n", "10", "--k", "3")
    assert code == 0 and "ex               25" in text
    code, doc = run_json("formula", "--n", "5", "--k", "2", "--json")
    assert code == 0 and doc["result"]["ex"] == 7
    assert doc["result"]["extremal_family"] == ["B(5;4,2)", "H1(5,2)"]
    code, doc = run_json("formula", "--n", "6", "--k", "1", "--nu", "1", "--json")
    assert doc["result"]["ex"] == 9 and doc["result"]["ex_matching"] == 5


@pytest.mark.parametrize("argv", [("formula", "--n", "0", "--k", "2"), ("formula", "--n", "5"), ("bogus",), ()])
def test_invalid_input_exit_2(argv):
    assert run(*argv)[0] == 2


def test_construct():
    code, text = run("construct", "h1", "--n", "5", "--k", "2")
    assert code == 0 and g6_decode(text.strip()) == h1_graph(5, 2)
    assert g6_decode(run("construct", "cactus", "--blocks", "4,2")[1].strip()) == cactus([4, 2])
    assert g6_decode(run("construct", "turan", "--n", "7", "--p", "2")[1].strip()) == complete_bipartite(4, 3)
    code, doc = run_json("construct", "family", "--n", "6", "--k", "2", "--json")
    assert [d["label"] for d in doc["result"]] == ["B(6;4,3)", "H1(6,2)", "K_{3,3}"]
    assert all(d["edges"] == 9 for d in doc["result"])


@pytest.mark.parametrize(
    "argv",
    [("construct", "h1", "--n", "5"), ("construct", "cactus", "--blocks", "4,x"), ("construct", "h2", "--n", "6", "--k", "3")],
)
def test_construct_invalid(argv):
    assert run(*argv)[0] == 2


def test_analyze():
    code, doc = run_json("analyze", g6_encode(complete(5)), "--json")
    assert code == 0 and doc["result"][0]["cycle_spectrum"] == [3, 4, 5]
    code, doc = run_json("analyze", g6_encode(cactus([4, 4])), "--json")
    info = doc["result"][0]
    assert info["blocks"] == [4, 4] and info["cycle_spectrum"] == [3, 4] and info["cut_vertices"] == [0]
    assert run("analyze", "garbage")[0] == 2
    code, text = run("analyze", "Bw")
    assert code == 0 and "circumference    3" in text


def test_analyze_stdin(monkeypatch):
    lines = "\n".join(g6_encode(g) for g in (complete(3), complete_bipartite(2, 3))) + "\n"
    code, doc = run_json("analyze", "-", "--json", stdin=lines, monkeypatch=monkeypatch)
    assert code == 0 and [r["edges"] for r in doc["result"]] == [3, 6]
    assert run("analyze", "-", stdin="", monkeypatch=monkeypatch)[0] == 2


def test_search():
    code, doc = run_json("search", "--n", "5", "--k", "2", "--all")
    assert code == 0 and doc["result"]["optimum"] == 7 and len(doc["result"]["extremal_graphs"]) == 2
    code, doc = run_json("search", "--n", "4", "--k", "2")
    assert doc["result"]["optimum"] == 6
    code, doc = run_json("search", "--n", "10", "--k", "3", "--all")
    assert doc["result"]["optimum"] == 25 and len(doc["result"]["extremal_graphs"]) == 2
    for s in doc["result"]["extremal_graphs"]:
        assert g6_decode(s).edge_count() == 25


def test_search_inconclusive_and_env(monkeypatch):
    code, doc = run_json("search", "--n", "9", "--k", "3", "--node-limit", "5")
    assert code == 3 and doc["result"]["complete"] is False
    monkeypatch.setenv("EXCYCLE_NODE_LIMIT", "5")
    assert run("search", "--n", "9", "--k", "3")[0] == 3
    monkeypatch.setenv("EXCYCLE_NODE_LIMIT", "nonsense")
    assert run("search", "--n", "9", "--k", "3")[0] == 2


def test_search_threads_same_result():
    a = run_json("search", "--n", "9", "--k", "2", "--all", "--threads", "1")[1]
    b = run_json("search", "--n", "9", "--k", "2", "--all", "--threads", "3")[1]
    assert a["result"] == b["result"]


def test_verify():
    code, text = run("verify", "--k", "2", "--n-max", "10")
    assert code == 0 and text.count("PASS") == 10
    code, doc = run_json("verify", "--k", "3", "--n-max", "10", "--json")
    assert code == 0 and doc["result"]["all_pass"]
    assert run("verify", "--k", "2", "--n-max", "3")[0] == 0
    assert run("verify", "--k", "2", "--n-max", "13")[0] == 2


def test_verify_inconclusive():
    assert run("verify", "--k", "3", "--n-min", "9", "--n-max", "9", "--node-limit", "5")[0] == 3


def test_ledger_and_sweep():
    code, doc = run_json("ledger", "--k-max", "8", "--n-max", "120", "--json")
    # the k = 2 equalities between g and h2 beyond (5,2), (6,2) are reported
    assert code == 1
    items = {i["name"]: i for i in doc["result"]["items"]}
    assert all(v["k"] == 2 for v in items["g_vs_h2"]["violations"])
    assert run("ledger", "--k-max", "8", "--n-max", "10")[0] == 2
    code, doc = run_json("sweep", "--n-max", "7", "--json")
    assert code == 0 and doc["result"]["violations"] == 0
    assert run("sweep", "--n-max", "99")[0] == 2


def test_enumerate():
    code, text = run("enumerate", "--n", "4")
    lines = text.split()
    assert code == 0 and len(lines) == 11
    assert len({g6_decode(s) for s in lines}) == 11
    assert run("enumerate", "--n", "10")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "excycle", "formula", "--n", "5", "--k", "2", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["ex"] == 7
