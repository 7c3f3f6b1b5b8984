import json

import pytest

from cellcrystal.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_graph_unique_source(capsys, tmp_path):
    out = tmp_path / "g.json"
    code, _ = run(capsys, "graph", "--family", "A", "--rank", "2", "--realization", "potential",
                  "--depth", "4", "--json", str(out), "--dot", str(tmp_path / "g.dot"))
    assert code == EXIT_OK
    data = json.loads(out.read_text())
    targets = {e["target"] for e in data["edges"]}
    assert [n["id"] for n in data["nodes"] if n["id"] not in targets] == [0]
    assert (tmp_path / "g.dot").read_text().startswith("digraph")


def test_graph_depth_zero(capsys):
    code, cap = run(capsys, "graph", "--family", "G", "--rank", "2", "--depth", "0")
    assert code == EXIT_OK and cap.out.count("[label=") == 1


def test_invalid_family_is_usage_error(capsys):
    code, cap = run(capsys, "graph", "--family", "Q", "--rank", "2")
    assert code == EXIT_USAGE and "error" in cap.err


def test_missing_argument_is_usage_error(capsys):
    assert run(capsys, "graph")[0] == EXIT_USAGE


def test_verify_pass_and_injected_fault(capsys):
    assert run(capsys, "verify", "catalog-vs-oracle", "--family", "A", "--rank", "3")[0] == EXIT_OK
    code, cap = run(capsys, "verify", "catalog-vs-oracle", "--family", "A", "--rank", "3", "--inject")
    assert code == EXIT_FAIL and "[FAIL] catalog-vs-oracle: A3 k=1" in cap.out


def test_verify_ks_g2(capsys):
    assert run(capsys, "verify", "ks", "--family", "G", "--rank", "2", "--depth", "5")[0] == EXIT_OK


def test_potential_g2_laurent(capsys):
    code, cap = run(capsys, "potential", "--family", "G", "--rank", "2", "--emit", "laurent")
    assert code == EXIT_OK and cap.out.strip().count(" + ") == 13


def test_potential_tropical_json(capsys, tmp_path):
    out = tmp_path / "p.json"
    assert run(capsys, "potential", "--family", "A", "--rank", "2", "--emit", "tropical",
               "--json", str(out))[0] == EXIT_OK
    assert json.loads(out.read_text())["forms"] == [[0, 0, 1], [0, 1, -1], [1, 0, 0]]


def test_potential_e8_is_partial(capsys):
    code, cap = run(capsys, "potential", "--family", "E", "--rank", "8")
    assert code == EXIT_OK and cap.out.startswith("partial")


def test_potential_spin_unsupported(capsys):
    assert run(capsys, "potential", "--family", "B", "--rank", "2", "--word", "2121")[0] == EXIT_USAGE


def test_braid_transport(capsys):
    code, cap = run(capsys, "braid", "--family", "A", "--rank", "2", "--point", "1,2,3", "--to", "212")
    assert code == EXIT_OK and json.loads(cap.out)["target"] == [2, 1, 2]


def test_connect_json_is_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert run(capsys, "connect", "--family", "A", "--rank", "2", "--box", "2", "--pairs", "10",
                   "--seed", "7", "--json", str(p))[0] == EXIT_OK
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_connect_refuses_exceptional(capsys):
    assert run(capsys, "connect", "--family", "F", "--rank", "4", "--box", "1", "--pairs", "1")[0] == EXIT_USAGE


def test_budget_exit_code(capsys, monkeypatch):
    from cellcrystal import crystalcore

    monkeypatch.setattr(crystalcore, "NODE_CAP", 10)
    assert run(capsys, "graph", "--family", "A", "--rank", "3", "--depth", "5")[0] == EXIT_BUDGET
