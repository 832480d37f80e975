import json
import subprocess
import sys

import pytest

from clique_extremal.cli import main
from clique_extremal.constructions import construct_v8
from clique_extremal.graph import complete_graph, decode_graph6, encode_graph6, format_edgelist


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["bound", "nm", "--n", "14", "--m", "31"], "269"),
        (["bound", "planar", "--n", "124", "--m", "366"], "976"),
        (["bound", "k33free", "--n", "5"], "32"),
        (["bound", "k33free", "--n", "6"], "124/3"),
        (["bound", "degenerate-edges", "--n", "14", "--m", "31", "--d", "8"], "2861/8"),
        (["bound", "degree", "--n", "7", "--m", "6", "--delta", "2"], "16"),
        (["bound", "zykov-total", "--n", "6", "--k", "3"], "27"),
    ],
)
def test_bound_values(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_bound_json_agrees_with_text(capsys):
    for argv in (["bound", "nm", "--n", "14", "--m", "31"], ["bound", "k33free", "--n", "7"], ["bound", "planar-census", "--n", "124"]):
        _, text, _ = run(capsys, *argv)
        _, js, _ = run(capsys, *argv, "--json")
        values = json.loads(js)["values"]
        lines = text.split()
        if len(values) == 1:
            assert lines == [values["value"]]
        else:
            assert dict(zip(lines[::2], lines[1::2])) == values


def test_open_problem(capsys):
    code, out, _ = run(capsys, "bound", "open-problem", "--k", "42", "--json")
    data = json.loads(out)
    assert code == 0 and data["exceeds"] is True
    assert int(data["values"]["lhs"]) == 3**42


def test_bound_precondition_exit_code(capsys):
    code, _, err = run(capsys, "bound", "planar", "--n", "5", "--m", "2")
    assert code == 2 and "m >= 3" in err


def test_construct_v8_edgelist(capsys):
    code, out, _ = run(capsys, "construct", "v8", "--format", "edgelist")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "8 12" and len(lines) == 13


def test_construct_stacked_planar_verify(capsys):
    code, out, err = run(capsys, "construct", "stacked-planar", "--n", "124", "--verify")
    assert code == 0 and "976" in err and "ok" in err
    assert decode_graph6(out.strip()).m == 366


def test_construct_nm_is_k5(capsys):
    code, out, _ = run(capsys, "construct", "nm", "--n", "5", "--m", "10")
    assert code == 0 and decode_graph6(out.strip()) == complete_graph(5)


def test_construct_to_file(capsys, tmp_path):
    target = tmp_path / "g.txt"
    code, out, _ = run(capsys, "construct", "multipartite", "--parts", "2,2,2", "-o", str(target), "--verify")
    assert code == 0 and out == ""
    assert decode_graph6(target.read_text().strip()).m == 12


def test_count_inputs(capsys, monkeypatch, tmp_path):
    _, out, _ = run(capsys, "count", stdin=format_edgelist(construct_v8()), monkeypatch=monkeypatch)
    assert json.loads(out)["total"] == "21"
    _, out, _ = run(capsys, "count", stdin=encode_graph6(complete_graph(5)).decode() + "\n", monkeypatch=monkeypatch)
    assert json.loads(out)["total"] == "32"
    f = tmp_path / "e.txt"
    f.write_text("3 0\n")
    _, out, _ = run(capsys, "count", str(f))
    data = json.loads(out)
    assert data["total"] == "4" and data["counts"] == ["1", "3", "0", "0"]


def test_count_bad_input(capsys, monkeypatch):
    code, _, err = run(capsys, "count", stdin="3 2\n0 1\n", monkeypatch=monkeypatch)
    assert code == 2 and err.startswith("error:")


def test_analyze(capsys, monkeypatch):
    _, out, _ = run(capsys, "analyze", stdin=format_edgelist(construct_v8()), monkeypatch=monkeypatch)
    data = json.loads(out)
    assert (data["degeneracy"], data["planar"], data["hadwiger"]) == (3, False, 4)
    _, out, _ = run(capsys, "analyze", "--multipartite", "2,2,2,2")
    assert json.loads(out)["hadwiger"] == 6
    _, out, _ = run(capsys, "analyze", stdin="C~\n", monkeypatch=monkeypatch)
    assert json.loads(out)["planar"] is True


def test_analyze_budget_exit_code(capsys, monkeypatch):
    code, out, _ = run(capsys, "analyze", "--max-branch-nodes", "2", stdin=format_edgelist(construct_v8()), monkeypatch=monkeypatch)
    assert code == 3 and "errors" in json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nm", "--n", "6"],
        ["verify", "class", "--n", "6", "--class", "planar"],
        ["verify", "zykov", "--n", "6", "--k", "3"],
        ["verify", "class", "--n", "5", "--class", "degenerate", "--d", "2"],
        ["verify", "planar-census", "--n", "5"],
    ],
)
def test_verify_commands(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert all(json.loads(line)["match"] for line in out.splitlines())


def test_verify_limit_exit_code(capsys):
    code, _, _ = run(capsys, "verify", "nm", "--n", "9")
    assert code == 2


def test_console_script_output_is_byte_identical():
    argv = [sys.executable, "-m", "clique_extremal", "verify", "zykov", "--n", "5", "--k", "2"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.count(b"\n") == 4
