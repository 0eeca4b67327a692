import json

import pytest

from floodit.cli import main


def write(path, text):
    path.write_text(text)
    return str(path)


def test_gen_deterministic(capsys):
    assert main(["gen", "--n", "4", "--colours", "3", "--seed", "9"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--n", "4", "--colours", "3", "--seed", "9"]) == 0
    second = capsys.readouterr().out
    assert first == second
    lines = first.strip().splitlines()
    assert lines[0] == "4" and len(lines) == 3


def test_gen_monochromatic_single_column(capsys):
    assert main(["gen", "--n", "1", "--colours", "1"]) == 0
    out = capsys.readouterr().out
    assert out == "1\na\na\n"


def test_gen_usage_errors(capsys):
    assert main(["gen", "--n", "0", "--colours", "2"]) == 1
    assert main(["gen", "--n", "2", "--colours", "0"]) == 1


def test_solve_monochromatic_both_methods(tmp_path, capsys):
    board = write(tmp_path / "b.txt", "3\na a a\na a a\n")
    for method in ("dp", "bfs", "auto"):
        assert main(["solve", board, "--method", method]) == 0
        assert "value 0" in capsys.readouterr().out


def test_solve_dp_and_bfs_agree(tmp_path, capsys):
    board = write(tmp_path / "b.txt", "2\na b\nb a\n")
    values = {}
    for method in ("dp", "bfs"):
        assert main(["solve", board, "--method", method, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        values[method] = payload["value"]
        assert payload["method"] == method
        assert set(payload) >= {"n", "colours", "method", "value", "millis", "stats"}
    assert values["dp"] == values["bfs"] == 2


def test_solve_emit_sequence_schema(tmp_path, capsys):
    board = write(tmp_path / "b.txt", "4\na b a b\nb a b a\n")
    assert main(["solve", board, "--method", "dp", "--emit-sequence", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["sequence"]) == payload["value"]
    for entry in payload["sequence"]:
        assert set(entry) == {"row", "col", "colour"}
        assert entry["colour"] in ("a", "b")


def test_solve_unknown_target_is_usage_error(tmp_path, capsys):
    board = write(tmp_path / "b.txt", "2\na b\nb a\n")
    assert main(["solve", board, "--target", "zz"]) == 1


def test_solve_target_token(tmp_path, capsys):
    board = write(tmp_path / "b.txt", "2\na b\nb a\n")
    assert main(["solve", board, "--target", "b", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["value"] == 2


def test_solve_parse_error_exit_2(tmp_path, capsys):
    board = write(tmp_path / "b.txt", "2\na b\nb\n")
    assert main(["solve", board]) == 2
    assert main(["solve", str(tmp_path / "missing.txt")]) == 2


def test_reduce_k2(tmp_path, capsys):
    graph = write(tmp_path / "g.txt", "0 1\n")
    out = tmp_path / "board.txt"
    meta = tmp_path / "meta.json"
    assert main(["reduce", graph, "-o", str(out), "--meta", str(meta)]) == 0
    text = out.read_text().splitlines()
    assert text[0] == "14"
    payload = json.loads(meta.read_text())
    assert set(payload) == {"m", "r", "n", "N", "islands", "legend"}
    assert payload["N"] == 5 and payload["n"] == 14


def test_reduce_p3_meta(tmp_path):
    graph = write(tmp_path / "g.txt", "0 1\n1 2\n")
    out = tmp_path / "board.txt"
    meta = tmp_path / "meta.json"
    assert main(["reduce", graph, "-o", str(out), "--meta", str(meta)]) == 0
    payload = json.loads(meta.read_text())
    assert payload["n"] == 40 and payload["N"] == 17


def test_reduce_rejects_isolated_vertex(tmp_path, capsys):
    graph = write(tmp_path / "g.txt", "p 3\n0 1\n")
    assert main(["reduce", graph, "-o", str(tmp_path / "b.txt")]) == 2


def test_verify_reduction(capsys):
    assert main(["verify", "--reduction"]) == 0
    out = capsys.readouterr().out
    assert "PASS reduction K2 -> EQUAL" in out
    assert "PASS reduction P3 -> EQUAL" in out
    assert "PASS reduction K3 -> UNRESOLVED" in out


def test_verify_random(capsys):
    assert main(["verify", "--random", "5", "4", "3", "--seed", "3"]) == 0
    assert "PASS random 5 boards" in capsys.readouterr().out


def test_verify_requires_a_suite(capsys):
    assert main(["verify"]) == 1


def test_verify_exhaustive_over_budget_exits_3(capsys):
    assert main(["verify", "--exhaustive", "5", "5"]) == 3


def test_bench_single_row(capsys):
    assert main(["bench", "--n-range", "3..3", "--colours", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["rows"]) == 1
    row = payload["rows"][0]
    assert row["n"] == 3 and "millis" in row and "keys" in row


def test_bench_range_and_usage(capsys):
    assert main(["bench", "--n-range", "2..4", "--colours", "2"]) == 0
    out = capsys.readouterr().out
    assert len(out.strip().splitlines()) == 4  # header + one row per n
    assert main(["bench", "--n-range", "4..2", "--colours", "2"]) == 1
    assert main(["bench", "--n-range", "x", "--colours", "2"]) == 1


def test_bench_palette_over_cap_exits_3(capsys):
    assert main(["bench", "--n-range", "2..2", "--colours", "40"]) == 3


def test_usage_error_exit_1(capsys):
    assert main([]) == 1
    assert main(["solve"]) == 1
    assert main(["noesuchcommand"]) == 1
