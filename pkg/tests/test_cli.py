"""Command-line surface: outputs, formats, exit codes, cache behaviour."""

import json

import pytest

from splintbr import cli


@pytest.fixture
def run(capsys):
    def _run(*argv):
        rc = cli.main(list(argv))
        out = capsys.readouterr().out
        return rc, out
    return _run


def test_dim_command(run):
    rc, out = run("dim", "G2", "3", "2")
    assert rc == 0 and out == "1547\n"
    rc, out = run("dim", "A2", "0", "0")
    assert rc == 0 and out == "1\n"
    rc, out = run("dim", "F4", "0", "0", "0", "1")
    assert rc == 0 and out == "26\n"


def test_branch_bad_arity_exit_2(run):
    rc, _ = run("branch", "IV", "1", "2", "3", "--rule")
    assert rc == 2
    rc, _ = run("branch", "V_F4_D4", "1", "2", "--oracle")
    assert rc == 2


def test_dim_bad_input_exit_2(run):
    rc, _ = run("dim", "E8", "1")
    assert rc == 2
    rc, _ = run("dim", "A2", "1")  # wrong coordinate count
    assert rc == 2
    rc, _ = run("dim", "A2", "1", "-2")
    assert rc == 2


def test_table_fig1a(run):
    rc, out = run("table", "fig1a", "--format", "json")
    grid = json.loads(out)["grid"]
    assert rc == 0
    assert grid[0][:4] == [1, 3, 6, 10]
    assert grid[6][6] == 343


def test_table_fig1b_corner(run):
    rc, out = run("table", "fig1b", "--format", "json")
    grid = json.loads(out)["grid"]
    assert rc == 0 and grid[3][3] == 4096 and grid[0] == [1, 7, 27, 77]


def test_table_fig2a_tsv(run):
    rc, out = run("table", "fig2a", "--format", "tsv")
    rows = [list(map(int, line.split("\t"))) for line in out.strip().splitlines()]
    assert rc == 0
    assert rows[0] == [0, 0, 1, 1, 1, 1, 0]
    assert rows[2][2] == 3
    assert rows[6] == [0] * 7


def test_branch_rule_and_oracle_match(run):
    rc1, out1 = run("branch", "IV", "0", "1", "--rule", "--format", "json")
    rc2, out2 = run("branch", "IV", "0", "1", "--oracle", "--format", "json")
    assert rc1 == rc2 == 0
    a, b = json.loads(out1), json.loads(out2)
    assert a["summands"] == b["summands"]
    assert a["coefficient_sum"] == 3


def test_branch_series_flag(run):
    rc, out = run("branch", "V_F4_D4", "--series", "last", "1", "--rule",
                  "--format", "json")
    assert rc == 0
    obj = json.loads(out)
    assert obj["lambda"] == [0, 0, 0, 1]
    assert {"nu": [0, 0, 0, 0], "m": 2} in obj["summands"]


def test_branch_json_byte_identical(run):
    _, out1 = run("branch", "II3", "1", "2", "1", "--oracle", "--format", "json")
    _, out2 = run("branch", "II3", "1", "2", "1", "--oracle", "--format", "json")
    assert out1 == out2


def test_branch_ascii_hexagon(run):
    rc, out = run("branch", "IV", "3", "2", "--rule", "--format", "ascii")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 6  # beta = 5 .. 0
    assert lines[-1].split() == [".", ".", "1", "1", "1", "1"]
    assert lines[3].split() == ["1", "2", "3", "3", "2", "1"]


def test_verify_theorem_case_exit_0(run):
    rc, out = run("verify", "IV", "--max", "2")
    assert rc == 0
    assert "all agree" in out


def test_verify_schur_exit_0(run):
    rc, _ = run("verify", "schur", "--max", "3")
    assert rc == 0


def test_verify_conjecture_reports(run):
    rc, out = run("verify", "III", "--max", "1")
    assert rc == 0
    assert "conjecture" in out


def test_verify_wcf_small(run):
    rc, out = run("verify", "wcf", "--max", "1")
    assert rc == 0
    assert "F4" in out


def test_schur_layer_out_of_range_exit_2(run):
    rc, _ = run("schur", "layer", "4", "3", "2")
    assert rc == 2


def test_verify_json_reports(run):
    rc, out = run("verify", "II2", "--max", "1", "--format", "json")
    assert rc == 0
    obj = json.loads(out)
    assert obj["case"] == "II2"
    assert all(rep["equal"] for rep in obj["reports"])


def test_schur_command(run):
    rc, out = run("schur", "h", "0", "0", "--format", "json")
    assert rc == 0
    assert json.loads(out) == [{"a": 1, "b": 0, "c": -1}, {"a": 1, "b": 1, "c": 1}]
    rc, out = run("schur", "theorem", "3", "2")
    assert rc == 0 and "ok" in out


def test_sums_command(run):
    rc, out = run("sums", "IV", "2", "2", "--format", "json")
    assert rc == 0
    obj = json.loads(out)
    assert obj["equal"] and obj["aux_dim"] == 27


def test_char_command(run):
    rc, out = run("char", "A2", "0", "1", "--format", "json")
    assert rc == 0
    obj = json.loads(out)
    assert obj["dim"] == 3
    assert obj["char"]["terms"][0]["w2"] == [-2, -2]


def test_cache_cold_vs_warm_identical(run, tmp_path):
    from splintbr.characters import clear_memo, configure_disk_cache
    try:
        cache = str(tmp_path / "store")
        clear_memo()
        rc1, cold = run("--cache-dir", cache, "branch", "V_F4_D4",
                        "--series", "first", "2", "--oracle", "--format", "json")
        clear_memo()
        rc2, warm = run("--cache-dir", cache, "branch", "V_F4_D4",
                        "--series", "first", "2", "--oracle", "--format", "json")
        clear_memo()
        configure_disk_cache(None)
        rc3, off = run("branch", "V_F4_D4", "--series", "first", "2",
                       "--oracle", "--format", "json")
        assert rc1 == rc2 == rc3 == 0
        assert cold == warm == off
        assert (tmp_path / "store" / "F4.jsonl").exists()
    finally:
        configure_disk_cache(None)
        clear_memo()


def test_cache_env_variable(run, tmp_path, monkeypatch):
    from splintbr.characters import clear_memo, configure_disk_cache
    try:
        monkeypatch.setenv("SPLINT_CACHE_DIR", str(tmp_path / "env_store"))
        clear_memo()
        rc, _ = run("char", "G2", "1", "1", "--format", "json")
        assert rc == 0
        assert (tmp_path / "env_store" / "G2.jsonl").exists()
    finally:
        configure_disk_cache(None)
        clear_memo()
