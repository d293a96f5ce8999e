import json

import pytest

from affine_cells.cli import UsageError, main, parse_word


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _err = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_word_syntax():
    assert parse_word("2,0,1,s2", 2) == ([2, 0, 1], 2)
    assert parse_word("", 2) == ([], 0)
    assert parse_word("e", 2) == ([], 0)
    for bad in ["1,s2,0", "x", "3"]:
        with pytest.raises(UsageError):
            parse_word(bad, 2)


def test_group_command(capsys):
    payload = run_json(capsys, "group", "--n", "2", "--word", "0,1", "--max-length", "2")
    assert payload["length"] == 2
    assert payload["layer_sizes"] == [1, 3, 6]


def test_pi_methods_agree(capsys):
    by_generators = run_json(capsys, "pi", "--n", "2", "--lambda", "2,1", "--word", "0,1,2")
    by_paths = run_json(capsys, "pi", "--n", "2", "--lambda", "2,1", "--word", "0,1,2", "--method", "paths")
    assert by_generators["entries"] == by_paths["entries"]
    assert by_generators["basis"] == ["s2", "e", "s2s1"]


def test_leading_and_cell(capsys):
    payload = run_json(capsys, "leading", "--n", "3", "--lambda", "2,2", "--word", "1,3")
    entries = payload["entries"]
    assert len(entries) == 1 and entries[0]["row"] == entries[0]["col"] == 0
    assert run_json(capsys, "cell", "--n", "2", "--word", "")["cell"] == [3]
    code, out, _ = run(capsys, "cell", "--n", "2", "--word", "1,2,1", "--format", "text")
    assert code == 0 and "(1,1,1)" in out


def test_schur_and_mgamma(capsys):
    payload = run_json(capsys, "schur", "--lambda", "2,2", "--gamma", "1,0")
    assert payload["invariant"] is True
    assert len(payload["terms"]) == 2
    payload = run_json(capsys, "mgamma", "--lambda", "4,2", "--gamma", "2,1")
    assert payload["conjugated_tau"] == "s1s4σ^3"
    assert payload["conjugated_tau_length"] == 2


def test_satake_command(capsys):
    payload = run_json(capsys, "satake", "--lambda", "2,1", "--word", "1")
    assert payload["symmetric"] is True
    assert payload["normalized"]["divisor"] == {"0": 1, "2": 1}
    payload = run_json(capsys, "satake", "--lambda", "2,1", "--word", "1", "--kl", "--max-length", "4")
    assert payload["basis"] == "C"


def test_plancherel_command(capsys):
    payload = run_json(capsys, "plancherel", "--n", "2", "--word", "1", "--truncation", "8")
    assert payload["delta_holds"] is True
    assert payload["sum"] == {"0": 1}
    payload = run_json(capsys, "plancherel", "--n", "2", "--lambda", "2,1", "--word", "1", "--word2", "0", "--truncation", "6")
    assert "sum" not in payload


def test_output_is_byte_identical_on_repeat(capsys):
    argv = ["pi", "--n", "3", "--lambda", "2,2", "--word", "0,2,1,s1"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ["cell", "--n", "2", "--word", "7"],
        ["leading", "--n", "2", "--lambda", "1,2", "--word", "1"],
        ["leading", "--n", "3", "--lambda", "2,1", "--word", "1"],
        ["schur", "--lambda", "2,2"],
        ["cache", "stats"],
    ],
)
def test_usage_errors_exit_two(capsys, monkeypatch, argv):
    monkeypatch.delenv("AFFINE_CELLS_CACHE_DIR", raising=False)
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "error" in err


def test_bad_truncation_is_rejected(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["plancherel", "--n", "2", "--word", "1", "--truncation", "0"])
    assert excinfo.value.code == 2


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "generator-matrices", "--format", "text")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "conjugation")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_cache_management(capsys, tmp_path, monkeypatch):
    directory = str(tmp_path)
    run_json(capsys, "satake", "--lambda", "2,1", "--word", "0,1,2", "--kl", "--max-length", "4", "--cache-dir", directory)
    stats = run_json(capsys, "cache", "stats", "--cache-dir", directory)
    assert stats["files"][0]["file"] == "klcache-n2.txt"
    assert stats["files"][0]["elements"] >= 1
    monkeypatch.setenv("AFFINE_CELLS_CACHE_DIR", directory)
    cleared = run_json(capsys, "cache", "clear")
    assert cleared["removed"] == ["klcache-n2.txt"]
    assert run_json(capsys, "cache", "stats")["files"] == []
