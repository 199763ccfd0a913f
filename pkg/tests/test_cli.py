import csv
import io
import json

from supercong.cli import CSV_COLUMNS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--id", "thm_1_1", "--pmax", "37", "--rmin", "-7", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data and all({"elapsed", "seed", "reason"} <= set(d) for d in data)
    assert {d["status"] for d in data} <= {"pass", "skipped"}


def test_unknown_id_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--id", "nosuch")
    assert code == 2 and "nosuch" in err


def test_bad_flags(capsys):
    assert run(capsys, "verify", "--id", "thm_1_1", "--p", "7", "--format", "xml")[0] == 2
    assert run(capsys, "verify", "--id", "thm_1_1", "--p", "7", "--pmax", "11", "--r", "1", "--rmin", "-3")[0] == 2
    assert run(capsys, "verify", "--id", "thm_1_1")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_conjecture_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--id", "conj_4_1", "--pmax", "61", "--rmin", "-9")
    assert code == 0 and "conjectural_pass" in out and "conjectural_fail" not in out


def test_failure_exit_one(capsys):
    code, out, _ = run(capsys, "verify", "--id", "lr_11", "--p", "13", "--prec", "8")
    assert code == 1 and out.startswith("fail")


def test_csv_columns(capsys):
    code, out, _ = run(capsys, "verify", "--id", "thm_1_1", "--p", "5", "--r", "1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == CSV_COLUMNS
    assert rows[1][:6] == ["thm_1_1", "5", "1", "6", "top", "pass"]


def test_gamma_command(capsys):
    assert run(capsys, "gamma", "--p", "7", "--prec", "1", "--x", "1")[1].splitlines()[0] == "6"
    assert run(capsys, "gamma", "--p", "7", "--prec", "1", "--x", "0")[1].splitlines()[0] == "1"
    code, out, _ = run(capsys, "gamma", "--p", "5", "--prec", "2", "--x", "1/3")
    first, second = out.splitlines()
    assert code == 0 and 0 <= int(first) < 25 and "reflection" in second
    assert run(capsys, "gamma", "--p", "5", "--x", "1/5")[0] == 2
    assert run(capsys, "gamma", "--p", "4", "--x", "1")[0] == 2


def test_lemma_commands(capsys):
    assert run(capsys, "lemma", "--id", "2.1", "--trials", "100", "--seed", "42")[0] == 0
    assert run(capsys, "lemma", "--id", "2.6", "--rmin", "-9")[0] == 0
    assert run(capsys, "lemma", "--id", "2.4", "--p", "11", "--trials", "20", "--seed", "7")[0] == 0
    assert run(capsys, "lemma", "--id", "9.9")[0] == 2
    assert run(capsys, "lemma", "--id", "2.1", "--trials", "0")[0] == 2


def test_series_command(capsys):
    code, out, _ = run(capsys, "series", "--family", "cubic", "--r", "-1", "--upper", "2")
    assert code == 0 and "finite_rhs_sum: 7/4" in out
    assert run(capsys, "series", "--family", "cubic", "--r", "3", "--p", "7")[0] == 2


def test_seed_env_and_byte_identical(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("SUPERCONG_SEED", "11")
    out1 = tmp_path / "a.txt"
    out2 = tmp_path / "b.txt"
    main(["lemma", "--id", "3.1", "--p", "7", "--out", str(out1)])
    main(["lemma", "--id", "3.1", "--p", "7", "--out", str(out2)])
    assert out1.read_text() == out2.read_text()
    main(["lemma", "--id", "3.1", "--p", "7", "--format", "json", "--out", str(out1)])
    assert json.loads(out1.read_text())[0]["seed"] == 11
    main(["lemma", "--id", "3.1", "--p", "7", "--seed", "5", "--format", "json", "--out", str(out1)])
    assert json.loads(out1.read_text())[0]["seed"] == 5
    monkeypatch.setenv("SUPERCONG_SEED", "abc")
    assert main(["lemma", "--id", "3.1", "--p", "7"]) == 2


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--pmax", "23")
    assert code == 0 and "summary:" in out
