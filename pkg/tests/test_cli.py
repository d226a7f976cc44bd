import json

import pytest

from greedy_tamari.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_count(capsys):
    assert run(capsys, "count", "--m", "2", "--n", "2", "--flavor", "greedy") == \
        (0, "brute: 6\nformula: 6\nPASS\n")
    assert run(capsys, "count", "--m", "1", "--n", "1", "--flavor", "ordinary") == \
        (0, "brute: 1\nformula: 1\nPASS\n")
    code, out = run(capsys, "count", "--m", "1", "--n", "5", "--output", "json")
    assert code == 0 and json.loads(out)["brute"] == 288


def test_count_resource_cap(capsys, monkeypatch):
    monkeypatch.setenv("TAMARI_MAX_NODES", "10")
    assert main(["count", "--m", "1", "--n", "5"]) == 2


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--m", "0", "--n", "2"])
    assert exc.value.code == 2


def test_series_text(capsys):
    code, out = run(capsys, "series", "--equation", "greedy", "--m", "2", "--order", "3")
    assert code == 0 and out == "t^1: x^2 ; t^2: 3x^4+2x^3+x^2\n"
    code, out = run(capsys, "series", "--equation", "constellation", "--m", "2", "--order", "3")
    assert "t^2: 3x^2+3x" in out


def test_series_verify(capsys):
    code, out = run(capsys, "series", "--equation", "greedy-q", "--m", "2", "--order", "3",
                    "--verify", "enumeration")
    assert code == 0 and out.strip().endswith("PASS")


def test_series_json(capsys):
    code, out = run(capsys, "series", "--equation", "greedy-system", "--m", "1", "--order", "4",
                    "--output", "json")
    body = json.loads(out)
    assert code == 0 and set(body["series"]) == {"J_0", "J_1", "J_2"}


def test_verify_json_and_csv(capsys):
    code, out = run(capsys, "verify", "--target", "labelled", "--m", "1", "--n", "2")
    body = json.loads(out)
    assert code == 0 and body["pass"]
    assert body["reports"][0]["checks"][0]["lhs"] == "4"
    code, out = run(capsys, "verify", "--target", "conjecture", "--m", "1", "--nmax", "6",
                    "--output", "csv", "--threads", "1")
    assert code == 0 and out.count("\n") > 10


def test_verify_failure_exit_code(capsys):
    code, out = run(capsys, "verify", "--target", "appendix", "--m", "1")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_export_dot(capsys):
    code, out = run(capsys, "export", "--m", "1", "--n", "3", "--flavor", "greedy", "--format", "dot")
    assert code == 0 and out.count("[label=") == 5 and out.count("->") == 5
    _, out = run(capsys, "export", "--m", "1", "--n", "4", "--format", "dot")
    assert '"11001100"' in out and '"11011000"' in out


def test_export_json(capsys):
    code, out = run(capsys, "export", "--m", "2", "--n", "2", "--format", "json")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 6
    assert {json.loads(l)["lower"] for l in lines} == {"100100", "101000", "110000"}


def test_export_csv_and_file(tmp_path, capsys):
    target = tmp_path / "h.csv"
    assert main(["--out", str(target), "export", "--m", "2", "--n", "3", "--format", "csv",
                 "--statistic", "contacts"]) == 0
    assert target.read_text() == "statistic,value,count\ncontacts,0,22\ncontacts,1,23\ncontacts,2,9\n"
    assert main(["--out", str(tmp_path / "missing" / "x"), "export", "--m", "1", "--n", "2",
                 "--format", "dot"]) == 2


def test_determinism(capsys):
    _, a = run(capsys, "verify", "--target", "monoid", "--m", "1", "--nmax", "3")
    _, b = run(capsys, "verify", "--target", "monoid", "--m", "1", "--nmax", "3")
    assert a == b
