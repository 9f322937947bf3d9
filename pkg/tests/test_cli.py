import csv
import io
import json

from orbitconst.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_real_forms_sp(capsys):
    code, out, _ = run(capsys, "real-forms", "--group", "sp", "--n", "2")
    assert code == 0
    assert "(-1,-1)" in out and "(1,-1)" in out and "(1,1)" in out
    assert out.count("form ") == 3


def test_real_forms_so_odd_two_forms(capsys):
    code, out, _ = run(capsys, "real-forms", "--group", "so-odd",
                       "--p", "2", "--q", "1")
    assert code == 0
    assert out.count("form ") == 2


def test_real_forms_bad_params(capsys):
    code, _, err = run(capsys, "real-forms", "--group", "su", "--p", "0",
                       "--q", "3")
    assert code == 2
    assert "error" in err


def test_real_forms_json_tableau(capsys):
    code, out, _ = run(capsys, "real-forms", "--group", "so-odd",
                       "--p", "2", "--q", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["weightedDynkin"] == [1, 0, 1, 0]
    first = doc["forms"][0]
    assert first["h"] == ["2", "1", "1", "0"]
    assert first["tableau"][0] == "+-+"


def test_constant_su_both(capsys):
    code, out, _ = run(capsys, "constant", "--group", "su", "--p", "2",
                       "--q", "3", "--form", "2", "--method", "both",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    form = doc["forms"][0]
    assert form["cClosed"] == 2 and form["cBrute"] == 2 and form["agree"]
    assert all("/" not in x or len(x.split("/")) == 2
               for x in form["lambdaUsed"][0])


def test_constant_so_odd_third_form_zero(capsys):
    code, out, _ = run(capsys, "constant", "--group", "so-odd", "--p", "2",
                       "--q", "2", "--form", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["forms"][0]["cClosed"] == 0
    assert doc["forms"][0]["cBrute"] == 0


def test_constant_so_star_closed(capsys):
    code, out, _ = run(capsys, "constant", "--group", "so-star", "--n", "4",
                       "--form", "2", "--method", "closed", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["forms"][0]["cClosed"] == -2
    assert "cBrute" not in doc["forms"][0]


def test_constant_nonexistent_form(capsys):
    code, _, err = run(capsys, "constant", "--group", "sp", "--n", "2",
                       "--form", "9")
    assert code == 2 and "error" in err


def test_constant_term_cap_exit(capsys):
    code, _, err = run(capsys, "constant", "--group", "so-odd", "--p", "3",
                       "--q", "4", "--form", "3", "--term-cap", "16")
    assert code == 2
    assert "subsets" in err


def test_table_sp5_csv(capsys):
    code, out, _ = run(capsys, "table", "--group", "sp", "--n", "5",
                       "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "group"
    assert len(rows) == 1 + 6
    constants = [int(r[-1]) for r in rows[1:]]
    assert constants == [1, -1, -2, 2, 1, -1]


def test_table_all_families_json(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert {c["case"]["family"] for c in doc["cases"]} == \
        {"su", "sp", "so-odd", "so-even", "so-star"}
    for entry in doc["cases"]:
        for form in entry["forms"]:
            assert set(form) >= {"index", "label", "h", "N", "cClosed",
                                 "formula"}


def test_table_latex(capsys):
    code, out, _ = run(capsys, "table", "--group", "so-even", "--p", "2",
                       "--q", "2", "--format", "latex")
    assert code == 0
    assert out.startswith(r"\begin{tabular}")
    assert r"\binom" in out or "2^" in out
    assert out.count(r"\\") >= 5


def test_table_deterministic(capsys):
    _, first, _ = run(capsys, "table", "--group", "sp", "--n", "4",
                      "--format", "json")
    _, second, _ = run(capsys, "table", "--group", "sp", "--n", "4",
                       "--format", "json")
    assert first == second


def test_constant_method_brute(capsys):
    code, out, _ = run(capsys, "constant", "--group", "sp", "--n", "3",
                       "--method", "brute", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert all("cBrute" in f for f in doc["forms"])


def test_constant_disagreement_exits_1(capsys, monkeypatch):
    import orbitconst.cli as cli
    monkeypatch.setattr(cli, "constant_closed_form", lambda case, form: 999)
    code, out, _ = run(capsys, "constant", "--group", "sp", "--n", "2",
                       "--form", "1")
    assert code == 1
    assert "NO" in out


def test_verify_small_budget(capsys):
    code, out, _ = run(capsys, "verify", "--max-rank", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert [c["id"] for c in doc["criteria"]] == list(range(1, 10))


def test_verify_inject_fault(capsys):
    code, out, _ = run(capsys, "verify", "--max-rank", "2", "--inject-fault")
    assert code == 1
    assert "FAIL" in out
