import csv
import io
import json

import pytest

from quasieinstein.cli import emit_report, main, parse_rational, InputError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_rational():
    assert parse_rational("1/2") == pytest.approx(0.5)
    assert parse_rational("0.7").denominator == 10
    assert parse_rational("-3") == -3
    for bad in ("1/0", "abc", "", "1//2"):
        with pytest.raises(InputError):
            parse_rational(bad)


def test_solve_su2():
    code, out, _ = run("solve", "--case", "SU2_R0", "--p", "0")
    assert code == 0
    assert "a0 = 2\n" in out and "lambda = 0\n" in out and "nontrivial" in out


def test_solve_json():
    code, out, _ = run("solve", "--case", "SPK_UK", "--k", "2", "--a1", "-1", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["a_k"] == ["11/1", "-1/1"] and doc["lambda"] == "-1/4"


def test_solve_tables():
    code, out, _ = run("solve", "--case", "F4_TABLE1", "--json")
    doc = json.loads(out)
    assert code == 0 and len(doc["discrepancies"]) >= 2
    code, out, _ = run("solve", "--case", "G2_TABLE2")
    assert code == 0 and "a0 = -1/2" in out and "p = 9/4" in out


def test_interval():
    assert run("interval", "--case", "E6_SO10SO2")[1] == "(17/31, 1)\n"
    assert run("interval", "--case", "SUK1_S(k=3)")[1] == "empty\n"
    code, out, _ = run("interval", "--case", "SPK_UK", "--k", "2", "--json")
    doc = json.loads(out)
    assert doc["interval"]["lo"] == "2/7" and doc["lorentz"]["ordered"] is True


def test_certify_pass_and_fail():
    code, out, _ = run("certify", "--case", "SPK_UK", "--k", "2", "--a1", "1/2", "--m", "2")
    assert code == 0 and out.strip().endswith("pass") and "lambda_fit = 0.25" in out
    code, out, _ = run("certify", "--case", "SPK_UK(k=2)", "--a1", "1/2", "--m", "2", "--tol", "1e-30")
    assert code == 1 and out.strip().endswith("FAIL")


def test_certify_dual_and_params():
    code, out, _ = run("certify", "--case", "SPK_UK(k=2)", "--params", "11,-1", "--m", "11", "--dual", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["signature"] == [1, 9] and doc["pass"]
    code, out, _ = run("certify", "--case", "SU2_R0", "--p", "-2/3", "--m", "3")
    assert code == 0


def test_checks():
    code, out, _ = run("checks", "--case", "SO2K_UK", "--k", "4")
    assert code == 0 and "killing_split" in out
    code, out, _ = run("checks", "--case", "SO2K_UK", "--k", "4", "--tol", "1e-40")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("solve", "--case", "NOPE", "--a1", "1"),
        ("solve", "--case", "SPK_UK", "--k", "2", "--a1", "1/x"),
        ("solve", "--case", "SPK_UK", "--k", "2"),
        ("solve", "--case", "SPK_UK", "--k", "2", "--a1", "0"),
        ("solve", "--case", "SPK_UK(k=2)", "--k", "2", "--a1", "1"),
        ("solve", "--case", "SU2_R0", "--p", "2"),
        ("interval", "--case", "SU_L1L2", "--l1", "2", "--l2", "2"),
        ("certify", "--case", "E6_SO10SO2", "--a1", "4/5", "--m", "1"),
        ("certify", "--case", "SPK_UK", "--k", "2", "--a1", "1/2", "--m", "-1"),
        ("certify", "--case", "SPK_UK", "--k", "2", "--params", "3,1/2", "--m", "1"),
        ("checks", "--case", "F4_TABLE1"),
        ("report",),
        ("catalog", "--max-rank", "1"),
        ("frobnicate",),
        (),
    ],
)
def test_input_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and err.startswith("error:") and err.count("\n") == 1


def test_catalog():
    code, out, _ = run("catalog", "--json")
    doc = json.loads(out)
    assert code == 0
    ids = [c["id"] for c in doc["cases"]]
    assert "SPK_UK(k=2)" in ids and "G2_TABLE2" in ids
    assert set(doc["cases"][0]) == {"id", "params", "n", "s", "c", "d", "realizable"}
    code, out, _ = run("catalog")
    assert "u(2) ⊂ sp(2)" in out


def test_empty_report():
    doc = emit_report([])
    assert doc["summary"] == {"pass_count": 0, "fail_count": 0, "discrepancy_count": 0}
    assert doc["entries"] == []


def test_report_json_deterministic(tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run("report", "--all", "--out", str(path))
    assert code == 0 and out == ""
    text = path.read_text()
    code2, out2, _ = run("report", "--all")
    assert out2 == text
    doc = json.loads(text)
    assert doc["summary"]["fail_count"] == 0 and doc["summary"]["discrepancy_count"] >= 2
    entries = {e["case"]: e for e in doc["entries"]}
    g2 = entries["G2_TABLE2"]
    assert {tuple(s["a_k"]) + (s["p"],) for s in g2["solutions"]} >= {("-1/2", "1/10", "9/4")}
    kinds = {d["kind"] for d in entries["F4_TABLE1"]["discrepancies"]}
    assert {"printed_solution_slot_order", "r_b1_biinvariant"} <= kinds
    assert text == json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def test_report_csv():
    code, out, _ = run("report", "--all", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    by = {r["case"]: r for r in rows}
    assert by["E6_SO10SO2"]["lo"] == "17/31" and by["E6_SO10SO2"]["hi"] == "1/1"
    assert by["SUK1_S(k=3)"]["empty"] == "True"
    assert all(r["case"] not in ("SU2_R0", "F4_TABLE1") for r in rows)


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "quasieinstein", "interval", "--case", "E7_E6SO2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "(28/53, 1)\n"
