import json

import pytest

from lebnagell.cli import main
from lebnagell.equation import Solution
from lebnagell.report import EXIT_DISCREPANCY, EXIT_OK, EXIT_USAGE, RunReport, cmd_reduce, cmd_verify_tables
from lebnagell.tables import TableError, default_tables_path, ingest_exceptional, ingest_tables, solutions_of

HEADER = "table,n,alpha,beta,gamma,z,a,b,c,x,y\n"


def write(tmp_path, body, header=HEADER):
    p = tmp_path / "t.csv"
    p.write_text(header + body, encoding="utf-8")
    return p


def test_shipped_row_counts():
    rows = ingest_tables()
    assert len(rows) == 116
    assert len(solutions_of(rows, 1, 2)) == 54
    assert len(solutions_of(rows, 3)) == 18
    assert [sum(r.table_id == t for r in rows) for t in range(1, 7)] == [21, 33, 18, 15, 16, 13]
    assert rows[0].anchor == "Table 1, row 1"


def test_largest_row_present():
    assert Solution.of(912668635, 940897, 3, 8, 2, 3) in solutions_of(ingest_tables(), 2)


def test_exceptional_list():
    assert len(ingest_exceptional()) == 6


def test_single_row_file(tmp_path):
    rows = ingest_tables(write(tmp_path, "1,3,0,0,1,1,0,0,1,4,3\n"))
    assert len(rows) == 1 and rows[0].solution == Solution.of(4, 3, 0, 0, 1, 3)


def test_corrupted_row_reports_residual(tmp_path):
    with pytest.raises(TableError) as err:
        ingest_tables(write(tmp_path, "1,3,0,0,1,1,0,0,1,5,3\n"))
    assert err.value.residual == -9 and err.value.line == 2


@pytest.mark.parametrize(
    "body, header",
    [
        ("1,3,0,0,1,1,0,0,1,4\n", HEADER),
        ("1,3,0,0,1,1,0,0,one,4,3\n", HEADER),
        ("1,3,0,0,1,1,0,0,1,4,3\n", "n,a,b,c,x,y\n"),
        ("1,3,0,0,1,1,0,0,1,6,3\n", HEADER),  # gcd(6, 3) = 3, and the equation fails too
        ("1,3,0,0,0,1,3,0,0,1,1\n", HEADER),  # y = 1
    ],
)
def test_malformed_files(tmp_path, body, header):
    with pytest.raises(TableError):
        ingest_tables(write(tmp_path, body, header))


def test_non_coprime_row(tmp_path):
    # 2^2 + 2^2 = 2^3 holds, but gcd(2, 2) = 2
    with pytest.raises(TableError, match="gcd"):
        ingest_tables(write(tmp_path, "1,3,2,0,0,1,2,0,0,2,2\n"))


def test_reduce_example():
    r = cmd_reduce(3, 6, 0, 1)
    assert r.details["model"]["equation"] == "V^2 = U^3 - 11"
    assert r.details["z"] == 2
    assert Solution.of(5, 9, 6, 0, 1, 3) in r.solutions
    assert r.exit_status == EXIT_OK


def test_reduce_rejects_bad_solution():
    r = cmd_reduce(3, 0, 0, 1, 5, 3)
    assert r.exit_status == EXIT_DISCREPANCY


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_cli_enumerate_n5(capsys):
    code, doc = run_cli(capsys, "enumerate", "--n", "5", "--y-max", "100")
    assert code == 0
    assert set(doc) >= {"command", "config", "solutions", "findings"}
    assert doc["solutions"] == [
        {"x": "1", "y": "3", "a": "1", "b": "0", "c": "2", "n": "5"},
        {"x": "241", "y": "9", "a": "3", "b": "0", "c": "2", "n": "5"},
    ]


def test_cli_reduce(capsys):
    code, doc = run_cli(capsys, "reduce", "--n", "3", "--a", "6", "--b", "0", "--c", "1")
    assert code == 0
    assert doc["details"]["model"]["A"] == "11" and doc["details"]["z"] == "2"


def test_cli_lucas_d2(capsys):
    code, doc = run_cli(capsys, "lucas", "--d", "2", "--box", "50")
    assert code == 0
    sols = {(s["x"], s["y"], s["a"], s["b"], s["c"], s["n"]) for s in doc["solutions"]}
    assert sols == {("1", "3", "1", "0", "2", "5"), ("241", "9", "3", "0", "2", "5")}
    assert {c["verdict"] for c in doc["details"]["candidates"]} == {"rejected-b-zero"}


def test_cli_smooth_scan(capsys):
    code, doc = run_cli(capsys, "smooth-scan", "--n-max", "9", "--y-max", "60")
    assert code == 0
    assert doc["details"]["counts"]["8"] == "0" and doc["details"]["counts"]["9"] == "0"


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--n", "2", "--y-max", "10"],
        ["enumerate", "--n", "3", "--y-max", "1"],
        ["enumerate", "--n", "3"],
        ["reduce", "--n", "5", "--a", "0", "--b", "0", "--c", "0"],
        ["lucas", "--d", "3"],
        ["lucas", "--d", "2", "--box", "0"],
        ["enumerate", "--n", "3", "--y-max", "10", "--workers", "0"],
        ["frobnicate"],
    ],
)
def test_cli_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == EXIT_USAGE


def test_cli_out_file_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["enumerate", "--n", "4", "--y-max", "200", "--workers", "2", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""
    assert b"\r" not in a.read_bytes()


def test_exit_status_rule():
    r = RunReport("x", {})
    r.add("ok", "a", "fine")
    r.add("paper-typo", "b", "typo")
    assert r.exit_status == EXIT_OK
    r.add("discrepancy", "c", "bad")
    assert r.exit_status == EXIT_DISCREPANCY


def test_verify_tables_quick():
    r = cmd_verify_tables(quick=True)
    assert r.exit_status == EXIT_OK
    typos = [f for f in r.findings if f.severity == "paper-typo"]
    assert {f.anchor for f in typos} == {"Table 1, row 3", "Table 4, row 1"}
    assert all(f.witness == {"claimed": 2, "recomputed": 3} for f in typos)
    n6 = [s for s in r.solutions if s.n == 6]
    assert set(n6) == {Solution.of(5, 3, 6, 0, 1, 6), Solution.of(37, 5, 4, 4, 1, 6), Solution.of(117, 5, 4, 0, 2, 6)}
    assert len(n6) == 3
    listed = [s for s in solutions_of(ingest_tables(), 1, 2) if s.y <= 10**4]
    assert set(listed) <= set(r.solutions)


def test_verify_tables_flags_tampered_tables(tmp_path):
    # drop one Table 3 row: the search then finds an unlisted solution
    lines = default_tables_path().read_text(encoding="utf-8").splitlines(keepends=True)
    kept = [ln for ln in lines if not ln.startswith("3,4,3,1,1,")]
    assert len(kept) < len(lines)
    p = tmp_path / "t.csv"
    p.write_text("".join(kept), encoding="utf-8")
    r = cmd_verify_tables(quick=True, tables_path=p)
    assert r.exit_status == EXIT_DISCREPANCY
    assert any(f.anchor == "Table 3 (n=4)" and f.severity == "discrepancy" for f in r.findings)


@pytest.mark.slow
def test_verify_tables_full_reports_unlisted_cubic():
    r = cmd_verify_tables()
    bad = [f for f in r.findings if f.severity == "discrepancy"]
    assert [(f.anchor, f.witness["solution"]) for f in bad] == [
        ("Tables 1+2 (n=3)", Solution.of(3729455, 24049, 4, 10, 1, 3))
    ]
    assert r.exit_status == EXIT_DISCREPANCY
    assert sum(f.severity == "paper-typo" for f in r.findings) >= 1
