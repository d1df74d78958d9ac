import json

import pytest

from emptyrect.cli import loglog_slope, main
from emptyrect.geometry import enumerate_maximal_empty
from emptyrect.pointfile import ParseError, parse_points, read_points


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def one_point(tmp_path):
    p = tmp_path / "one.txt"
    p.write_text("B:0,0,10,10\n4,3\n")
    return str(p)


def test_generate_uniform_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(capsys, "generate", "--kind", "uniform", "--n", "8", "--seed", "1", "--out", str(a))[0] == 0
    assert run(capsys, "generate", "--kind", "uniform", "--n", "8", "--seed", "1", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    ps = read_points(a)
    assert len(ps) == 8


def test_generate_empty(capsys):
    code, out, _ = run(capsys, "generate", "--kind", "uniform", "--n", "0")
    assert code == 0 and out == "B:0,0,4096,4096\n"


@pytest.mark.parametrize("k", [8, 12, 16])
def test_generate_staircase_counts(capsys, k):
    code, out, _ = run(capsys, "generate", "--kind", "staircase", "--n", str(2 * k), "--seed", "5")
    assert code == 0
    assert len(enumerate_maximal_empty(parse_points(out))) >= k * k / 4


def test_generate_too_many_points(capsys):
    code, _, err = run(capsys, "generate", "--kind", "uniform", "--n", "50", "--bounds", "0,0,20,20")
    assert code == 2 and "does not fit" in err


def test_generate_grid_adversarial(capsys):
    code, out, _ = run(capsys, "generate", "--kind", "grid-adversarial", "--n", "30", "--seed", "2")
    assert code == 0 and len(parse_points(out)) == 30


def test_query_single_point(capsys, one_point):
    code, out, _ = run(capsys, "query", "--points", one_point, "--at", "2,5")
    assert code == 0
    report = json.loads(out)
    assert report["n"] == 1
    (q,) = report["queries"]
    assert q["rect"] == [0, 3, 10, 10] and q["area"] == 70
    assert set(q) == {"x", "y", "rect", "area", "provenance", "work_units"}
    assert set(report["build"]) == {"stored_cells", "entry_evals", "nodes"}
    # stable JSON: keys sorted
    assert out == json.dumps(report, sort_keys=True, indent=2) + "\n"


def test_query_from_file(tmp_path, capsys, one_point):
    qf = tmp_path / "q.txt"
    qf.write_text("# queries\n2,5\n\n9,1\n")
    code, out, _ = run(capsys, "query", "--points", one_point, "--queries", str(qf))
    assert code == 0
    assert [q["area"] for q in json.loads(out)["queries"]] == [70, 60]


def test_query_outside_bounds_is_usage_error(capsys, one_point):
    code, _, err = run(capsys, "query", "--points", one_point, "--at", "12,5")
    assert code == 2 and "outside" in err


def test_build_report(capsys, tmp_path):
    pts = tmp_path / "u.txt"
    run(capsys, "generate", "--kind", "uniform", "--n", "40", "--seed", "3", "--out", str(pts))
    code, out, _ = run(capsys, "build", "--points", str(pts))
    report = json.loads(out)
    assert code == 0 and report["n"] == 40 and report["build"]["nodes"] > 0


def test_verify_ok(capsys, tmp_path):
    pts = tmp_path / "u48.txt"
    run(capsys, "generate", "--kind", "uniform", "--n", "48", "--seed", "7", "--out", str(pts))
    code, out, _ = run(capsys, "verify", "--points", str(pts), "--count", "100", "--seed", "7")
    assert code == 0
    assert json.loads(out)["mismatches"] == 0


def test_verify_refuses_over_cap(capsys, tmp_path):
    pts = tmp_path / "u.txt"
    run(capsys, "generate", "--kind", "uniform", "--n", "20", "--out", str(pts))
    code, _, err = run(capsys, "verify", "--points", str(pts), "--verify-cap", "10")
    assert code == 2 and "refusing" in err


def test_verify_reports_mismatch(capsys, tmp_path, monkeypatch):
    from emptyrect.engine.index import Index, QueryResult
    from emptyrect.geometry import Rect

    pts = tmp_path / "u.txt"
    run(capsys, "generate", "--kind", "uniform", "--n", "10", "--seed", "1", "--bounds", "0,0,50,50", "--out", str(pts))
    # a deliberately broken index always answers the whole box
    monkeypatch.setattr(Index, "query", lambda self, q: QueryResult(Rect(0, 50, 0, 50, "broken"), None))
    code, out, err = run(capsys, "verify", "--points", str(pts), "--count", "5")
    assert code == 1
    assert "first_counterexample" in json.loads(out)
    assert "mismatch at" in err


@pytest.mark.parametrize(
    "text, line",
    [("B:0,0,10,10\n1,2\n3\n", 3), ("B:0,0,10\n", 1), ("1,2\nB:0,0,10,10\n", 2), ("B:0,0,10,10\n\n1,a\n", 3)],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_points(text)
    assert exc.value.lineno == line
    assert f":{line}:" in str(exc.value)


def test_malformed_file_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("B:0,0,10,10\n4,x\n")
    code, _, err = run(capsys, "build", "--points", str(bad))
    assert code == 2 and "bad.txt:2" in err


def test_duplicate_coordinate_exit_code(capsys, tmp_path):
    bad = tmp_path / "dup.txt"
    bad.write_text("B:0,0,10,10\n4,3\n4,5\n")
    code, _, err = run(capsys, "build", "--points", str(bad))
    assert code == 2 and "x=4" in err


def test_missing_bounds(capsys, tmp_path):
    f = tmp_path / "nob.txt"
    f.write_text("4,3\n")
    assert run(capsys, "build", "--points", str(f))[0] == 2
    code, out, _ = run(capsys, "build", "--points", str(f), "--bounds", "0,0,10,10")
    assert code == 0 and json.loads(out)["n"] == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--kind", "nope", "--n", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    assert main(["build"]) == 2


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "64,128,256", "--count", "10")
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert [r["n"] for r in report["rows"]] == [64, 128, 256]
    assert report["slopes"]["entry_evals_vs_n"] <= 1.35


def test_monge_fuzz(capsys):
    code, out, _ = run(capsys, "monge-fuzz", "--count", "30", "--seed", "4")
    assert code == 0 and json.loads(out)["mismatches"] == 0


def test_loglog_slope():
    assert loglog_slope([1, 2, 4, 8], [3, 12, 48, 192]) == pytest.approx(2.0)
