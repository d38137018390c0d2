"""Command-line interface: reports, round trips, exit codes, determinism."""

import json

from facering.cli import EXIT_INPUT_ERROR, EXIT_OK, main
from facering.verification import CheckResult, ledger_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_bowtie_json(capsys):
    code, out, _ = run_cli(capsys, "analyze", "bowtie", "--field", "q", "--format", "json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["singularity_dimension"] == 0
    assert report["singular_faces"] == [[3]]
    assert report["cm_in_codim"] == {"0": True, "1": True, "2": False, "3": False, "4": False}
    assert report["is_cm"] is False and report["is_buchsbaum"] is False


def test_analyze_rp2_over_f2(capsys):
    code, out, _ = run_cli(capsys, "analyze", "rp2_6", "--field", "fp:2", "--format", "json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["singularity_dimension"] == -1
    assert report["is_buchsbaum"] is True


def test_analyze_octahedron(capsys):
    code, out, _ = run_cli(capsys, "analyze", "octahedron", "--format", "json")
    report = json.loads(out)
    assert report["is_cm"] is True
    assert report["singularity_dimension"] == "-inf"


def test_analyze_accepts_files(tmp_path, capsys):
    path = tmp_path / "cx.json"
    path.write_text(json.dumps({"n": 3, "facets": [[1, 2], [1, 3], [2, 3]]}))
    code, out, _ = run_cli(capsys, "analyze", str(path), "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["singularity_dimension"] == "-inf"


def test_lc_rows(capsys):
    code, out, _ = run_cli(capsys, "lc", "cycle3", "--format", "json")
    rows = json.loads(out)["rows"]
    by_i = {row["i"]: row for row in rows}
    assert by_i[2]["pole_order"] == 2
    assert by_i[2]["coefficients"][:4] == [1, 3, 6, 9]
    assert by_i[1]["pole_order"] == 0 and by_i[1]["coefficients"] == [0] * 7
    code, out, _ = run_cli(capsys, "lc", "bowtie", "--format", "json")
    by_i = {row["i"]: row for row in json.loads(out)["rows"]}
    assert by_i[2]["pole_order"] == 1
    assert by_i[3]["pole_order"] == 3
    code, out, _ = run_cli(capsys, "lc", "pair_edges", "--format", "json")
    by_i = {row["i"]: row for row in json.loads(out)["rows"]}
    assert by_i[1]["series"] == {"numerator": [1], "denom_power": 0}
    assert by_i[1]["pole_order"] == 0


def test_predict_command(capsys):
    code, out, _ = run_cli(capsys, "predict", "bowtie", "--m", "1", "--format", "json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["finite_local_cohomology"] is True
    dims = {(e["l"], e["i"]): e["dim"] for e in report["table"]["entries"]}
    assert [dims[(2, i)] for i in (1, 2, 3)] == [0, 2, 4]
    code, out, _ = run_cli(capsys, "predict", "bowtie", "--m", "0", "--format", "json")
    assert json.loads(out)["finite_local_cohomology"] is False
    code, out, _ = run_cli(capsys, "predict", "octahedron", "--m", "0", "--format", "json")
    assert json.loads(out)["finite_local_cohomology"] is True


def test_predict_tsv_agrees_with_json(capsys):
    _, out_json, _ = run_cli(capsys, "predict", "bowtie", "--m", "1", "--format", "json")
    _, out_tsv, _ = run_cli(capsys, "predict", "bowtie", "--m", "1", "--format", "tsv")
    entries = json.loads(out_json)["table"]["entries"]
    lines = out_tsv.strip().splitlines()
    assert lines[0] == "l\ti\tdim"
    cells = [tuple(map(int, line.split("\t"))) for line in lines[1:]]
    assert cells == [(e["l"], e["i"], e["dim"]) for e in entries]


def test_reduce_command(capsys):
    code, out, _ = run_cli(capsys, "reduce", "cycle3", "--m", "2", "--cutoff", "4", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["result"]["dims"] == [1, 1, 1, 0, 0]
    code, out, _ = run_cli(capsys, "reduce", "octahedron", "--m", "3", "--cutoff", "4", "--format", "json")
    assert json.loads(out)["result"]["dims"] == [1, 3, 3, 1, 0]


def test_reduce_with_trials(capsys):
    code, out, _ = run_cli(
        capsys, "reduce", "bowtie", "--m", "3", "--trials", "5",
        "--field", "fp:32003", "--seed", "2", "--cutoff", "5", "--format", "json",
    )
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["determinate"] is True
    assert len(report["runs"]) == 5


def test_verify_corpus_small_checks(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "corpus", "--check", "theorem-main", "--format", "json",
    )
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["passed"] is True
    assert report["summary"]["failed"] == 0
    assert all(rec["check"] == "theorem-main" for rec in report["checks"])


def test_verify_single_check_with_ranges(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "bowtie", "--check", "lemma-equality",
        "--l", "3", "--m", "1", "--i", "1..4", "--format", "json",
    )
    assert code == EXIT_OK
    report = json.loads(out)
    recs = report["checks"]
    assert {rec["params"]["l"] for rec in recs} == {3}
    assert {rec["params"]["m"] for rec in recs} == {1}
    assert {rec["params"]["i"] for rec in recs} == {1, 2, 3, 4}
    for rec in recs:
        assert rec["values"]["bruteforce"] == rec["values"]["formula"]


def test_verify_artinian_check_pinned_m(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "cycle3", "--check", "artinian-vs-sqfree", "--m", "1",
        "--format", "json",
    )
    assert code == EXIT_OK
    recs = json.loads(out)["checks"]
    by_degree = {rec["params"]["degree"]: rec["values"] for rec in recs}
    for j in (2, 3, 4, 5):
        assert by_degree[j]["reduction_rank_oracle"] == 3
        assert by_degree[j]["sqfree_formula"] == 3


def test_verify_cm_anchor_check(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "octahedron", "--check", "cm-anchor", "--format", "json",
    )
    assert code == EXIT_OK
    rec = json.loads(out)["checks"][0]
    assert rec["values"]["reduction"] == [1, 3, 3, 1, 0]
    code, out, _ = run_cli(
        capsys, "verify", "bowtie", "--check", "cm-anchor", "--format", "json",
    )
    assert code == EXIT_OK
    assert "skipped" in json.loads(out)["checks"][0]["values"]


def test_verify_exit_code_reflects_ledger():
    good = CheckResult("demo", "cx", "q", {}, {"lhs": 1, "rhs": 1}, True)
    bad = CheckResult("demo", "cx", "q", {}, {"lhs": 1, "rhs": 2}, False)
    assert ledger_json([good])["passed"] is True
    assert ledger_json([good, bad])["passed"] is False
    assert ledger_json([good, bad])["summary"] == {"total": 2, "failed": 1}


def test_verify_json_deterministic(capsys):
    args = [
        "verify", "bowtie", "--field", "fp:32003", "--seed", "11",
        "--m-max", "2", "--format", "json",
    ]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2


def test_sqfree_command(tmp_path, capsys):
    data = {
        "n": 3,
        "dims": [
            {"F": [0, 0, 0], "dim": 1},
            {"F": [1, 0, 0], "dim": 1},
            {"F": [0, 1, 0], "dim": 1},
            {"F": [0, 0, 1], "dim": 1},
            {"F": [1, 1, 0], "dim": 1},
            {"F": [1, 0, 1], "dim": 1},
            {"F": [0, 1, 1], "dim": 1},
        ],
    }
    path = tmp_path / "sq.json"
    path.write_text(json.dumps(data))
    code, out, _ = run_cli(capsys, "sqfree", str(path), "--m", "1", "--cutoff", "5", "--format", "json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["module_hilbert"] == [1, 3, 6, 9, 12, 15]
    assert [e["dim"] for e in report["quotient_hilbert"]] == [3, 3, 3, 3]
    assert "caveat" in report


def test_missing_file_is_input_error(capsys):
    code, _, err = run_cli(capsys, "analyze", "/no/such/file.json")
    assert code == EXIT_INPUT_ERROR
    assert "error" in err


def test_bad_json_is_input_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "analyze", str(path))
    assert code == EXIT_INPUT_ERROR
    assert "line" in err


def test_nonprime_field_rejected(capsys):
    code, _, err = run_cli(capsys, "analyze", "cycle3", "--field", "fp:6")
    assert code == EXIT_INPUT_ERROR
    assert "prime" in err


def test_bad_vertex_index_is_input_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "facets": [[1, 5]]}))
    code, _, err = run_cli(capsys, "analyze", str(path))
    assert code == EXIT_INPUT_ERROR
    assert "out of range" in err


def test_corpus_only_for_verify(capsys):
    code, _, err = run_cli(capsys, "analyze", "corpus")
    assert code == EXIT_INPUT_ERROR


def test_reports_reparse_identically(capsys):
    for argv in (
        ["analyze", "bowtie", "--format", "json"],
        ["lc", "cycle3", "--format", "json"],
        ["predict", "bowtie", "--m", "1", "--format", "json"],
        ["reduce", "cycle3", "--m", "1", "--format", "json"],
    ):
        _, out, _ = run_cli(capsys, *argv)
        report = json.loads(out)
        assert json.loads(json.dumps(report, sort_keys=True)) == report
