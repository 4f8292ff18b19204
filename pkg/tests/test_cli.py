"""CLI subcommands: exit codes, deterministic reports, the shipped corpus."""

import json
import pathlib
import subprocess
import sys

from quadlie.cli import main

CORPUS = pathlib.Path(__file__).resolve().parents[1] / "src" / "quadlie" / "corpus"


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def corpus_path(name: str) -> str:
    return str(CORPUS / name)


def test_check_clean_h1(capsys):
    code, out, err = run_cli(["check", corpus_path("h1.algebra.json")], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["jacobi_violations"] == []
    assert report["center_dim"] == 1
    assert report["derived_dim"] == 1
    assert report["nilpotent"] is True


def test_check_flags_bad_metric(tmp_path, capsys):
    doc = json.loads((CORPUS / "h1.algebra.json").read_text())
    doc["metric"] = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    bad = tmp_path / "h1_bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run_cli(["check", str(bad)], capsys)
    assert code == 1
    report = json.loads(out)
    assert report["metric_violations"]


def test_check_rejects_malformed_rational(tmp_path, capsys):
    doc = json.loads((CORPUS / "h1.algebra.json").read_text())
    doc["brackets"][0]["terms"][0]["c"] = "1/0"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, err = run_cli(["check", str(bad)], capsys)
    assert code == 2
    assert "c" in err


def test_construct_matches_corpus_bytes(capsys):
    for path in sorted(CORPUS.glob("*.construction.json")):
        expected = CORPUS / path.name.replace(".construction.", ".algebra.")
        code, out, _ = run_cli(["construct", str(path)], capsys)
        assert code == 0
        assert out == expected.read_text(encoding="utf-8"), path.name


def test_construct_determinism(capsys):
    path = corpus_path("build_sl2.construction.json")
    code1, out1, _ = run_cli(["construct", path], capsys)
    code2, out2, _ = run_cli(["construct", path], capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_construct_precondition_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "kind": "extend_heisenberg",
                "parameters": {"m": 1, "phi": [["0", "0"], ["0", "0"]]},
            }
        )
    )
    code, out, err = run_cli(["construct", str(bad)], capsys)
    assert code == 2
    assert "invertible" in err


def test_analyze_h1_phi(capsys):
    code, out, _ = run_cli(["analyze", corpus_path("h1_phi.algebra.json")], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["recognizer"]["verdict"] == "extended_heisenberg"
    assert report["recovery"]["s_dim"] == 0
    assert report["recovery"]["round_trip_exact"] is True
    assert report["quotient_metric"]["exists"] is True
    assert report["complement"]["exists"] is True
    assert report["nilradical_theorem"]["applicable"] is True
    assert report["nilradical_theorem"]["passed"] is True


def test_analyze_decomposable(capsys):
    code, out, _ = run_cli(
        ["analyze", corpus_path("build_abelian_line.algebra.json")], capsys
    )
    assert code == 0
    report = json.loads(out)
    assert report["recognizer"]["verdict"] == "decomposable"


def test_analyze_not_applicable(capsys):
    code, out, _ = run_cli(["analyze", corpus_path("coadjoint_h1.algebra.json")], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["recognizer"]["verdict"] == "not_applicable"


def test_analyze_requires_metric(capsys):
    code, out, err = run_cli(
        ["analyze", corpus_path("five_dim_trace_zero.algebra.json")], capsys
    )
    assert code == 2
    assert "metric" in err


def test_analyze_deterministic(capsys):
    args = ["analyze", corpus_path("build_sl2.algebra.json"), "--seed", "5"]
    code1, out1, _ = run_cli(args, capsys)
    code2, out2, _ = run_cli(args, capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_analyze_with_given_ideal(capsys):
    code, out, _ = run_cli(
        ["analyze", corpus_path("h1_phi.algebra.json"), "--ideal", "1,2,3"], capsys
    )
    assert code == 0
    report = json.loads(out)
    assert report["heisenberg_ideal"]["source"] == "given"
    assert report["heisenberg_ideal"]["found"] is True
    assert report["heisenberg_ideal"]["m"] == 1


def test_analyze_with_invalid_given_ideal(capsys):
    """A given ideal that fails validation is reported, not fatal."""
    code, out, _ = run_cli(
        ["analyze", corpus_path("h1_phi.algebra.json"), "--ideal", "0,1,2"], capsys
    )
    assert code == 0
    report = json.loads(out)
    assert report["heisenberg_ideal"] == {"found": False, "source": "given"}
    assert "recovery" not in report
    assert report["recognizer"]["verdict"] == "extended_heisenberg"


def test_analyze_ideal_index_out_of_range(capsys):
    code, _, err = run_cli(
        ["analyze", corpus_path("h1_phi.algebra.json"), "--ideal", "1,2,9"], capsys
    )
    assert code == 2
    assert "out of range" in err


def test_analyze_reports_missing_quotient_metric(capsys):
    """Over the small ideal of the rotation-core build, the quotient admits
    no invariant metric and no complement subalgebra exists."""
    code, out, _ = run_cli(
        [
            "analyze",
            corpus_path("build_rotation_core.algebra.json"),
            "--ideal",
            "3,4,5",
        ],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["quotient_metric"] == {"exists": False}
    assert report["complement"] == {"exists": False}
    # the same algebra, seen whole, is an extended Heisenberg over h_2
    assert report["recognizer"]["verdict"] == "extended_heisenberg"
    assert report["nilradical"]["dim"] == 5


def test_roundtrip_h1_phi(capsys):
    code, out, _ = run_cli(
        ["roundtrip", corpus_path("h1_phi.algebra.json"), "--ideal", "1,2,3"], capsys
    )
    assert code == 0
    report = json.loads(out)
    assert report["equal"] is True
    assert report["s_dim"] == 0
    assert report["core"]["dim"] == 0


def test_roundtrip_build_sl2(capsys):
    code, out, _ = run_cli(
        ["roundtrip", corpus_path("build_sl2.algebra.json"), "--ideal", "4,5,6"],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["equal"] is True
    assert report["s_dim"] == 3
    assert report["core"]["dim"] == 3


def test_roundtrip_seeded_base_change(tmp_path, capsys):
    """A base-changed build fixture still round-trips exactly via the CLI.

    The base change mixes the core-and-d block only, so the Heisenberg
    ideal keeps its coordinate span and stays expressible as an index list.
    """
    import random

    from fixtures import build_sl2_fixture
    from quadlie.documents import AlgebraDocument, dumps_document
    from quadlie.exactla import Matrix
    from quadlie.quadform import transport_quadratic
    from quadlie.randomized import random_unimodular

    rng = random.Random(77)
    q = build_sl2_fixture()
    block = random_unimodular(rng, 4)  # acts on (s1, s2, s3, d)
    rows = []
    for i in range(7):
        row = [0] * 7
        if i < 4:
            for j in range(4):
                row[j] = block.entry(i, j)
        else:
            row[i] = 1
        rows.append(row)
    moved = transport_quadratic(q, Matrix(rows, 7))
    doc = AlgebraDocument("moved_build", moved.algebra, moved.metric)
    path = tmp_path / "moved.json"
    path.write_text(dumps_document(doc))
    code, out, _ = run_cli(["roundtrip", str(path), "--ideal", "4,5,6"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["equal"] is True
    assert report["s_dim"] == 3


def test_roundtrip_rejects_non_ideal(capsys):
    code, out, err = run_cli(
        ["roundtrip", corpus_path("h1_phi.algebra.json"), "--ideal", "0,1,2"], capsys
    )
    assert code == 2
    assert "ideal" in err


def test_roundtrip_flags_invalid_metric(tmp_path, capsys):
    doc = json.loads((CORPUS / "h1_phi.algebra.json").read_text())
    doc["metric"][1][2] = "7"
    doc["metric"][2][1] = "7"
    bad = tmp_path / "bad_metric.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run_cli(["roundtrip", str(bad), "--ideal", "1,2,3"], capsys)
    assert code == 1
    assert json.loads(out)["metric_violations"]


def test_forms_h1(capsys):
    code, out, _ = run_cli(["forms", corpus_path("h1.algebra.json")], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 3
    hb = 2
    for gram in report["forms"]:
        assert all(gram[hb][t] == "0" for t in range(3))


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        ["check", corpus_path("h1.algebra.json"), "--out", str(target)], capsys
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["dim"] == 3


def test_console_script_runs():
    result = subprocess.run(
        [sys.executable, "-m", "quadlie.cli", "check", corpus_path("h1.algebra.json")],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["dim"] == 3


def test_missing_file_is_input_error(capsys):
    code, _, err = run_cli(["check", "/nonexistent/path.json"], capsys)
    assert code == 2
    assert "cannot read" in err
