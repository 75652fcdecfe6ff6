import json

import pytest

from symmetroids import __version__
from symmetroids.cli import analyze_pencil, main
from symmetroids.pencil import parse_pencil
from symmetroids.report import FAIL, PARTIAL, PASS, CheckResult, VerificationReport, emit_report, parse_report

from test_pencil import PADDED

BASE_CURVE = """n=3
A0:
1 0 0 0
0 0 0 0
0 0 0 0
0 0 0 0
A1:
0 0 0 0
0 1 0 0
0 0 0 0
0 0 0 0
A2:
0 0 1/2 0
0 0 0 1/2
1/2 0 0 0
0 1/2 0 0
A3:
0 0 0 1/2
0 0 -1/2 0
0 -1/2 0 0
1/2 0 0 0
"""


def test_json_round_trip():
    r = VerificationReport("demo", seed=4)
    r.add(CheckResult("a", PASS, {"x": [1, 2]}, 0.5))
    r.add(CheckResult("b", PARTIAL, {}, 0.1, ["careful"]))
    back = parse_report(emit_report(r, "json"))
    assert back == r
    data = json.loads(emit_report(r, "json"))
    assert set(data) == {"id", "checks", "seed", "version"}
    assert set(data["checks"][0]) == {"claim", "status", "witness", "wall_time", "warnings"}
    assert data["version"] == __version__


def test_empty_report_passes():
    r = VerificationReport("empty")
    assert r.all_pass and r.exit_code() == 0
    assert "0/0" in emit_report(r)


def test_status_validation_and_exit_code():
    with pytest.raises(ValueError):
        CheckResult("a", "MAYBE")
    r = VerificationReport("x", [CheckResult("a", PASS), CheckResult("b", FAIL)])
    assert r.exit_code() == 1
    assert "FAILURES PRESENT" in emit_report(r)


def test_verify_exit_zero_and_json(capsys):
    assert main(["verify", "double-plane", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["id"] == "double-plane"
    assert all(c["status"] == PASS for c in data["checks"])


def test_verify_unknown_id_exit_two(capsys):
    assert main(["verify", "no-such-example"]) == 2
    assert "unknown example id" in capsys.readouterr().err


def test_verify_lambda_pattern(capsys):
    assert main(["verify", "lambda-family(2)"]) == 0
    assert "lambda-family(2)" in capsys.readouterr().out


def test_list_examples(capsys):
    assert main(["list-examples"]) == 0
    out = capsys.readouterr().out
    for eid in ("double-plane", "max-smooth-1", "max-smooth-2", "double-P3", "two-P3s"):
        assert eid in out


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_analyze_parse_error_exit_two(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("n=2\nA0:\n1 0 0\n")
    assert main(["analyze", str(f)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_analyze_missing_file_exit_two(tmp_path):
    assert main(["analyze", str(tmp_path / "missing.txt")]) == 2


def test_analyze_padded_pencil_is_cone(tmp_path, capsys):
    f = tmp_path / "padded.txt"
    f.write_text(PADDED)
    assert main(["analyze", str(f), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    cone = next(c for c in data["checks"] if c["claim"].startswith("cone test"))
    assert cone["witness"]["is_cone"]
    base = next(c for c in data["checks"] if c["claim"].startswith("base locus"))
    assert base["witness"]["points"] == [] and base["witness"]["total_length"] == 0


DIAGONAL = """n=3
A0:
1 0 0 0
0 0 0 0
0 0 0 0
0 0 0 0
A1:
0 0 0 0
0 1 0 0
0 0 0 0
0 0 0 0
A2:
0 0 0 0
0 0 0 0
0 0 1 0
0 0 0 0
A3:
0 0 0 0
0 0 0 0
0 0 0 0
0 0 0 1
"""


def test_analyze_diagonal_pencil():
    # the web is spanned by y0^2, ..., y3^2, which have no common zero
    r = analyze_pencil(parse_pencil(DIAGONAL))
    checks = {c.claim.split(":")[0]: c for c in r.checks}
    assert not checks["cone test"].witness["is_cone"]
    assert checks["base locus of the web"].witness["points"] == []
    assert checks["positive definite point search"].witness["pd_search"] == "found"
    assert r.exit_code() == 0


def test_analyze_base_curve_alarm():
    r = analyze_pencil(parse_pencil(BASE_CURVE))
    base = next(c for c in r.checks if c.claim.startswith("base locus"))
    assert base.status == PARTIAL
    assert "reducible" in base.witness["alarm"]
    assert r.exit_code() == 1


def test_analyze_finds_spectrahedral_point(pencil):
    r = analyze_pencil(pencil("max-smooth-1"))
    pd = r.checks[-1]
    assert pd.witness["pd_search"] == "found"
    assert r.exit_code() == 0


def test_analyze_budget_limits_search(pencil):
    r = analyze_pencil(pencil("lambda-family(-1)"), budget=30)
    assert r.checks[-1].witness == {"pd_search": "unknown", "tries": 30}


def test_dimension_bounds_are_flagged_as_instance_evidence(capsys):
    assert main(["verify", "two-P3s", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    bound = next(c for c in data["checks"] if c["claim"].startswith("attains n = 5"))
    assert bound["status"] == PASS
    assert any("not a computation" in w for w in bound["warnings"])
