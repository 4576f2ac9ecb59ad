import json

import pytest

from modules.cli.app import EXIT_PARSE, EXIT_PRECONDITION, EXIT_USAGE, main
from modules.cli.functions import parse_point, parse_points, parse_scalar
from modules.configs import builtin
from modules.configs.document import emit_config
from modules.core.field import EISENSTEIN, GAUSSIAN, RATIONALS
from modules.core.projective import ProjPoint
from modules.custom_errors import UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


# --- coefficient parsing ---

def test_scalars_in_the_field_generator(t, i):
    assert parse_scalar("2*t+1", EISENSTEIN) == 2 * t + 1
    assert parse_scalar("-t^2", EISENSTEIN) == t + 1
    assert parse_scalar("1/2", RATIONALS) == RATIONALS.coerce("1/2")
    assert parse_scalar("(1+i)/(1-i)", GAUSSIAN) == i
    with pytest.raises(UsageError):
        parse_scalar("t**", EISENSTEIN)
    with pytest.raises(UsageError):
        parse_scalar("x", EISENSTEIN)


@pytest.mark.parametrize("text", [
    "__import__('os').getcwd()",
    "t.conjugate()",
    "exp(t)",
    "1.5",
    "t2",
    "",
])
def test_scalars_accept_only_arithmetic_in_the_generator(text):
    with pytest.raises(UsageError):
        parse_scalar(text, EISENSTEIN)


def test_points_inline_and_from_file(tmp_path, t):
    assert parse_point("t,1", EISENSTEIN) == ProjPoint.of(EISENSTEIN, (t, 1))
    assert len(parse_points("1,0;0,1;1,1", RATIONALS)) == 3
    path = tmp_path / "points.json"
    path.write_text(json.dumps([[1, 0], [0, 1], [[0, 1], 1]]), encoding="utf-8")
    assert parse_points(str(path), EISENSTEIN)[2] == ProjPoint.of(EISENSTEIN, (t, 1))
    with pytest.raises(UsageError):
        parse_point("1,2,3", RATIONALS)
    with pytest.raises(UsageError):
        parse_point("0,0", RATIONALS)


# --- commands ---

def test_analyze_quadric(capsys):
    code, out, _ = run(capsys, "analyze", "--builtin", "quadric4")
    assert code == 0
    assert "Vertex group at line 0: Trivial" in out


def test_analyze_json_report(capsys):
    code, report = run_json(capsys, "analyze", "--builtin", "penrose_half")
    assert code == 0
    assert report["command"] == "analyze"
    assert report["simple_morphisms"] == 60
    group = report["vertex_groups"][0]
    assert (group["order"], group["label"]) == (12, "A4")
    assert len(group["elements"]) == 12
    assert report["marked_invariance"]["holds"]


def test_analyze_with_a_config_file(capsys, tmp_path):
    path = tmp_path / "d4sub6.json"
    path.write_text(emit_config(builtin("d4sub6")), encoding="utf-8")
    code, report = run_json(capsys, "analyze", "--config", str(path), "--base", "0")
    assert code == 0
    assert report["vertex_groups"][0]["alias"] == "S3"


def test_analyze_small_cap_reports_infinite(capsys):
    code, report = run_json(capsys, "analyze", "--builtin", "klein", "--cap", "10")
    assert code == 0
    assert report["vertex_groups"][0]["label"] == "Infinite"
    assert report["vertex_groups"][0]["order"] is None


def test_orbit_command(capsys):
    code, report = run_json(capsys, "orbit", "--builtin", "penrose_half", "--line", "0", "--point", "1,0")
    assert code == 0
    assert report["count"] == 20
    assert not report["truncated"]
    assert sorted(report["members"]) == ["0", "1", "2", "3", "4"]


def test_stabilizer_of_named_set(capsys):
    code, out, _ = run(capsys, "stabilizer", "--set", "X")
    assert code == 0
    assert "Order 12: A4" in out
    assert "Only even permutations: yes" in out


def test_stabilizer_of_inline_points(capsys):
    code, report = run_json(capsys, "stabilizer", "--points", "1,0;0,1;1,1", "--field", "rationals")
    assert code == 0
    assert (report["order"], report["label"], report["alias"]) == (6, "D(6)", "S3")
    assert not report["even_permutations_only"]


@pytest.mark.parametrize("argv", [
    ["analyze"],
    ["analyze", "--builtin", "quadric4", "--config", "x.json"],
    ["orbit", "--builtin", "klein", "--line", "0"],
    ["stabilizer"],
    ["stabilizer", "--set", "X", "--points", "1,0;0,1;1,1"],
    ["stabilizer", "--points", "1,0;0,1;u,1"],
    ["verify", "--only", "one"],
    ["analyze", "--builtin", "quadric4", "--cap", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert "error" in err


def test_argparse_rejects_unknown_commands():
    with pytest.raises(SystemExit) as info:
        main(["draw"])
    assert info.value.code == 2


def test_parse_errors(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\"lines\": [}", encoding="utf-8")
    code, _, err = run(capsys, "analyze", "--config", str(path))
    assert code == EXIT_PARSE
    assert "line 1" in err
    code, _, _ = run(capsys, "analyze", "--builtin", "cube")
    assert code == EXIT_PARSE
    code, _, _ = run(capsys, "verify", "--corrupt", "cube")
    assert code == EXIT_PARSE


def test_precondition_errors(capsys):
    code, _, err = run(capsys, "analyze", "--builtin", "quadric4", "--base", "9")
    assert code == EXIT_PRECONDITION
    assert "Line index 9" in err
    code, _, _ = run(capsys, "stabilizer", "--points", "1,0;0,1", "--field", "rationals")
    assert code == EXIT_PRECONDITION


def test_verify_subset_passes(capsys):
    code, report = run_json(capsys, "verify", "--only", "4,5,8,11")
    assert code == 0
    assert [c["number"] for c in report["criteria"]] == [4, 5, 8, 11]
    assert all(c["passed"] for c in report["criteria"])


def test_verify_detects_corruption(capsys):
    code, out, _ = run(capsys, "verify", "--only", "4", "--corrupt", "quadric4")
    assert code == 1
    assert "[FAIL]" in out
    assert "expected: Trivial" in out


def test_analyze_klein(capsys):
    code, out, _ = run(capsys, "analyze", "--builtin", "klein")
    assert code == 0
    assert "Vertex group at line 0: S4, order 24" in out
    assert "min 8, max 8" in out


@pytest.mark.parametrize("name", ["E", "Ytilde"])
def test_octahedral_stabilizers(capsys, name):
    code, report = run_json(capsys, "stabilizer", "--set", name)
    assert code == 0
    assert (report["order"], report["label"]) == (24, "S4")
    assert len(report["elements"]) == 24


def test_dotenv_in_working_directory_is_read(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("LINE_GROUPOIDS_ORBIT_CAP", "0")
    monkeypatch.delenv("LINE_GROUPOIDS_ORBIT_CAP")
    (tmp_path / ".env").write_text("LINE_GROUPOIDS_ORBIT_CAP=3\n")
    monkeypatch.chdir(tmp_path)
    code, report = run_json(capsys, "orbit", "--builtin", "quadric4", "--line", "0", "--point", "1,0")
    assert code == 0
    assert report["count"] == 3
    assert report["truncated"]
