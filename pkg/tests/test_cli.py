import json

import pytest

from crec.cli import main

pytestmark = pytest.mark.filterwarnings("ignore::crec.errors.DivisibilityWarning")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_single_value(capsys):
    code, out, _ = run(capsys, "eval", "--fixture", "mersenne", "-n", "5")
    assert code == 0
    assert out == "31\n"


def test_eval_range_text(capsys):
    code, out, _ = run(capsys, "eval", "--fixture", "fibonacci", "--range", "1:5")
    assert code == 0
    assert out.splitlines() == ["1 1", "2 1", "3 2", "4 3", "5 5"]


def test_eval_json_format(capsys):
    code, out, _ = run(capsys, "eval", "--fixture", "naturals", "-n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"n": 3, "value": "3"}]


def test_fixtures_listing(capsys):
    code, out, _ = run(capsys, "fixtures")
    assert code == 0
    assert len(json.loads(out)) == 15
    code, out, _ = run(capsys, "fixtures", "--format", "text")
    assert code == 0
    assert out.splitlines()[0].startswith("fibonacci")


def test_derive_latex_and_note_on_stderr(capsys):
    code, out, err = run(capsys, "derive", "--fixture", "fibonacci", "--format", "latex")
    assert code == 0
    assert "3^{n^2+n}" in out
    assert "asserted" in err


def test_derive_json_representation(capsys):
    code, out, _ = run(
        capsys, "derive", "--recurrence", '{"coeffs": ["-1","-1"], "initial": ["0","1"]}'
    )
    assert code == 0
    body = json.loads(out)
    assert body["kind"] == "modmod"
    assert body["mode"] == "certified"
    assert body["base"] == "9"


def test_render_pinned_text(capsys):
    code, out, _ = run(capsys, "render", "--fixture", "mersenne")
    assert code == 0
    assert out.rstrip("\n") == "-1 + (1/2)*(((-(6^(n^2+n))) mod (6^(2n) - 3*6^n + 2)) mod 6^n)"


def test_verify_ok_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--fixture", "tribonacci", "--range", "1:20")
    assert code == 0
    assert out.startswith("ok: verified n=1..20")


def test_verify_mismatch_exit_two(capsys):
    code, out, _ = run(capsys, "verify", "--fixture", "fibonacci", "--base", "2", "--range", "1:20")
    assert code == 2
    assert "mismatch at n=1" in out


def test_validity_error_exit_three(capsys):
    code, _, err = run(capsys, "eval", "--fixture", "pell", "--base", "2", "-n", "1")
    assert code == 3
    assert "EvaluationError" in err


def test_base_override_prints_provenance_note(capsys):
    code, out, err = run(capsys, "eval", "--fixture", "fibonacci", "--base", "5", "-n", "6")
    assert code == 0
    assert out == "8\n"
    assert "base 5 (asserted)" in err


def test_usage_errors_exit_one(capsys):
    code, _, err = run(capsys, "eval", "-n", "1")  # no source
    assert code == 1
    code, _, err = run(capsys, "eval", "--fixture", "fibonacci")  # no index
    assert code == 1
    code, _, err = run(capsys, "frobnicate")
    assert code == 1
    code, _, err = run(capsys, "verify", "--fixture", "fibonacci", "--range", "9:1")
    assert code == 1


def test_recurrence_from_file(tmp_path, capsys):
    path = tmp_path / "rec.json"
    path.write_text('{"coeffs": ["-3", "2"], "initial": ["0", "1"]}')
    code, out, _ = run(capsys, "eval", "--recurrence", f"@{path}", "--base", "6", "-n", "5")
    assert code == 0
    assert out == "31\n"


def test_bench_csv_output(capsys):
    code, out, _ = run(
        capsys, "bench", "--fixture", "fibonacci", "--n-list", "2,4", "--reps", "2"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "fixture,n,strategy,operand_bits,wall_ns,reps"
    assert len(lines) == 5


def test_verify_random_pipeline(capsys):
    code, out, _ = run(capsys, "verify", "--random", "3", "--seed", "7", "--range", "1:12")
    assert code == 0
    assert "random pipeline x3: ok" in out


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "value.txt"
    code, out, _ = run(
        capsys, "--out", str(target), "eval", "--fixture", "lucas", "-n", "2"
    )
    assert code == 0
    assert out == ""
    assert target.read_text() == "3\n"


def test_stdout_is_byte_stable(capsys):
    first = run(capsys, "derive", "--fixture", "a002249")
    second = run(capsys, "derive", "--fixture", "a002249")
    assert first == second
    assert first[0] == 0


def test_every_listed_fixture_is_accepted_everywhere(capsys):
    code, out, _ = run(capsys, "fixtures")
    names = [fx["name"] for fx in json.loads(out)]
    assert code == 0 and len(names) == 15
    for name in names:
        for argv in (
            ["derive", "--fixture", name],
            ["eval", "--fixture", name, "-n", "1"],
            ["verify", "--fixture", name, "--range", "1:2"],
            ["render", "--fixture", name],
            ["bench", "--fixture", name, "--n-list", "1", "--reps", "1"],
        ):
            code, _, err = run(capsys, *argv)
            assert code == 0, (name, argv, err)
