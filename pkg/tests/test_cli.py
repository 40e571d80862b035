"""Exit codes, report payloads, and determinism of the command line."""

import json

import pytest

from c4repeats.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_construct_json(capsys):
    code, data, _ = run_json(capsys, "construct", "--prime", "11")
    assert code == 0
    assert data["p"] == 11
    assert data["a_max"] == 3
    assert len(data["edges"]) == 3


def test_construct_csv(capsys):
    code, out, _ = run(capsys, "construct", "--prime", "11", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,y,color"
    assert len(lines) == 4


def test_construct_prime_min(capsys):
    code, data, _ = run_json(capsys, "construct", "--prime-min", "10")
    assert code == 0
    assert data["p"] == 11


def test_verify_passes(capsys):
    code, data, _ = run_json(capsys, "verify", "--prime", "23")
    assert code == 0
    assert data["pass"] is True
    assert data["proper"] is True
    assert data["conflicts"] == []
    assert data["distinct_colors"] <= data["color_bound"] == 22


def test_verify_rejects_wrong_modulus_class(capsys):
    code, _, err = run(capsys, "verify", "--prime", "13")
    assert code == 2
    assert "error" in err


def test_verify_rejects_composite(capsys):
    code, _, _ = run(capsys, "verify", "--prime", "25")
    assert code == 2


def test_scan_small(capsys):
    code, data, err = run_json(capsys, "scan", "--prime", "23", "--k", "3")
    assert code == 0
    assert data["pass"] is True
    assert data["copies"] == 105
    assert "scanning p=23" in err  # progress goes to stderr, not the report


def test_scan_csv(capsys):
    code, out, _ = run(
        capsys, "scan", "--prime", "23", "--k", "3", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines()[0] == "a,b,c,d,copies,family_size"


def test_scan_budget_refusal(capsys):
    code, _, err = run(capsys, "scan", "--prime", "227", "--k", "3")
    assert code == 2
    assert "budget" in err


def test_scan_deterministic_output_files(capsys, tmp_path):
    first = tmp_path / "one.json"
    second = tmp_path / "two.json"
    assert main(["scan", "--prime", "53", "--k", "3", "--out", str(first)]) == 0
    assert main(["scan", "--prime", "53", "--k", "3", "--out", str(second)]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()


def test_out_leaves_stdout_empty(capsys, tmp_path):
    target = tmp_path / "coloring.json"
    code, out, _ = run(
        capsys, "construct", "--prime", "11", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["p"] == 11


def test_solve_generic(capsys):
    code, data, _ = run_json(
        capsys, "solve", "--prime", "23", "--quadruple", "7", "19", "14", "21"
    )
    assert code == 0
    assert data["branch"] == "generic"
    assert data["solutions"] == [[1, 2, 3, 4]]


def test_solve_degenerate(capsys):
    code, data, _ = run_json(
        capsys, "solve", "--prime", "23", "--quadruple", "1", "2", "4", "3"
    )
    assert code == 0
    assert data["branch"] == "degenerate"
    assert data["solutions"] == []


def test_solve_invalid_quadruple(capsys):
    code, _, err = run(
        capsys, "solve", "--prime", "23", "--quadruple", "1", "1", "2", "3"
    )
    assert code == 2
    assert "error" in err


def test_validate_elimination(capsys):
    code, data, _ = run_json(
        capsys, "validate-elimination", "--prime", "23", "--budget", "300"
    )
    assert code == 0
    assert data["pass"] is True
    assert data["trials"] == 300
    assert data["generic"] + data["degenerate"] == 300


def test_validate_elimination_prime_min(capsys):
    code, data, _ = run_json(
        capsys, "validate-elimination", "--prime-min", "100", "--budget", "100"
    )
    assert code == 0
    assert data["p"] == 101


def mono_csv(tmp_path):
    path = tmp_path / "mono.csv"
    path.write_text("0,0\n0,0\n")
    return str(path)


def test_ramsey_counting(capsys, tmp_path):
    code, data, _ = run_json(capsys, "ramsey", "--coloring", mono_csv(tmp_path))
    assert code == 0
    assert data["n"] == 2
    assert data["counting"]["same_color_pairs"] == 6
    assert data["counting"]["aux_edge_count"] == 1
    assert data["counting"]["bound_asymptotic"] == "4"


def test_ramsey_certificate(capsys, tmp_path):
    code, data, _ = run_json(
        capsys,
        "ramsey", "--coloring", mono_csv(tmp_path),
        "--s", "2", "--t", "2", "--h1", "1", "--h2", "1",
    )
    assert code == 0
    assert data["pattern"]["search"] == "found"
    assert data["certificate"]["pass"] is True
    assert data["certificate"]["distinct_colors"] == 1
    assert data["certificate"]["bound"] == 3


def test_ramsey_json_input(capsys, tmp_path):
    path = tmp_path / "rainbow.json"
    path.write_text('{"n": 2, "colors": [[0, 1], [2, 3]]}')
    code, data, _ = run_json(
        capsys,
        "ramsey", "--coloring", str(path),
        "--s", "2", "--t", "2",
    )
    assert code == 0
    assert data["pattern"]["search"] == "absent"
    assert "certificate" not in data


def test_ramsey_s_without_t(capsys, tmp_path):
    code, _, err = run(
        capsys, "ramsey", "--coloring", mono_csv(tmp_path), "--s", "2"
    )
    assert code == 2
    assert "--s and --t" in err


def test_ramsey_rejects_non_complete_pattern(capsys, tmp_path):
    code, _, err = run(
        capsys,
        "ramsey", "--coloring", mono_csv(tmp_path),
        "--s", "2", "--t", "2", "--h1", "1", "--h2", "2", "--h-edges", "1",
    )
    assert code == 2
    assert "h1*h2" in err


def test_ramsey_missing_file(capsys, tmp_path):
    code, _, _ = run(
        capsys, "ramsey", "--coloring", str(tmp_path / "nope.csv")
    )
    assert code == 2


def test_bounds_example(capsys):
    code, data, _ = run_json(
        capsys,
        "bounds", "--s", "8", "--t", "8", "--alpha", "5/4",
        "--h-edges", "8", "--h1", "4", "--h2", "4",
    )
    assert code == 0
    assert data["q"] == 57
    assert data["exponent"] == "3/2"


def test_bounds_missing_flag(capsys):
    code, _, err = run(capsys, "bounds", "--s", "8", "--t", "8")
    assert code == 2
    assert "--alpha" in err


def test_bounds_bad_alpha(capsys):
    code, _, _ = run(
        capsys,
        "bounds", "--s", "8", "--t", "8", "--alpha", "fast",
        "--h-edges", "8", "--h1", "4", "--h2", "4",
    )
    assert code == 2


def test_bounds_precondition_violation(capsys):
    code, _, err = run(
        capsys,
        "bounds", "--s", "3", "--t", "8", "--alpha", "3/2",
        "--h-edges", "1", "--h1", "1", "--h2", "1",
    )
    assert code == 2
    assert "t >= s >= 4" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--prime", "23", "--format", "csv"),
        ("solve", "--prime", "23", "--quadruple", "7", "19", "14", "21",
         "--format", "csv"),
        ("validate-elimination", "--prime", "23", "--format", "csv"),
        ("bounds", "--s", "8", "--t", "8", "--alpha", "5/4",
         "--h-edges", "8", "--h1", "4", "--h2", "4", "--format", "csv"),
    ],
    ids=["verify", "solve", "validate", "bounds"],
)
def test_csv_rejected_where_not_tabular(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "csv" in err


def test_usage_errors_exit_two(capsys):
    assert main(["no-such-command"]) == 2
    capsys.readouterr()
    assert main(["scan"]) == 2  # --prime/--prime-min required
    capsys.readouterr()
    assert main([]) == 2
    capsys.readouterr()
