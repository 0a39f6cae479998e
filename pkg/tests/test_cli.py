import pytest

from debtclear import parse_static
from debtclear.cli import main

EXAMPLE1_TEXT = "5 5\n1 2 10\n2 3 5\n3 1 5\n1 4 5\n4 5 10\n"


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.txt"
    path.write_text(EXAMPLE1_TEXT)
    return str(path)


def test_solve_prints_plan(example_file, capsys):
    assert main(["solve", example_file]) == 0
    assert capsys.readouterr().out == "2\n1 5 10\n4 2 5\n"


def test_solve_out_file(example_file, tmp_path):
    out = tmp_path / "plan.txt"
    assert main(["solve", example_file, "--out", str(out)]) == 0
    assert out.read_text() == "2\n1 5 10\n4 2 5\n"


def test_solve_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n1 1 5\n")
    assert main(["solve", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_gen_writes_parseable_instance(tmp_path, capsys):
    out = tmp_path / "case1.txt"
    assert main(["gen", "1", "--out", str(out)]) == 0
    n, arcs = parse_static(out.read_text())
    assert n == 20 and len(arcs) == 19


def test_gen_seed_changes_random_case(capsys):
    assert main(["gen", "9", "--seed", "5"]) == 0
    a = capsys.readouterr().out
    assert main(["gen", "9", "--seed", "6"]) == 0
    b = capsys.readouterr().out
    assert a != b


def test_gen_then_solve_pipeline(tmp_path, capsys):
    case = tmp_path / "case2.txt"
    assert main(["gen", "2", "--out", str(case)]) == 0
    assert main(["solve", str(case)]) == 0
    assert capsys.readouterr().out == "0\n"


def test_oracle_command(example_file, capsys):
    assert main(["oracle", example_file]) == 0
    assert capsys.readouterr().out == "max_parts 2\nmin_transactions 2\n"


def test_run_command(tmp_path, capsys):
    script = tmp_path / "ops.txt"
    script.write_text("NODE a\nNODE b\nARC a b 3\nQUERY\n")
    assert main(["run", str(script)]) == 0
    assert capsys.readouterr().out == "query 1\na b 3\n"


def test_run_command_script_error(tmp_path, capsys):
    script = tmp_path / "ops.txt"
    script.write_text("NODE a\nARC a zz 3\n")
    assert main(["run", str(script)]) == 2
    assert "command 2" in capsys.readouterr().err


def test_bench_csv(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--tests", "1,2", "--reps", "1", "--csv", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("test,algorithm,mode,reps,")
    assert len(lines) == 5  # header + 2 cases x 2 algorithms


def test_bench_test_range_parsing(capsys):
    assert main(["bench", "--tests", "1-3", "--reps", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7


def test_bench_unknown_test(capsys):
    assert main(["bench", "--tests", "42"]) == 2
    assert "unknown test id" in capsys.readouterr().err
