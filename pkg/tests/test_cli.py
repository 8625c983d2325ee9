import json

import pytest

from dshuffle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_relations_text_golden(capsys):
    code, out, _ = run(capsys, "relations", "--weight", "12", "--kind", "zeta")
    assert code == 0
    assert out.strip() == "28 Z(9,3) + 150 Z(7,5) + 168 Z(5,7) ≡ 0 (mod Z(12))"


def test_relations_all_includes_bracket(capsys):
    code, out, _ = run(capsys, "relations", "--weight", "12")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "{f3, f9} - 3 {f5, f7} ≡ 0 (mod depth 3)"
    assert len(lines) == 2


def test_relations_json(capsys):
    code, out, _ = run(capsys, "relations", "--weight", "16", "--format", "json")
    assert code == 0
    docs = json.loads(out)
    assert {d["kind"] for d in docs} == {"bracket", "double_zeta"}
    assert all(d["weight"] == 16 for d in docs)


def test_relations_csv(capsys):
    code, out, _ = run(capsys, "relations", "--weight", "12", "--kind", "zeta",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "weight,kind,r,s,coeff"
    assert "12,double_zeta,9,3,28" in lines


def test_period_basis(capsys):
    code, out, _ = run(capsys, "period-basis", "--weight", "12")
    assert code == 0
    assert "(X^8 - X^2)" in out
    assert "a = (1, -3, 3, -1)" in out


def test_matrix_csv(capsys):
    code, out, _ = run(capsys, "matrix", "--which", "A", "--weight", "12",
                       "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[0] == "1,6,15,28"


def test_matrix_tADB_json(capsys):
    code, out, _ = run(capsys, "matrix", "--which", "tADB", "--weight", "12",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0][0] == "1/45"  # 14/630


def test_check_weight12(capsys):
    code, out, _ = run(capsys, "check", "--weight", "12", "--digits", "25")
    assert code == 0
    assert "scalar = 5197/691" in out
    assert out.startswith("ok ")


def test_check_weight14_vacuous(capsys):
    code, out, _ = run(capsys, "check", "--weight", "14")
    assert code == 0
    assert "no double zeta relations" in out


def test_report_sweep(capsys):
    code, out, _ = run(capsys, "report", "--from", "12", "--to", "16")
    assert code == 0
    docs = [json.loads(line) for line in out.strip().splitlines()]
    assert [d["weight"] for d in docs] == [12, 14, 16]
    assert all(d["all_ok"] for d in docs)


def test_ds_solve(capsys):
    code, out, _ = run(capsys, "ds-solve", "--weight", "3")
    assert code == 0
    assert out.splitlines()[0] == "dim ds_3 (depth-graded solver) = 1"


def test_regularize(capsys):
    code, out, _ = run(capsys, "regularize", "--word", "yxy")
    assert code == 0
    assert out.strip() == "-2 Z(2, 1)"


def test_regularize_star(capsys):
    code, out, _ = run(capsys, "regularize", "--word", "yy", "--star")
    assert code == 0
    assert out.strip() == "-1/2 Z(2)"


def test_fz_dim(capsys):
    code, out, _ = run(capsys, "fz-dim", "--weight", "4")
    assert code == 0
    assert out.splitlines()[0] == "dim weight-4 formal zeta quotient = 1"


def test_usage_error_exit_2(capsys):
    code, _, err = run(capsys, "matrix", "--which", "A", "--weight", "11")
    assert code == 2
    assert "error:" in err


def test_missing_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
