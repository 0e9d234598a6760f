"""Command-line surface: outputs, exit codes, CSV and JSON artifacts."""

from fractions import Fraction

from qlink.cli import CollisionReport, builtin_mini_table, main
from qlink.qnum import qrational


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# qrat
# ---------------------------------------------------------------------------


def test_qrat_basic(capsys):
    code, out, _ = run(capsys, "qrat", "5/2")
    assert code == 0
    assert out.strip() == "(1+2*q^2+q^4+q^6)/(1+q^2)"


def test_qrat_left(capsys):
    code, out, _ = run(capsys, "qrat", "2", "--flavor", "left")
    assert code == 0
    assert out.strip() == "1+q^4"


def test_qrat_at(capsys):
    code, out, _ = run(capsys, "qrat", "1/2", "--at", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines == ["(q^2)/(1+q^2)", "4/5"]


def test_qrat_bad_rational(capsys):
    code, _, err = run(capsys, "qrat", "1/0")
    assert code == 2
    assert "bad rational" in err


# ---------------------------------------------------------------------------
# inv
# ---------------------------------------------------------------------------


def test_inv_homfly_stabilized_unknot(capsys):
    code, out, _ = run(capsys, "inv", "1", "--mode", "homfly")
    assert code == 0
    assert out.strip() == "(-1+a^2)/(-1+q^2)"


def test_inv_x_mode_outputs_nu_value(capsys):
    code, out, _ = run(capsys, "inv", "1", "--mode", "x:2")
    assert code == 0
    assert out.strip() == "(1+q^2) + (0)*v"


def test_inv_trefoil_mirror_pair_differ(capsys):
    code1, out1, _ = run(capsys, "inv", "1 1 1", "--mode", "x:2/3")
    code2, out2, _ = run(capsys, "inv", "1 1 1", "--mode", "x:2/3", "--mirror")
    assert code1 == code2 == 0
    assert out1 != out2


def test_inv_bad_braid(capsys):
    code, _, err = run(capsys, "inv", "0", "--mode", "homfly")
    assert code == 2
    assert "bad braid" in err


def test_inv_bad_mode(capsys):
    code, _, err = run(capsys, "inv", "1", "--mode", "y:2")
    assert code == 2


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def test_sweep_csv(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    code, _, err = run(
        capsys, "sweep", "1", "--q0", "2", "--from", "0", "--to", "1", "--steps", "4",
        "--out", str(out_path),
    )
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0] == "x,value,flag"
    rows = {line.split(",")[0]: line.split(",")[1] for line in lines[1:]}
    assert rows["1/2"] == "4/5"
    assert rows["1"] == "1"
    assert rows["1/4"] == str(qrational(Fraction(1, 4)).evaluate(2))
    assert len(lines) == 6  # header + 5 sample points


def test_sweep_zero_steps(capsys, tmp_path):
    code, _, err = run(
        capsys, "sweep", "1", "--q0", "2", "--from", "0", "--to", "1", "--steps", "0",
        "--out", str(tmp_path / "s.csv"),
    )
    assert code == 2


def test_sweep_unwritable(capsys, tmp_path):
    target = tmp_path / "nope" / "deep" / "s.csv"
    code, _, err = run(
        capsys, "sweep", "1", "--q0", "2", "--from", "0", "--to", "1", "--steps", "2",
        "--out", str(target),
    )
    assert code == 4


def test_sweep_matches_per_point_invariants(tmp_path, capsys):
    out_path = tmp_path / "tref.csv"
    code, _, _ = run(
        capsys, "sweep", "1 1 1", "--q0", "2", "--from", "0", "--to", "1", "--steps", "3",
        "--out", str(out_path), "--normalized",
    )
    assert code == 0
    assert len(out_path.read_text().strip().splitlines()) == 5


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def test_table_flat2_separates_trefoil_mirror(capsys):
    code, out, _ = run(capsys, "table", "--mode", "flat:2", "--with-mirrors")
    assert code == 0
    report = CollisionReport.from_json(out)
    assert not report.errors
    groups = {frozenset(g) for g in report.groups}
    # chiral knots split from their mirrors; the amphichiral 4_1 cannot
    assert frozenset({"3_1"}) in groups and frozenset({"3_1!"}) in groups
    assert frozenset({"5_1"}) in groups and frozenset({"5_1!"}) in groups
    assert frozenset({"4_1", "4_1!"}) in groups
    names = {n for g in report.groups for n in g}
    assert names == {"3_1", "4_1", "5_1", "3_1!", "4_1!", "5_1!"}


def test_table_x2_groups_figure_eight_with_mirror(capsys):
    code, out, _ = run(capsys, "table", "--mode", "x:2", "--with-mirrors")
    assert code == 0
    report = CollisionReport.from_json(out)
    groups = {frozenset(g) for g in report.groups}
    assert frozenset({"4_1", "4_1!"}) in groups


def test_table_collisions_filter(capsys):
    code, out, _ = run(capsys, "table", "--mode", "x:2", "--with-mirrors", "--collisions")
    report = CollisionReport.from_json(out)
    assert all(len(g) > 1 for g in report.groups)


def test_table_json_round_trip(capsys):
    code, out, _ = run(capsys, "table", "--mode", "flat:2")
    report = CollisionReport.from_json(out)
    assert CollisionReport.from_json(report.to_json()) == report


def test_table_deterministic(capsys):
    _, out1, _ = run(capsys, "table", "--mode", "flat:2", "--with-mirrors")
    _, out2, _ = run(capsys, "table", "--mode", "flat:2", "--with-mirrors")
    assert out1 == out2


def test_table_from_file(tmp_path, capsys):
    path = tmp_path / "knots.csv"
    path.write_text('# comment line\n3_1,"1 1 1"\nunknot,"1"\n')
    code, out, _ = run(capsys, "table", str(path), "--mode", "x:2")
    assert code == 0
    report = CollisionReport.from_json(out)
    assert {n for g in report.groups for n in g} == {"3_1", "unknot"}


def test_table_duplicate_names_rejected(tmp_path, capsys):
    path = tmp_path / "dup.csv"
    path.write_text('a,"1"\na,"1 1 1"\n')
    code, _, err = run(capsys, "table", str(path), "--mode", "x:2")
    assert code == 2


def test_load_builtin_mini_table():
    table = builtin_mini_table()
    assert [n for n, _ in table.entries] == ["3_1", "4_1", "5_1"]
