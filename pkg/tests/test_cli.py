import json
import subprocess
import sys

import pytest

from breakmin import count_breaks, is_consistent, parse_ha, parse_timetable
from breakmin.cli import main
from conftest import FIXTURES


def test_gen_then_check_roundtrip(tmp_path, capsys):
    out = tmp_path / "tt.csv"
    assert main(["gen", "--teams", "6", "--seed", "9", "--output", str(out)]) == 0
    assert main(["check", "--timetable", str(out)]) == 0
    assert "timetable ok: teams=6 slots=5" in capsys.readouterr().out


def test_gen_to_stdout_is_deterministic(capsys):
    assert main(["gen", "--teams", "4", "--seed", "2"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--teams", "4", "--seed", "2"]) == 0
    assert capsys.readouterr().out == first
    parse_timetable(first)


def test_gen_rejects_odd_team_count(capsys):
    assert main(["gen", "--teams", "5"]) == 1
    assert "error:" in capsys.readouterr().err


def test_solve_writes_assignment_and_stats(tmp_path, capsys):
    out = tmp_path / "z.csv"
    st = tmp_path / "report.json"
    rc = main(
        [
            "solve",
            "--input",
            str(FIXTURES / "tt4.csv"),
            "--output",
            str(out),
            "--stats",
            str(st),
            "--verify",
        ]
    )
    assert rc == 0
    err = capsys.readouterr().err
    assert "b_min=2 oct_size=2 solver=exact optimal=True" in err
    tt = parse_timetable((FIXTURES / "tt4.csv").read_text())
    z = parse_ha(out.read_text())
    assert z.is_full and is_consistent(z, tt)
    assert count_breaks(z).total == 2
    data = json.loads(st.read_text())
    assert data["schema"] == 1
    assert data["b_min"] == 2


def test_solve_brute_matches_exact(capsys):
    rc = main(
        [
            "solve",
            "--input",
            str(FIXTURES / "tt4.csv"),
            "--solver",
            "brute",
        ]
    )
    assert rc == 0
    cap = capsys.readouterr()
    assert "b_min=2 oct_size=2 solver=brute optimal=True" in cap.err
    tt = parse_timetable((FIXTURES / "tt4.csv").read_text())
    z = parse_ha(cap.out)
    assert count_breaks(z).total == 2 and is_consistent(z, tt)


def test_solve_heuristic_to_stdout(capsys):
    rc = main(
        [
            "solve",
            "--input",
            str(FIXTURES / "tt4.csv"),
            "--solver",
            "heuristic",
            "--seed",
            "3",
        ]
    )
    assert rc == 0
    cap = capsys.readouterr()
    tt = parse_timetable((FIXTURES / "tt4.csv").read_text())
    z = parse_ha(cap.out)
    assert is_consistent(z, tt)
    assert "solver=heuristic optimal=False" in cap.err


def test_solve_missing_file_is_a_usage_error(capsys):
    assert main(["solve", "--input", "no-such-file.csv"]) == 2
    assert "error:" in capsys.readouterr().err


def test_solve_invalid_timetable_is_a_domain_error(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("Slot,1,2,3\n1,2,3,3\n2,1,4,4\n3,4,1,1\n4,3,2,2\n")
    assert main(["solve", "--input", str(bad)]) == 1
    assert "invalid timetable" in capsys.readouterr().err


def test_check_assignment_against_claim(capsys):
    rc = main(
        [
            "check",
            "--timetable",
            str(FIXTURES / "tt8.csv"),
            "--assignment",
            str(FIXTURES / "tt8_ha.csv"),
            "--claimed",
            "8",
        ]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "breaks=8" in out
    assert "ok claimed" in out


def test_check_wrong_claim_fails(capsys):
    rc = main(
        [
            "check",
            "--timetable",
            str(FIXTURES / "tt8.csv"),
            "--assignment",
            str(FIXTURES / "tt8_ha.csv"),
            "--claimed",
            "6",
        ]
    )
    assert rc == 1
    assert "FAIL claimed" in capsys.readouterr().out


def test_check_flags_inconsistent_partial_assignment(capsys):
    rc = main(
        [
            "check",
            "--timetable",
            str(FIXTURES / "tt4.csv"),
            "--assignment",
            str(FIXTURES / "tt4_ha_from_bad.csv"),
        ]
    )
    assert rc == 1
    out = capsys.readouterr().out
    assert "FAIL consistent: teams 1 and 3 share a venue in slot 2" in out
    assert "FAIL full" in out


def test_check_reports_each_violation(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("Slot,1,2,3\n1,2,3,3\n2,1,4,4\n3,4,1,1\n4,3,2,2\n")
    assert main(["check", "--timetable", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "violation permutation" in out
    assert "violation pair-once" in out


def test_graph_output(capsys):
    assert main(["graph", "--input", str(FIXTURES / "tt4.csv")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph auxiliary {")
    assert out.count(" -- ") == 12
    assert "[kind=prematch]" in out


def test_graph_sizes_scale_with_teams(tmp_path):
    out = tmp_path / "g.dot"
    assert main(["graph", "--input", str(FIXTURES / "tt8.csv"), "--output", str(out)]) == 0
    text = out.read_text()
    lines = text.splitlines()
    nodes = [l for l in lines if l.strip().endswith('";') and " -- " not in l]
    assert len(nodes) == 48
    assert text.count(" -- ") == 88


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "breakmin", "gen", "--teams", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    parse_timetable(proc.stdout)
