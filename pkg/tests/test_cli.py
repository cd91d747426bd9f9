import subprocess
import sys

import pytest

from prefdomains import family
from prefdomains.cli import main
from prefdomains.prefcore import delete_voter, parse_profile, read_profile, serialize_profile

from conftest import EXAMPLE_23_TEXT, TABLE_1


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def ex23_file(tmp_path):
    path = tmp_path / "example23.profile"
    path.write_text(EXAMPLE_23_TEXT)
    return path


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "--k", 4)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9
    assert lines[0].split() == [f"d{i}" for i in range(2, 17)]
    for s, line in enumerate(lines[1:], start=1):
        label, *cells = line.split()
        assert label == f"E_{s}"
        assert tuple(map(int, cells)) == TABLE_1[s - 1]


def test_table_tsv(capsys):
    code, out, _ = run(capsys, "table", "--k", 4, "--format", "tsv")
    rows = [line.split("\t") for line in out.splitlines()]
    assert code == 0 and rows[0][0] == "s"
    assert [tuple(map(int, r[1:])) for r in rows[1:]] == TABLE_1


def test_recognize_example23(capsys, ex23_file):
    code, out, _ = run(capsys, "recognize", ex23_file)
    assert code == 1
    assert out.splitlines()[:5] == [
        "profile: 3 voters, 6 alternatives",
        "single-peaked: yes (1 canonical axis, mirror images identified)",
        "  axis: 1 2 3 4 5 6",
        "single-crossing: yes",
        "  order: 1 2 3",
    ]
    assert out.splitlines()[5].startswith("euclidean: NO")


def test_recognize_euclidean_profile(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text(serialize_profile(delete_voter(family.gen_profile(2), 2)))
    code, out, _ = run(capsys, "recognize", path)
    assert code == 0
    assert "euclidean: yes" in out and "  EMBED 8 3" in out


def test_generate_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "--k", 4)
    assert code == 0 and parse_profile(out) == family.gen_profile(4)
    target = tmp_path / "p4.profile"
    assert run(capsys, "generate", "--k", 4, "-o", target)[0] == 0
    assert read_profile(target) == family.gen_profile(4)


def test_verify_pipeline(capsys, tmp_path):
    p4 = tmp_path / "p4.profile"
    emb = tmp_path / "e4_s1.embed"
    run(capsys, "generate", "--k", 4, "-o", p4)
    run(capsys, "embed", "--k", 4, "--s", 1, "-o", emb)
    minus = tmp_path / "p4_minus_v1.profile"
    minus.write_text(serialize_profile(delete_voter(read_profile(p4), 1)))
    code, out, _ = run(capsys, "verify", minus, emb)
    assert (code, out) == (0, "OK\n")
    assert run(capsys, "verify", minus, emb, "--mode", "reduced")[:2] == (0, "OK\n")


def test_verify_reports_violations(capsys, tmp_path):
    prof = tmp_path / "p.profile"
    prof.write_text("2 1\n1 2\n")
    emb = tmp_path / "e.embed"
    emb.write_text("EMBED 2 1\nA 1 0\nA 2 2\nV 1 1\n")
    code, out, _ = run(capsys, "verify", prof, emb)
    assert code == 1
    assert out.splitlines()[0] == "FAIL: 1 violations"


def test_verify_with_undeleted_voter_is_an_error(capsys, tmp_path):
    p4 = tmp_path / "p4.profile"
    emb = tmp_path / "e.embed"
    run(capsys, "generate", "--k", 4, "-o", p4)
    run(capsys, "embed", "--k", 4, "--s", 2, "-o", emb)
    code, out, err = run(capsys, "verify", p4, emb)
    assert code == 2 and out == "" and "still present" in err


def test_witness(capsys, tmp_path, ex23_file):
    assert run(capsys, "witness", ex23_file, "--property", "sp")[:2] == (0, "NONE\n")
    assert run(capsys, "witness", ex23_file, "--property", "sc")[:2] == (0, "NONE\n")
    path = tmp_path / "i4.profile"
    path.write_text("4 2\n1 4 2 3\n3 4 2 1\n")
    code, out, _ = run(capsys, "witness", path, "--property", "sp")
    assert code == 1 and out == "Interval4: voters 1 2; alternatives 1 2 3 4\n"
    path.write_text("4 4\n1 2 3 4\n1 2 4 3\n2 1 3 4\n2 1 4 3\n")
    code, out, _ = run(capsys, "witness", path, "--property", "sc")
    assert code == 1 and out == "Delta4x4: voters 1 2 3 4; pairs (1,2) (3,4)\n"


def test_minimality(capsys):
    code, out, _ = run(capsys, "minimality", "--k", 2)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "k=2: not euclidean: yes; certificates valid: yes"
    assert lines[2:6] == [
        "1\tFAIL\t4\teuclidean",
        "2\tok\t0\teuclidean",
        "3\tok\t0\teuclidean",
        "4\tFAIL\t1\teuclidean",
    ]
    assert lines[-1] == "minimal: yes"


def test_errors_go_to_stderr(capsys, tmp_path):
    code, out, err = run(capsys, "recognize", tmp_path / "missing.profile")
    assert code == 2 and out == "" and err.startswith("error:")
    bad = tmp_path / "bad.profile"
    bad.write_text("3 1\n1 1 2\n")
    code, out, err = run(capsys, "recognize", bad)
    assert code == 2 and "line 2" in err
    assert run(capsys, "generate", "--k", 1)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "recognize", bad, "--axis-cap", 0)[0] == 2


def test_output_is_deterministic(capsys, ex23_file):
    first = run(capsys, "recognize", ex23_file)
    second = run(capsys, "recognize", ex23_file)
    assert first == second


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "prefdomains", "embed", "--k", "2", "--s", "3"],
        capture_output=True, text=True,
    )
    assert res.returncode == 0
    assert res.stdout.startswith("EMBED 8 4 s=3\n")
