import pytest

from ewcodes import catalog
from ewcodes.cli import main
from ewcodes.exactmat import SignMatrix, ones


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def kv(text):
    return dict(line.split("\t", 1) for line in text.splitlines())


@pytest.mark.parametrize("argv, code", [
    (["check", "EW14", "skew-ew"], 0),
    (["check", "C6", "skew-ew"], 1),
    (["check", "EW6", "max-det-skew"], 0),
    (["check", "C6", "max-det-skew"], 2),
    (["check", "C14", "weighing:13"], 0),
    (["check", "C14", "conference"], 0),
    (["check", "EW6", "skew-type"], 0),
    (["check", "EW6", "bogus"], 2),
    (["check", "nope.txt", "skew-ew"], 2),
    (["feasibility", "6", "90"], 0),
    (["feasibility", "9", "6"], 2),
    (["solve", "star", "14", "3"], 0),
    (["solve", "star", "6", "3"], 1),
    (["solve", "p1", "14", "13", "5"], 1),
    (["solve", "star", "14"], 2),
    (["construct", "star", "EW14", "3", "1,1,1"], 0),
    (["construct", "p1", "C14", "7", "1"], 0),
    (["construct", "star", "C6", "7", "2,2,1"], 2),
    (["construct", "star", "EW6", "3", "1,1,1"], 2),
    (["distance", "star", "EW6", "7", "2,2,1"], 0),
    (["distance", "star", "EW14", "23", "9,7,1", "--algorithm", "enum"], 2),
    (["tables", "2"], 0),
    (["skew-search", "EW6", "--scramble", "1"], 0),
    (["skew-search", "C6"], 2),
    (["frobnicate"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_check_reports_numbers(capsys):
    code, out, _ = run(capsys, "check", "EW14", "skew-ew", "--format", "tsv")
    r = kv(out)
    assert code == 0
    assert r["verdict"] == "true"
    assert r["det_shifted"] == r["bound"] == "44289025"
    code, out, _ = run(capsys, "check", "EW6", "max-det-skew", "--format", "tsv")
    assert kv(out)["det"] == "160"


def test_feasibility_rows(capsys):
    _, out, _ = run(capsys, "feasibility", "6", "90", "--format", "tsv")
    lines = [l.split("\t") for l in out.splitlines()[1:]]
    assert {int(l[0]) for l in lines if l[3] == "true"} == {6, 14, 26, 42, 62, 86}
    _, out, _ = run(capsys, "feasibility", "18", "18", "--format", "tsv")
    row = out.splitlines()[1].split("\t")
    assert row[3] == "false" and "4^2+1^2" in row[5]


def test_solve_output(capsys):
    _, out, _ = run(capsys, "solve", "star", "14", "3", "--format", "tsv")
    assert out.splitlines()[1] == "3\t1\t1\t1"
    _, out, _ = run(capsys, "solve", "star", "6", "7", "--all", "--format", "tsv")
    assert "7\t2\t2\t1" in out.splitlines()
    _, out, _ = run(capsys, "solve", "p1", "6", "5", "23", "--all", "--format", "tsv")
    assert "23\t8" in out.splitlines()


def test_construct_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "star", "EW14", "3", "1,1,1")
    assert code == 0 and "self_dual=true" in out
    p, G = catalog.parse_generator(out)
    from ewcodes.constructions import build_star
    C = build_star(catalog.get("EW14").matrix, 1, 1, 1, 3)
    assert p == 3 and (G == C.generator).all()
    f = tmp_path / "g.txt"
    run(capsys, "construct", "p1", "C6", "3", "--output", str(f))
    code, out, _ = run(capsys, "distance", "gen", str(f), "--format", "tsv")
    assert code == 0 and kv(out)["d"] == "6"


def test_distance_output(capsys):
    _, out, _ = run(capsys, "distance", "star", "EW14", "3", "1,1,1", "--format", "tsv")
    r = kv(out)
    assert (r["d"], r["exact"], r["distance_cap"]) == ("9", "true", "9")


def test_tables_transcription_is_stable(capsys):
    _, out, _ = run(capsys, "tables", "2", "--format", "tsv")
    assert out == (
        "table\tN\tp\talpha,beta\td\td_b\n"
        "2\t12\t3\t\t\t\n"
        "2\t12\t5\t\t\t\n"
        "2\t12\t7\t2,2\t5\t6\n"
        "2\t12\t23\t\t\t\n"
        "2\t28\t3\t1,1\t9\t9\n"
        "2\t28\t5\t2,2\t8\t10 - 12\n"
        "2\t28\t7\t\t\t\n"
        "2\t28\t23\t9,7\t9\t\n"
        "2\t52\t3\t1,1\t12\t15\n"
        "2\t52\t5\t\t\t\n"
        "2\t52\t7\t\t\t\n"
        "2\t52\t23\t\t\t\n"
    )


def test_skew_search_outcomes(capsys, tmp_path):
    _, out, _ = run(capsys, "skew-search", "EW14", "--scramble", "5", "--format", "tsv")
    assert kv(out)["status"] == "found"
    f = tmp_path / "ones.txt"
    f.write_text(catalog.dump_matrix(SignMatrix(ones(6))))
    code, out, _ = run(capsys, "skew-search", str(f), "--format", "tsv")
    assert code == 1 and kv(out)["status"] == "no row-witness found"
    code, out, _ = run(capsys, "skew-search", "EW14", "--scramble", "2", "--mode", "all",
                       "--node-cap", "10", "--format", "tsv")
    assert code == 1 and kv(out)["status"] == "inconclusive (cap)"


def test_check_on_file_parse_error(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("2\n1 2\n1 1\n")
    code, _, err = run(capsys, "check", str(f), "skew-type")
    assert code == 2 and "line 2, column 2" in err


@pytest.mark.slow
@pytest.mark.parametrize("which", [1, 2])
def test_tables_recompute_matches(capsys, which):
    code, out, _ = run(capsys, "tables", str(which), "--recompute", "--format", "tsv")
    assert code == 0
    rows = [l.split("\t") for l in out.splitlines()[1:]]
    assert all(r[-1] in ("true", "skipped") for r in rows)
    published = [r for r in rows if r[4]]
    assert all(r[6] == r[4] or r[-1] == "skipped" for r in published)
