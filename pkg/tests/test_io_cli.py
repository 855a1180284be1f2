import json
from pathlib import Path

import pytest

from canstrat import build_complex, canonical_stratification
from canstrat.bench import linear_fit, run_bench
from canstrat.cli import main
from canstrat.complex import DegenerateSimplex
from canstrat.generators import PAPER_416
from canstrat.io import ParseError, RunReport, format_input, format_tsv, make_report, parse_input

DATA = Path(__file__).parent / "data"


def _verts(text):
    return tuple(int(x) for x in text.split())


# -- parsing ---------------------------------------------------------------------

def test_parse_skips_comments_and_blanks():
    assert parse_input("0 1 2\n# c\n2 3\n") == [(0, 1, 2), (2, 3)]
    assert parse_input("\n  \n5 3 # trailing\n") == [(3, 5)]


def test_parse_repeated_vertex():
    with pytest.raises(DegenerateSimplex) as exc:
        parse_input("1 1\n")
    assert exc.value.line == 1
    assert "line 1" in str(exc.value)


@pytest.mark.parametrize("text,line", [("0 1\n0 x\n", 2), ("-1 2\n", 1), ("0 1.5\n", 1)])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_input(text)
    assert exc.value.line == line


def test_format_round_trip():
    assert parse_input(format_input(PAPER_416)) == PAPER_416


# -- reports -------------------------------------------------------------------

def test_tsv_one_line_per_simplex():
    s = canonical_stratification(build_complex(PAPER_416))
    lines = format_tsv(s).splitlines()
    assert len(lines) == len(s.complex) == 35
    assert lines[0] == "0\t2\t1"
    assert "3,4,8\t1\t2" in lines


def test_json_round_trip():
    s = canonical_stratification(build_complex(PAPER_416))
    r = make_report(s, poset=True, hom=True, timings={"stratify_ms": 1.0})
    back = RunReport.from_json(r.to_json())
    assert back == r
    assert "timings" not in json.loads(r.to_json(timings=False))
    plain = json.loads(make_report(s).to_json())
    assert "poset" not in plain and "hom_counts" not in plain


# -- cli -------------------------------------------------------------------------

def test_run_matches_hand_enumeration(capsys):
    assert main(["run", str(DATA / "paper416.txt"), "--poset", "--no-timings"]) == 0
    out = json.loads(capsys.readouterr().out)
    expected = json.loads((DATA / "paper416.expected.json").read_text())

    got: dict[int, set] = {}
    for row in out["assignment"]:
        got.setdefault(row["stratum"], set()).add(tuple(row["simplex"]))
    name_of = {}
    for name, spec in expected["strata"].items():
        members = {_verts(m) for m in spec["members"]}
        sid = next(k for k, v in got.items() if v == members)
        assert out["strata"][sid]["top_dim"] == spec["top_dim"]
        name_of[sid] = name
    assert len(got) == len(expected["strata"])
    rel = {(name_of[a], name_of[b]) for a, b in out["poset"]}
    assert rel == {tuple(p) for p in expected["relations"]}


def test_run_output_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    src = str(DATA / "pinched_annulus.txt")
    assert main(["run", src, "--hom", "--no-timings", "-o", str(a)]) == 0
    assert main(["run", src, "--hom", "--no-timings", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_run_tsv(capsys):
    assert main(["run", str(DATA / "pinched_annulus.txt"), "--format", "tsv"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 10 + 22 + 12


def test_run_input_errors(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing\n")
    assert main(["run", str(empty)]) == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n2 2\n")
    assert main(["run", str(bad)]) == 1
    assert "line 2" in capsys.readouterr().err
    assert main(["run", str(tmp_path / "missing.txt")]) == 1


def test_run_oracle(tmp_path, capsys):
    sphere = tmp_path / "s.txt"
    assert main(["gen", "sphere2", "-k", "3", "-o", str(sphere)]) == 0
    assert main(["run", str(sphere), "--oracle", "--no-timings"]) == 0
    assert len(json.loads(capsys.readouterr().out)["strata"]) == 1

    pinched = tmp_path / "p.txt"
    main(["gen", "pinched_sphere", "-o", str(pinched)])
    assert main(["run", str(pinched), "--oracle", "--no-strict", "--no-timings"]) == 2
    err = capsys.readouterr().err
    assert "simplex 4" in err and "unsound" in err
    assert main(["run", str(pinched), "--oracle", "--no-timings"]) == 0


def test_gen_output(capsys):
    assert main(["gen", "simplex_boundary", "-k", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1:] == ["0 1", "0 2", "1 2"]
    assert parse_input(out) == [(0, 1), (0, 2), (1, 2)]
    assert main(["gen", "paper_416", "-k", "2"]) == 1


def test_bench_cli(tmp_path, capsys):
    path = tmp_path / "b.json"
    assert main(["bench", "sphere2", "--levels", "0..2", "--trials", "2", "--json", str(path)]) == 0
    assert "linear_fit" in capsys.readouterr().out
    data = json.loads(path.read_text())
    assert [r["level"] for r in data["levels"]] == [0, 1, 2]
    assert [r["s"] for r in data["levels"]] == [26, 98, 386]


def test_bench_single_trial_has_zero_spread():
    r = run_bench("simplex_boundary", [2, 3], trials=1)
    assert all(lv.stddev_ms == 0.0 and lv.trials == 1 for lv in r.levels)
    with pytest.raises(ValueError):
        run_bench("sphere2", [0], trials=0)


def test_bench_parallel():
    r = run_bench("sphere2", [0, 1], trials=2, parallel=True)
    assert [lv.trials for lv in r.levels] == [2, 2]


def test_linear_fit():
    assert linear_fit([10, 40], [1.0, 4.0]) == pytest.approx(1.0)
    assert linear_fit([10, 20, 40], [1.0, 2.0, 8.0]) == pytest.approx(2.0)
    assert linear_fit([10], [1.0]) == 1.0
