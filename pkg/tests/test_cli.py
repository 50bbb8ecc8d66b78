import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from realbraid.braid import parse_braid
from realbraid.cli import VERBS, build_parser, main, run
from realbraid.realstructure import RealFactorization

DATA = Path(__file__).resolve().parent.parent / "data"

GOLDEN = [
    (["equal", "B3 1 2 1", "B3 2 1 2"], 0, "true"),
    (["equal", "B2 1", "B2 -1"], 1, "false"),
    (["equal", "B4 1 2 1 3 2 1 -1 3", "B4 1 2 3 1 2 3"], 0, "true"),
    (["alexander", "--closure", "B2 1 1"], 0, "-1 + t"),
    (["alexander", "--closure", "B2"], 0, "0"),
    (["alexander", "--closure", "--full", "B3 1 2 1 1 2 1"], 0,
     "1 + -t + -t^3 + t^4\ndivisors: [-1 + t, -1 + t^3]\nfree: false"),
    (["alexander", "B2 1", "B2 1"], 0, "1"),
    (["central-eq", "B4 1 2 3 1 2 3"], 0, "true"),
    (["central-eq", "B3 1"], 1, "false"),
    (["normalize", "t^-2 - t^-1"], 0, "-1 + t"),
    (["delta", "4"], 0, "B4 1 2 1 3 2 1"),
    (["rev", "B4 1 -2 3"], 0, "B4 3 -2 1"),
    (["rmap", "B4 1 2"], 0, "B4 3 2"),
    (["conj", "B4 1", "-k", "2"], 0, "B4 -3"),
    (["conj", "B5 1", "-k", "1"], 0, "B5 2 3 -4 -3 -2"),
    (["action", "B2 1", "1"], 0, "-1 2 1"),
    (["nf", "B3 -1"], 0, "inf: -1\nfactors: [2 3 1]"),
    (["nf", "B4 1 2 1 3 2 1"], 0, "inf: 1\nfactors: []"),
    (["conj-delta", "B4 1 2 3 1 2 3"], 0, "true"),
    (["conj-delta", "B3 1 1 1"], 1, "false"),
    (["vankampen", "B2 1"], 0, "gens: 2\n-1 2\n1 -2"),
    (["vankampen", "--strands", "3"], 0, "gens: 3"),
    (["burau", "B2 1"], 0, "[-t]"),
    (["burau", "--alexander", "B2 1 1"], 0, "-1 + t"),
    (["closed-form", "milnor-orlik", "2", "3"], 0, "1 + -t + t^2"),
    (["closed-form", "hopf-link", "3"], 0, "1 + -t + -t^3 + t^4"),
    (["closed-form", "delta-odd", "3"], 0, "1 + -t + -t^3 + t^4"),
    (["divides", "t - 1", "t^3 - 1"], 0, "true"),
    (["divides", "t - 1", "t + 1"], 1, "false"),
    (["divides", "0", "0"], 0, "true"),
    (["divides", "0", "t"], 1, "false"),
    (["multiplicity", "t - 1", "t^2 - 2*t + 1"], 0, "2"),
    (["build-acnode", "4", "2"], 0,
     "strands: 4\nfiber_real_points: 0\nupper:\nB4 1 2 1 3 2 1 -2\nreal:\nB4 2 2"),
    (["build-arrangement", "1", "1"], 0, "B4 1 1\nB4 3 3"),
    (["verify-real", str(DATA / "delta4.fact")], 0, "true"),
    (["verify-real", str(DATA / "s123_squared.fact")], 0, "true"),
    (["verify-real", str(DATA / "acnode_6_4.fact")], 0, "true"),
    (["verify-real", str(DATA / "acnode_8_4.fact")], 0, "true"),
    (["verify-real", str(DATA / "bad_real_part.fact")], 1, "false"),
    (["verify-real", "--garside", str(DATA / "s123_squared.fact")], 0, "true"),
    (["derive-lower", str(DATA / "upper_s1_s2.fact")], 0, "B4 2\nB4 3"),
]


@pytest.mark.parametrize("argv, code, text", GOLDEN, ids=lambda x: " ".join(x) if isinstance(x, list) else None)
def test_golden(argv, code, text):
    assert run(argv) == (code, text)


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["equal", "B3 5", "B3 1"], "generator index out of range"),
        (["equal", "B3 0", "B3 1"], "zero generator index"),
        (["equal", "X3 1", "B3 1"], "malformed braid header"),
        (["equal", "B3 1", "B4 1"], "strand mismatch"),
        (["frobnicate"], "invalid choice"),
        (["normalize", "2t"], "missing"),
        (["closed-form", "delta-even", "5"], "even"),
        (["closed-form", "milnor-orlik", "2"], "argument"),
        (["conj", "B4 1", "-k", "3"], ""),
        (["multiplicity", "t", "t - 1"], ""),
        (["verify-real", "/nonexistent/file.fact"], ""),
        (["verify-real", "--garside", str(DATA / "bad_real_part.fact")], "empty-real-critical-values"),
        (["vankampen"], "--strands"),
        (["alexander", "--closure", "B2 1", "B2 1"], "exactly one braid"),
        (["divides", "t"], "two polynomials"),
        (["build-acnode", "5", "2"], ""),
        (["build-arrangement", "0"], ""),
    ],
)
def test_input_errors_exit_2(argv, fragment):
    code, text = run(argv)
    assert code == 2
    assert text.startswith("error:")
    assert fragment in text


def test_every_verb_is_registered():
    parser = build_parser()
    sub = next(a for a in parser._actions if a.dest == "verb")
    assert set(sub.choices) == set(VERBS)


def test_json_mirrors_text():
    code, text = run(["alexander", "--closure", "B2 1 1", "--format", "json"])
    assert code == 0
    assert json.loads(text) == {"poly": "-1 + t", "divisors": ["-1 + t"], "free": False}
    code, text = run(["equal", "B2 1", "B2 -1", "--format", "json"])
    assert code == 1 and json.loads(text) == {"verdict": False}
    code, text = run(["nf", "B3 -1", "--format", "json"])
    assert json.loads(text) == {"inf": -1, "factors": [[2, 3, 1]]}
    code, text = run(["build-arrangement", "1", "2", "--format", "json"])
    assert json.loads(text) == {"real": ["B6 1 1", "B6 3 4 3 5 4 3 3 4 3 5 4 3"]}


def test_stdin_inputs():
    assert run(["rev", "-"], io.StringIO("B3 1 -2\n")) == (0, "B3 -2 1")
    text = (DATA / "delta4.fact").read_text()
    assert run(["verify-real", "-"], io.StringIO(text)) == (0, "true")


def test_split_is_seeded():
    argv = ["divides", "--split", "B3 1 2 1 1 2 1 -2 1", "--seed", "3"]
    first = run(argv)
    assert first == run(argv)
    assert first[0] == 0 and first[1].startswith("split: B3")


def test_sextic_multiplicity_pipeline():
    _, poly = run(["closed-form", "delta-even", "6"])
    assert run(["multiplicity", "t^2 - t + 1", poly]) == (0, "3")
    assert run(["divides", "t^4 - 2*t^3 + 3*t^2 - 2*t + 1", poly]) == (0, "true")


def test_main_streams(capsys):
    assert main(["delta", "3"]) == 0
    assert capsys.readouterr().out == "B3 1 2 1\n"
    assert main(["delta", "0"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "realbraid", "equal", "B3 1 2 1", "B3 2 1 2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "true"


# -- data files -------------------------------------------------------------


def test_braid_file_round_trip():
    for line in (DATA / "braids.txt").read_text().splitlines():
        assert str(parse_braid(line)) == line


@pytest.mark.parametrize("path", sorted(DATA.glob("*.fact")), ids=lambda p: p.name)
def test_factorization_files_round_trip(path):
    text = path.read_text()
    assert str(RealFactorization.parse(text)) == text
