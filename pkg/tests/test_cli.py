import json

import pytest

from agol.cli import EXIT_ENCODING, EXIT_MISMATCH, EXIT_OK, EXIT_SIMULATION, EXIT_USAGE, main, poly_text
from agol.cycles import CycleDescriptor
from agol.quad import QuadExt
from agol.tracksim import encoding_path


def out_of(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr()


def test_dilatation_text(capsys):
    code, io = out_of(capsys, ["dilatation", "1,0,1;0,1,1"])
    assert code == EXIT_OK
    assert "(7+3√5)/2" in io.out
    assert "6.854101966250" in io.out and "approximate" in io.out


@pytest.mark.parametrize("word, lam", [("1,1,1", "2+√3"), ("1,2,1", "(5+√21)/2")])
def test_dilatation_json(capsys, word, lam):
    code, io = out_of(capsys, ["dilatation", word, "--json"])
    obj = json.loads(io.out)
    assert obj["dilatation"] == lam
    assert QuadExt.parse(obj["dilatation"]).minimal_polynomial() == tuple(obj["minimal_polynomial"])


@pytest.mark.parametrize(
    "surface, word, length, split, total",
    [
        ("torus", "1,2,1", 6, "RRRLLL", 7),
        ("sphere", "1,2,1", 8, "RLRLLRLL", 9),
        ("sphere", "1,0,1;0,1,1", 10, "MRLLLMRLLL", 12),
    ],
)
def test_cycle_json(capsys, surface, word, length, split, total):
    code, io = out_of(capsys, ["cycle", surface, word, "--json"])
    obj = json.loads(io.out)
    assert (obj["length"], obj["split_word"], obj["total"]) == (length, split, total)
    assert CycleDescriptor.from_json(obj).to_json() == obj


def test_reverse_flag(capsys):
    _, a = out_of(capsys, ["cycle", "sphere", "1,0,1;0,2,1", "--json"])
    _, b = out_of(capsys, ["cycle", "sphere", "0,2,1;1,0,1", "--json", "--reverse"])
    assert json.loads(a.out) == json.loads(b.out)


@pytest.mark.parametrize(
    "surface, word, m, total",
    [("torus", "1,1,1", 3, 6), ("sphere", "1,2,1", 8, 9), ("torus", "1,2,1", 6, 7)],
)
def test_simulate(capsys, surface, word, m, total):
    code, io = out_of(capsys, ["simulate", surface, word, "--json"])
    obj = json.loads(io.out)
    assert code == EXIT_OK and obj["length"] == m and obj["total"] == total
    if word == "1,1,1":
        assert obj["splitting_numbers"] == [2, 2, 2]


def test_simulate_trace(capsys):
    code, io = out_of(capsys, ["simulate", "torus", "1,1,1", "--trace"])
    lines = [json.loads(x) for x in io.out.splitlines() if x.startswith("{")]
    assert [x["type"] for x in lines] == ["R", "L", "L"]


def test_simulate_budget_exhausted(capsys):
    code, io = out_of(capsys, ["simulate", "torus", "1,2,1", "--max-steps", "2"])
    assert code == EXIT_SIMULATION and "simulation" in io.err


def test_conjugate(capsys):
    code, io = out_of(capsys, ["conjugate", "1,2,1", "2,1,1", "--json"])
    assert json.loads(io.out) == {"equivalent": True, "profiles_match": True,
                                  "certificate": {"shift": 0, "flip": True}}
    _, io = out_of(capsys, ["conjugate", "1,1,2;2,1,1", "2,1,1;1,1,2", "--json"])
    assert json.loads(io.out)["certificate"] == {"shift": 1, "flip": False}
    _, io = out_of(capsys, ["conjugate", "1,2,1", "1,1,1"])
    assert "equivalent  no" in io.out


def test_canonical(capsys):
    _, io = out_of(capsys, ["canonical", "2,1,1;1,1,2"])
    assert io.out.strip() == "1,1,2;1,2,1"


@pytest.mark.parametrize("surface, word", [("torus", "1,1,1"), ("torus", "1,2,1"), ("sphere", "1,2,1"),
                                           ("sphere", "1,0,1;0,1,1"), ("sphere", "1,1,1")])
def test_verify_pass(capsys, surface, word):
    code, io = out_of(capsys, ["verify", surface, word, "--json"])
    obj = json.loads(io.out)
    assert code == EXIT_OK and obj["pass"]


def test_verify_corrupted_encoding(capsys, tmp_path, monkeypatch):
    f = tmp_path / "tracks.json"
    f.write_text('{"version": 1, "tracks": {"b": {"surface": "torus"}}}')
    monkeypatch.setenv("AGOL_TRACKS", str(f))
    code, io = out_of(capsys, ["verify", "torus", "1,1,1"])
    assert code == EXIT_ENCODING and "encoding" in io.err


def test_verify_mismatch_exit_code(capsys, tmp_path, monkeypatch):
    # a mirrored torus track swaps every L and R
    data = json.loads(encoding_path().read_text(encoding="utf-8"))
    for s in data["tracks"]["b"]["switches"]:
        s["double"].reverse()
    f = tmp_path / "mirror.json"
    f.write_text(json.dumps(data))
    monkeypatch.setenv("AGOL_TRACKS", str(f))
    code, io = out_of(capsys, ["verify", "torus", "1,2,1"])
    assert code in (EXIT_MISMATCH, EXIT_SIMULATION)


def test_invalid_word(capsys):
    code, io = out_of(capsys, ["dilatation", "1,0,1"])
    assert code == EXIT_USAGE and "exists k" in io.err


def test_batch(capsys, tmp_path):
    f = tmp_path / "words.txt"
    f.write_text("1,2,1\n1,0,1;0,1,1\n1,1,1\n")
    code, io = out_of(capsys, ["batch", str(f)])
    rows = io.out.strip().splitlines()
    assert code == EXIT_OK and len(rows) == 4
    assert rows[1].split("\t")[2:6] == ["6", "7", "8", "9"]


def test_batch_empty_and_errors(capsys, tmp_path):
    f = tmp_path / "empty.txt"
    f.write_text("")
    code, io = out_of(capsys, ["batch", str(f), "--json"])
    assert code == EXIT_OK and json.loads(io.out) == {"rows": [], "errors": []}
    f.write_text("1,2,1\nbogus\n2,1,1\n")
    code, io = out_of(capsys, ["batch", str(f), "--json"])
    obj = json.loads(io.out)
    assert code == EXIT_OK and len(obj["rows"]) == 2 and obj["errors"][0]["line"] == 2
    # flip-equivalent words give identical rows
    assert obj["rows"][0] == obj["rows"][1]


def test_poly_text():
    assert poly_text((1, -7, 1)) == "t^2 - 7t + 1"
    assert poly_text((4, -3)) == "4t - 3"
