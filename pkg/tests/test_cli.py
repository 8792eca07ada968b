"""Command line interface: formats, determinism, exit codes."""

import json

import pytest

from semiroot.cli import main, parse_input, run_command
from semiroot.errors import SemirootError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_input_examples():
    spec = parse_input('{"generators": [[2,0],[3,0],[0,1]]}')
    assert spec.generators == [[2, 0], [3, 0], [0, 1]]
    with pytest.raises(SemirootError):
        parse_input('{"generators": []}')  # surfaces on semigroup build
    with pytest.raises(SemirootError):
        parse_input("{not json")
    with pytest.raises(SemirootError):
        parse_input('{"generators": [[2, "x"]]}')


def test_classify_cusp(capsys):
    code, out, _ = run(
        capsys, "classify", "--gens", "2,0;3,0;0,1", "--reproducible"
    )
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "classify"
    assert report["result"]["cohen_macaulay"]["status"] == "yes"
    assert report["result"]["buchsbaum"]["status"] == "yes"
    assert report["stabilized"] is True
    assert "timing_seconds" not in report


def test_classify_negative_entry_exit_code(capsys):
    code, _, err = run(capsys, "classify", "--gens", "2,-1")
    assert code == 2
    assert "error" in json.loads(err)


def test_classify_strict_no(capsys):
    gens = "0,10;3,7;7,3;8,2;10,0"
    code, out, _ = run(
        capsys, "classify", "--gens", gens, "--bound", "24", "--strict",
        "--reproducible",
    )
    assert code == 1
    report = json.loads(out)
    assert report["result"]["buchsbaum"]["witness"] == [9, 11]


def test_exceptional_command(capsys):
    code, out, _ = run(
        capsys, "exceptional", "--gens", "2,0;3,0;0,1", "--axis", "2",
        "--degree", "6", "--reproducible",
    )
    assert code == 0
    report = json.loads(out)
    assert report["result"]["generators"] == [[0, -1], [3, -1]]
    assert report["result"]["regenerated_matches"] is True


def test_bracket_command(tmp_path, capsys):
    doc = {
        "dimension": 2,
        "x": [[[-1, 1], 1, 1, 1]],
        "y": [[[1, -1], 2, 1, 1]],
    }
    path = tmp_path / "bracket.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(
        capsys, "bracket", "--input", str(path), "--reproducible"
    )
    assert code == 0
    report = json.loads(out)
    assert report["result"]["bracket"] == [
        [[0, 0], 1, -1, 1],
        [[0, 0], 2, 1, 1],
    ]


def test_member_command(tmp_path, capsys):
    doc = {
        "generators": [[0, 10], [3, 7], [7, 3], [8, 2], [10, 0]],
        "derivation": [[[9, 11], 1, 7, 1], [[9, 11], 2, -3, 1]],
    }
    path = tmp_path / "member.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(
        capsys, "member", "--input", str(path), "--strict", "--reproducible"
    )
    assert code == 0
    assert json.loads(out)["result"]["member"]["status"] == "yes"
    doc["derivation"] = [[[9, 11], 1, 1, 1]]
    path.write_text(json.dumps(doc))
    code, out, _ = run(
        capsys, "member", "--input", str(path), "--strict", "--reproducible"
    )
    assert code == 1
    assert json.loads(out)["result"]["member"]["witness"] == [3, 7]


def test_cocycle_command(capsys):
    code, out, _ = run(
        capsys, "cocycle", "--gens", "2;3", "--degree", "12", "--reproducible"
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["restricted_equal"] is True
    assert result["inner_dimension"] == 1


def test_compare_command(tmp_path, capsys):
    all6 = [[i, 6 - i] for i in range(7)]
    doc = {
        "semigroups": [
            {"generators": [g for g in all6 if g != [3, 3]]},
            {"generators": [g for g in all6 if g != [2, 4]]},
        ]
    }
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(
        capsys, "compare", "--input", str(path), "--degree", "8",
        "--reproducible",
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["fingerprints_equal"] is True
    assert result["semigroups_equal"] is False


def test_reconstruct_command(capsys):
    code, out, _ = run(
        capsys, "reconstruct", "--gens", "1", "--reproducible"
    )
    assert code == 0
    assert json.loads(out)["result"]["generators"] == [[2], [3]]


def test_roots_command_and_text_mode(capsys):
    code, out, _ = run(
        capsys, "roots", "--gens", "2;3", "--degree", "3", "--text",
        "--reproducible",
    )
    assert code == 0
    assert "roots:" in out


def test_byte_identical_reports(capsys):
    args = (
        "classify", "--gens", "0,2;1,1;2,0", "--bound", "8", "--reproducible"
    )
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_unknown_command_rejected(capsys):
    with pytest.raises(SystemExit):
        run_command(["frobnicate"])
