import json
import math

import numpy as np
import pytest

from pauligeo import cli
from pauligeo.documents import check_result, coefficient_csv, parse_input
from pauligeo.errors import InvariantViolation, ParseError

from conftest import h0_phases


def write_doc(tmp_path, doc, name="in.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(path)


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def h0_file(tmp_path):
    return write_doc(tmp_path, {"n": 3, "phases": list(h0_phases(3, 0b111))})


def test_parse_diag_document():
    h = parse_input({"n": 1, "diag": [[1.0, 0.0], [-1.0, 0.0]]})
    np.testing.assert_allclose(h, [0.0, math.pi], atol=1e-15)


@pytest.mark.parametrize(
    "doc, error",
    [
        ([], ParseError),
        ({"n": 0, "phases": []}, ParseError),
        ({"n": 1}, ParseError),
        ({"n": 1, "phases": [0, 0], "diag": [[1, 0], [1, 0]]}, ParseError),
        ({"n": 1, "phases": [0, "x"]}, ParseError),
        ({"n": 2, "phases": [0, 0, 0]}, InvariantViolation),
        ({"n": 1, "diag": [[2, 0], [1, 0]]}, InvariantViolation),
    ],
)
def test_parse_errors(doc, error):
    with pytest.raises(error):
        parse_input(doc)


def test_coefficient_csv_rows():
    c = np.zeros(8)
    c[7] = math.pi / 8
    lines = coefficient_csv(c).splitlines()
    assert lines[0] == "mask,weight,coefficient"
    assert lines[8] == "7,3,0.3926990817"
    assert lines[1] == "0,0,0.0000000000"
    assert coefficient_csv(c, digits=0).splitlines()[8] == f"7,3,{math.pi / 8!r}"


def test_expand_cli(h0_file, capsys):
    code, out, _ = run(["expand", h0_file], capsys)
    assert code == 0
    assert "7,3,0.3926990817" in out.splitlines()


def test_minimize_cli(h0_file, capsys):
    code, out, _ = run(["minimize", h0_file, "--metric", "fq", "--q", "64"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["j"] == [0] * 8
    assert abs(doc["length"] - 8 * math.pi) <= 1e-9
    assert doc["optimal"] is True
    assert check_result(doc) <= 1e-9
    assert doc["f1_upper_bounds"]["plain_l1"] == pytest.approx(math.pi / 8)


@pytest.mark.parametrize("solver", ["rounding", "brute", "bnb"])
def test_minimize_f2_solvers_agree(h0_file, capsys, solver):
    code, out, _ = run(["minimize", h0_file, "--solver", solver], capsys)
    assert code == 0
    assert json.loads(out)["length"] == pytest.approx(math.pi / 8, abs=1e-12)


def test_check_result_rejects_tampering(h0_file, capsys):
    _, out, _ = run(["minimize", h0_file], capsys)
    doc = json.loads(out)
    doc["length"] += 1e-6
    with pytest.raises(InvariantViolation):
        check_result(doc)


def test_family_cli(capsys):
    code, out, _ = run(["family", "--n", "3", "--epsilon", "1e-4", "--q-list", "1,8"], capsys)
    assert code == 0
    report = json.loads(out)
    assert all(r["equality"] for r in report["lemma2"])
    assert report["scaling"]["ok"]
    assert all(r["within"] and r["distinct"] for r in report["perturbation"])


def test_verify_cli(capsys):
    code, out, err = run(["verify", "--suite", "roundtrip", "--trials", "5", "--seed", "3"], capsys)
    assert code == 0
    assert json.loads(out)["passed"] is True
    assert err.startswith("PASS")


def test_bench_cli(capsys):
    code, out, _ = run(["bench", "--solver", "brute,bnb", "--repeat", "1"], capsys)
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "solver,n,q,run,wall_ms,length"
    lengths = {float(r.split(",")[-1]) for r in rows[1:]}
    assert len(rows) == 3 and lengths == {100 * math.pi / 8}


def test_output_file(h0_file, tmp_path, capsys):
    target = tmp_path / "c.csv"
    assert cli.main(["expand", h0_file, "-o", str(target)]) == 0
    assert target.read_text().startswith("mask,weight,coefficient\n")


@pytest.mark.parametrize(
    "argv, code",
    [
        (["expand", "BAD"], 2),
        (["expand", "NOT_JSON"], 2),
        (["expand", "SHORT"], 3),
        (["minimize", "H0", "--metric", "f1"], 4),
        (["minimize", "H0", "--metric", "fq"], 4),
        (["minimize", "H0", "--q", "3"], 4),
        (["minimize", "H0", "--metric", "fq", "--q", "3", "--solver", "rounding"], 4),
        (["minimize", "BIG", "--solver", "brute"], 5),
        (["family", "--n", "3", "--sigma", "0b011"], 3),
        (["family", "--n", "3", "--epsilon", "1.0"], 3),
        (["bench", "--n", "9"], 5),
    ],
)
def test_exit_codes(tmp_path, capsys, h0_file, argv, code):
    files = {
        "H0": h0_file,
        "BAD": write_doc(tmp_path, {"n": "three"}, "bad.json"),
        "NOT_JSON": write_doc(tmp_path, "{not json", "nj.json"),
        "SHORT": write_doc(tmp_path, {"n": 2, "phases": [0.0, 1.0]}, "short.json"),
        "BIG": write_doc(tmp_path, {"n": 4, "phases": [0.0] * 16}, "big.json"),
    }
    argv = [files.get(a, a) for a in argv]
    got, _, err = run(argv, capsys)
    assert got == code
    assert err.startswith(f"pauligeo {argv[0]}:")
