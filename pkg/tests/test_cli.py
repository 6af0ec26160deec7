import csv
import io
import json
import subprocess
import sys

import pytest

from evenclifford.cli import main
from evenclifford.octonion import PRINTED_TABLE_ROWS


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_table_csv_matches_printed(capsys):
    code, out = run(capsys, "table", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 9 and all(len(r) == 9 for r in rows)
    assert rows[0] == [""] + [f"u_{i}" for i in range(8)]
    body = [" ".join(r[1:]) for r in rows[1:]]
    assert [b.split() for b in body] == [r.split() for r in PRINTED_TABLE_ROWS]


def test_table_json_sedenion(capsys):
    code, out = run(capsys, "table", "--algebra", "sedenion-like", "--format", "json")
    data = json.loads(out)
    cells = [c for row in data["entries"] for c in row]
    assert code == 0 and len(cells) == 256
    assert set(cells[0]) == {"k", "sigma", "p"}


def test_table_markdown_lambda_flip(capsys):
    _, plus = run(capsys, "table", "--format", "csv")
    _, minus = run(capsys, "table", "--format", "csv", "--lambda", "-1")
    p = list(csv.reader(io.StringIO(plus)))
    m = list(csv.reader(io.StringIO(minus)))
    assert p[2][3] == "u_3" and m[2][3] == "-u_3"
    assert p[2][2] == m[2][2] == "-1"
    code, md = run(capsys, "table", "--lambda", "-1")
    assert code == 0 and md.startswith("|")


def test_table_deterministic(capsys):
    a = run(capsys, "table", "--algebra", "sedenion-like")
    b = run(capsys, "table", "--algebra", "sedenion-like")
    assert a == b


def test_compute_product(capsys):
    x = json.dumps({"algebra": "octonion-like", "lambda": 1, "coeffs": [0, 1, 0, 0, 0, 0, 0, 0]})
    code, out = run(capsys, "compute", "product", x, "[0,0,1,0,0,0,0,0]")
    assert code == 0
    assert json.loads(out) == {"algebra": "octonion-like", "lambda": 1, "coeffs": [0, 0, 0, 1, 0, 0, 0, 0]}


def test_compute_inverse_singular(capsys):
    code, out = run(capsys, "compute", "inverse", "[1,0,0,0,0,0,0,-1]")
    assert code == 2
    data = json.loads(out)
    assert data["error"] == "SingularElement" and data["which"] == [1]


def test_compute_inverse_fraction(capsys):
    code, out = run(capsys, "compute", "inverse", '["2",0,0,0,0,0,0,0]')
    assert code == 0 and json.loads(out)["coeffs"][0] == "1/2"


def test_compute_split_example(capsys):
    code, out = run(capsys, "compute", "split", "--algebra", "sedenion-like",
                    "[1,0,0,0,0,0,0,1,1,0,0,0,0,0,0,1]")
    assert code == 0
    assert json.loads(out) == {"real": [1, 0, 0, 0, 0, 0, 0, 1], "dual": [-1, 0, 0, 0, 0, 0, 0, 1]}


def test_compute_norm_not_orthogonal(capsys):
    code, out = run(capsys, "compute", "norm", "--algebra", "sedenion-like",
                    "[1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0]")
    assert code == 3
    assert json.loads(out)["defect"] == [0, 0, 0, 0, 0, 0, 0, 2]


def test_compute_defect_and_norm(capsys):
    code, out = run(capsys, "compute", "defect", "--algebra", "sedenion-like",
                    "[1,0,0,0,0,0,0,1,1,0,0,0,0,0,0,1]")
    assert code == 0 and json.loads(out)["orthogonal"] is True
    code, out = run(capsys, "compute", "norm", "[1,0,0,0,0,0,0,-1]")
    assert json.loads(out)["seminorm_sq_1"] == 0


def test_compute_dagger_float(capsys):
    code, out = run(capsys, "compute", "dagger", "--mode", "float", "[1,2,0,0,0,0,0,3]")
    assert code == 0 and json.loads(out)["coeffs"] == [1.0, -2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3.0]


@pytest.mark.parametrize("argv", [
    ["compute", "norm", "[1,2]"],
    ["compute", "product", "[1,0,0,0,0,0,0,0]"],
    ["compute", "split", "[1,0,0,0,0,0,0,0]"],
    ["compute", "dagger", "not json"],
    ["compute", "product", '{"lambda":1,"coeffs":[1,0,0,0,0,0,0,0]}', '{"lambda":-1,"coeffs":[1,0,0,0,0,0,0,0]}'],
])
def test_compute_input_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 4
    assert "error" in json.loads(out)


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["table", "--algebra", "nope"])
    assert info.value.code == 4


def test_operand_from_file(capsys, tmp_path):
    p = tmp_path / "x.json"
    p.write_text('{"coeffs":[0,1,0,0,0,0,0,0]}')
    code, out = run(capsys, "compute", "dagger", f"@{p}")
    assert json.loads(out)["coeffs"][1] == -1


def test_verify_assoc_sedenion(capsys):
    code, out = run(capsys, "verify", "--algebra", "sedenion-like", "--suite", "assoc", "--format", "json")
    rep = json.loads(out)[0]
    assert code == 0 and rep["failures"] == []
    assert rep["cases"] >= 4096


def test_verify_grading_octonion(capsys):
    code, out = run(capsys, "verify", "--suite", "grading", "--format", "json")
    rep = json.loads(out)[0]
    assert code == 0 and rep["cases"] == 64 and rep["failures"] == []


def test_verify_hopf(capsys):
    for alg in ("octonion-like", "sedenion-like"):
        code, _ = run(capsys, "verify", "--algebra", alg, "--suite", "hopf")
        assert code == 0


def test_verify_table_diff_informational_unless_strict(capsys):
    code, out = run(capsys, "verify", "--algebra", "sedenion-like", "--suite", "table-diff", "--format", "json")
    rep = json.loads(out)[0]
    assert code == 0 and len(rep["table_diff"]) == 1
    code, _ = run(capsys, "verify", "--algebra", "sedenion-like", "--suite", "table-diff", "--strict")
    assert code == 1


def test_verify_commutant_sedenion_fails(capsys):
    code, out = run(capsys, "verify", "--algebra", "sedenion-like", "--suite", "commutant", "--format", "json")
    assert code == 1 and json.loads(out)[0]["failures"]


def test_verify_out_file_deterministic(tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        subprocess.run(
            [sys.executable, "-m", "evenclifford.cli", "verify", "--suite", "matrix", "--suite", "norm",
             "--seed", "7", "--format", "json", "--out", str(path)],
            check=True, capture_output=True,
        )
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert [r["suite"] for r in json.loads(outs[0])] == ["matrix", "norm"]
