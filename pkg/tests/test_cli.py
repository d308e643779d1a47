import json

import pytest

from pyLatticeWorks import cli
from pyLatticeWorks.exceptions import DocumentError
from pyLatticeWorks.involution import k3_two_lattice
from pyLatticeWorks.lattice import make_U


def _run_json(capsys, argv):
    code = cli.main(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_beauville(capsys):
    code, report = _run_json(capsys, ["beauville", "-17"])
    assert code == 0
    assert report["status"] == "pass"
    assert report["data"] == {"trace": -17, "k_squared": 288, "chi": 37, "euler": 156, "moduli_dim": 19}


def test_beauville_invalid_trace(capsys):
    assert cli.main(["beauville", "4"]) == 1
    assert "not a non-symplectic-involution trace" in capsys.readouterr().err


def test_classify(capsys):
    code, report = _run_json(capsys, ["classify"])
    assert code == 0
    rows = report["data"]["rows"]
    assert [r["fibre_size"] for r in rows] == [2, 1, 4, 2]
    assert [r["invariant_lattice"] for r in rows] == ["U", "U(2)", "⟨2⟩⊕⟨-2⟩", "⟨2⟩⊕⟨-2⟩"]


def test_lattice_disc(capsys):
    code, report = _run_json(capsys, ["lattice", "disc", "--gram", "[[0,2],[2,0]]"])
    assert code == 0
    assert report["data"]["orders"] == [2, 2]
    assert sorted(report["data"]["q_values"]) == [0, 0, 1]


def test_lattice_named_vector_divisibility(capsys):
    code, report = _run_json(capsys, ["lattice", "div", "--gram", "Λ", "--vector", "2e1+2f1+3delta"])
    assert code == 0
    assert report["data"]["divisibility"] == 2

    code, report = _run_json(capsys, ["lattice", "div", "--gram", "Lambda", "--vector", "δ"])
    assert report["data"]["divisibility"] == 2


def test_lattice_represent(capsys):
    code, report = _run_json(capsys, ["lattice", "represent", "--gram", "[[2,0],[0,-2]]", "-n", "-10"])
    assert code == 0
    assert report["data"]["solutions"] == [[2, -3], [2, 3]]
    assert report["data"]["complete"] is True


def test_lattice_det_sig_snf(capsys):
    code, report = _run_json(capsys, ["lattice", "det", "--gram", "E8"])
    assert report["data"]["det"] == 1
    code, report = _run_json(capsys, ["lattice", "sig", "--gram", "Lambda"])
    assert report["data"]["signature"] == [3, 20]
    code, report = _run_json(capsys, ["lattice", "snf", "--gram", "[[2,4],[4,2]]"])
    assert code == 0
    assert report["data"]["diagonal"] == [2, 6]


def test_lattice_complement(capsys):
    code, report = _run_json(capsys, ["lattice", "complement", "--gram", "U", "--vector", "[1,-1]"])
    assert code == 0
    assert report["data"]["gram"] == [[2]]
    assert report["data"]["primitive"] is True


def test_lattice_isometry(capsys):
    code, report = _run_json(capsys, ["lattice", "isometry", "--gram", "[[0,-1],[-1,2]]", "--other", "U"])
    assert code == 0
    assert report["data"]["found"] is True
    assert report["data"]["decisive"] is True

    code, report = _run_json(capsys, ["lattice", "isometry", "--gram", "U", "--other", "U2"])
    assert report["data"]["found"] is False


def test_lattice_file(capsys, tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(json.dumps({"gram": [[2, 1], [1, 2]], "label": "A2"}), encoding="utf-8")
    code, report = _run_json(capsys, ["lattice", "det", "--file", str(path)])
    assert code == 0
    assert report["data"]["det"] == 3


@pytest.mark.parametrize("gram", ["[[1,2]", "[[1,0],[0,2]]", "[[2,2],[2,2]]", "Nope"])
def test_bad_documents_exit_two(capsys, gram):
    assert cli.main(["lattice", "det", "--gram", gram]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_usage_errors_exit_two(capsys):
    assert cli.main(["walls", "9"]) == 2
    assert cli.main(["frobnicate"]) == 2
    assert cli.main([]) == 2


def test_mukai(capsys):
    code, report = _run_json(capsys, ["mukai", "2", "1", "0"])
    assert code == 0
    assert report["data"]["result"]["name"] == "U"
    assert report["data"]["moduli_dimension"] == 4

    assert cli.main(["mukai", "2", "0", "-2"]) == 1


def test_fibre_and_walls(capsys):
    code, report = _run_json(capsys, ["fibre", "3"])
    assert code == 0
    assert report["data"]["fibre_size"] == 4
    assert report["data"]["walls"] == [1, 2, 4]

    code, report = _run_json(capsys, ["walls", "1"])
    assert code == 0
    assert report["data"]["rays"] == [[1, 1]]


def test_fixed_locus(capsys):
    code, report = _run_json(capsys, ["fixed-locus"])
    assert code == 0
    assert report["data"]["count"] == 16
    assert report["data"]["r_partition"] == {"1": 10, "2": 6}
    assert report["data"]["orbit_sizes"] == [6, 10]


def test_text_output(capsys):
    assert cli.main(["beauville", "-19"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("[pass] beauville")
    assert "192" in out


def test_parse_vector():
    Lam = k3_two_lattice()
    assert cli.parse_vector("e1 - 2f2 + delta", Lam) == Lam.e1 - 2 * Lam.f2 + Lam.delta
    assert cli.parse_vector("[1,0]", make_U()) == make_U().vector(1, 0)
    with pytest.raises(DocumentError):
        cli.parse_vector("e1+g7", Lam)
    with pytest.raises(DocumentError):
        cli.parse_vector("e1", make_U())
    with pytest.raises(DocumentError):
        cli.parse_vector("[1,0,0]", make_U())


def test_classify_text_table(capsys):
    assert cli.main(["classify"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "[pass] classify"
    assert lines[1] == "  J | invariant lattice | div g | fibre"
    assert lines[2:6] == ["  1 | U | — | 2", "  2 | U(2) | — | 1",
                          "  3 | ⟨2⟩⊕⟨-2⟩ | div 2 | 4", "  4 | ⟨2⟩⊕⟨-2⟩ | div 1 | 2"]
    assert not any(line.startswith("  rows:") for line in lines)
