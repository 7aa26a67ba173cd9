import json

import pytest

from multibier.cli import main

OCTA_TEXT = "cap 2 2\nmembers\n0 0\n1 0\n0 1\n2 0\n0 2\n"
SHELL_TEXT = "cap 2 2\nmembers\n0 0\n1 0\n0 1\n0 2\n"
IDEAL_TEXT = "ideal 3\n2 0 0\n0 2 0\n0 0 3\n1 1 0\n1 0 2\n"

OCTA_SPHERE = """\
x1^(0) x1^(1) x2^(1)
x1^(0) x1^(1) x2^(2)
x1^(0) x1^(2) x2^(1)
x1^(0) x1^(2) x2^(2)
x1^(1) x2^(0) x2^(1)
x1^(1) x2^(0) x2^(2)
x1^(2) x2^(0) x2^(1)
x1^(2) x2^(0) x2^(2)
"""


@pytest.fixture
def octa(tmp_path):
    p = tmp_path / "octa.txt"
    p.write_text(OCTA_TEXT)
    return str(p)


@pytest.fixture
def ideal(tmp_path):
    p = tmp_path / "ideal.txt"
    p.write_text(IDEAL_TEXT)
    return str(p)


def test_sphere_output(octa, capsys):
    assert main(["sphere", octa]) == 0
    assert capsys.readouterr().out == OCTA_SPHERE


def test_sphere_boundary_method_agrees(octa, capsys):
    assert main(["sphere", octa, "--method", "boundary", "--verify", "on"]) == 0
    assert capsys.readouterr().out == OCTA_SPHERE


def test_ball_output(octa, capsys):
    assert main(["ball", octa]) == 0
    out = capsys.readouterr().out
    assert len(out.strip().splitlines()) == 5


def test_vectors(octa, capsys):
    assert main(["vectors", octa, "--out", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["sphere"]["g"] == [1, 2]
    assert doc["ball"]["h"] == doc["f_M"]


def test_shelling(tmp_path, capsys):
    p = tmp_path / "m.txt"
    p.write_text(SHELL_TEXT)
    assert main(["shelling", str(p)]) == 0
    out = capsys.readouterr().out
    assert "valid shelling: True" in out
    assert "h 1 3 3 1" in out


def test_dual_and_round_trip(octa, capsys, tmp_path):
    assert main(["dual", octa]) == 0
    out = capsys.readouterr().out
    p = tmp_path / "dual.txt"
    p.write_text(out)
    assert main(["dual", str(p)]) == 0
    # involution: dual of the dual is the original multicomplex
    assert capsys.readouterr().out == "cap 2 2\nmembers\n0 0\n0 1\n0 2\n1 0\n2 0\n"


def test_betti_table(ideal, capsys):
    assert main(["betti", ideal]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "     total: 1 5 6 2"


def test_betti_finite_field(ideal, capsys):
    assert main(["betti", ideal, "--field", "p:32003"]) == 0
    assert "total: 1 5 6 2" in capsys.readouterr().out


def test_edgedecomp(octa, capsys):
    assert main(["edgedecomp", octa]) == 0
    assert "certificate verified: True" in capsys.readouterr().out


def test_generators_formula(octa, capsys):
    assert main(["generators-formula", octa, "--out", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["parts"]) == 3


def test_verify_all_exit_code(capsys):
    assert main(["verify-all", "--n", "1", "--cmax", "2"]) == 0
    assert "all identities hold" in capsys.readouterr().out


def test_usage_errors(octa, ideal, capsys):
    assert main(["sphere", ideal]) == 2  # wrong input kind
    assert main(["betti", octa]) == 2
    assert main(["sphere", "/nonexistent/file"]) == 2
    assert main(["nonsense", octa]) == 2


def test_parse_error_reports_position(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("cap 2 2\nmembers\n0 zz\n")
    assert main(["sphere", str(p)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_stdin_input(octa, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(OCTA_TEXT))
    assert main(["sphere", "-"]) == 0
    assert capsys.readouterr().out == OCTA_SPHERE
