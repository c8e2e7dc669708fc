import io

import pytest

from conftest import CUBE_T3, SQUARE_KLEIN
from smallcovers.cli import format_fraction, run
from smallcovers.covers import Coloring, serialize_coloring
from smallcovers.polytope import builtin, serialize_polytope
from fractions import Fraction


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_hvector():
    assert call("hvector", "--builtin", "dodecahedron") == (0, "1 9 9 1\n")


def test_classify():
    code, text = call("covers", "classify", "--builtin", "dodecahedron")
    assert code == 0
    assert text.splitlines()[0] == "classes: 25"


def test_enumerate_and_orientable():
    code, text = call("covers", "enumerate", "--builtin", "square")
    assert code == 0
    lines = text.splitlines()
    assert lines[-1] == "count: 18" and len(lines) == 19
    assert call("covers", "enumerate", "--builtin", "cube", "--count-only") == (0, "count: 4200\n")
    code, text = call("covers", "orientable", "--builtin", "square")
    assert text == "0: 01\n1: 10\n2: 01\n3: 10\n"


def test_validate(tmp_path):
    assert call("validate", "--builtin", "cube")[0] == 0
    bad = tmp_path / "bad.poly"
    faces = builtin("cube").facets[1:]
    bad.write_text("dim=3\n" + "".join(f"face {i}: {' '.join(map(str, f))}\n" for i, f in enumerate(faces)))
    code, text = call("validate", "--polytope", str(bad))
    assert code == 1 and "edge-faces" in text


def test_homology(tmp_path):
    poly = tmp_path / "sq.poly"
    poly.write_text(serialize_polytope(builtin("square")))
    col = tmp_path / "klein.col"
    col.write_text(serialize_coloring(Coloring(2, SQUARE_KLEIN)))
    code, text = call("homology", "--polytope", str(poly), "--coloring", str(col))
    assert code == 0
    assert "betti: 1 2 1" in text and "verify_dj: true" in text and "orientable: false" in text


def test_homology_bad_coloring(tmp_path, capsys):
    col = tmp_path / "bad.col"
    col.write_text(serialize_coloring(Coloring(3, (1,) * 6)))
    code, _ = call("homology", "--builtin", "cube", "--coloring", str(col))
    assert code == 1
    assert "smallcovers.homology" in capsys.readouterr().err


def test_rgr_cube():
    code, text = call("rgr", "--seed", "cube", "--depth", "5")
    assert code == 0
    rows = text.splitlines()
    assert rows[0] == "j,index,V,b1_lower,ratio,paper_ratio,commensurable_b1,atkinson_pass"
    assert rows[-1].split(",")[4] == "0.062500"


def test_tower_roundtrip(tmp_path):
    csv_path = tmp_path / "t.csv"
    tcol = tmp_path / "c.col"
    tcol.write_text(serialize_coloring(Coloring(3, CUBE_T3)))
    assert call("tower", "--seed", "dodecahedron", "--depth", "6", "--csv", str(csv_path))[0] == 0
    header = csv_path.read_text().splitlines()[0]
    assert header == "j,V,E,F,k,index,h1"
    direct = call("rgr", "--seed", "dodecahedron", "--depth", "6", "--rho", "5/6", "--base-rank", "10")
    replay = call("rgr", "--tower", str(csv_path), "--rho", "5/6", "--base-rank", "10")
    assert direct == replay
    assert call("tower", "--seed", "cube", "--coloring", str(tcol), "--depth", "2")[1].splitlines()[1] == "0,8,12,6,4,1,3"


def test_deterministic_output():
    a = call("rgr", "--seed", "dodecahedron", "--depth", "4", "--strategy", "round-robin")
    b = call("rgr", "--seed", "dodecahedron", "--depth", "4", "--strategy", "round-robin")
    assert a == b and a[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["hvector"],
        ["frobnicate"],
        ["hvector", "--builtin", "cube", "--unknown"],
        ["tower", "--seed", "cube", "--depth", "-1"],
        ["rgr", "--seed", "cube", "--depth", "2", "--rho", "x"],
        ["rgr", "--tower", "a.csv", "--seed", "cube"],
    ],
)
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["hvector", "--builtin", "icosahedron"],
        ["hvector", "--polytope", "/nonexistent/file.poly"],
        ["tower", "--seed", "cube", "--depth", "2", "--strategy", "list:0"],
    ],
)
def test_domain_errors(argv, capsys):
    assert call(*argv)[0] == 1
    assert capsys.readouterr().err


def test_format_fraction():
    assert format_fraction(Fraction(1, 3)) == "0.333333"
    assert format_fraction(Fraction(5)) == "5.000000"
    assert format_fraction(Fraction(2, 3)) == "0.666667"
