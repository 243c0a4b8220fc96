"""Command-line interface: every subcommand plus the exit-code contract."""

import math

import pytest

from pershom import Barcode, Interval, PersistenceDiagram
from pershom.cli import main
from pershom.io import read_barcode, read_diagram, write_diagram


@pytest.fixture
def flt_file(tmp_path):
    path = tmp_path / "triangle.flt"
    path.write_text(
        "# hollow triangle, all at 0\n"
        "simplex 0 0\nsimplex 0 1\nsimplex 0 2\n"
        "simplex 0 0 1\nsimplex 0 0 2\nsimplex 0 1 2\n"
    )
    return path


def test_compute_writes_diagram(tmp_path, flt_file, capsys):
    out = tmp_path / "out.dgm"
    assert main(["compute", "--input", str(flt_file), "--field", "2", "--output", str(out)]) == 0
    diagram = read_diagram(out)
    assert diagram == PersistenceDiagram({0: [(0, math.inf)], 1: [(0, math.inf)]})
    assert str(out) in capsys.readouterr().out


def test_compute_rejects_bad_filtration(tmp_path, capsys):
    bad = tmp_path / "bad.flt"
    bad.write_text("simplex 0 0 1\n")  # edge without vertices
    out = tmp_path / "out.dgm"
    assert main(["compute", "--input", str(bad), "--output", str(out)]) == 1
    assert "error" in capsys.readouterr().err


def test_compute_rejects_composite_field(tmp_path, flt_file):
    out = tmp_path / "out.dgm"
    assert main(["compute", "--input", str(flt_file), "--field", "6", "--output", str(out)]) == 1


def test_caps_single_degree(tmp_path, capsys):
    dgm = tmp_path / "d.dgm"
    write_diagram(dgm, PersistenceDiagram({0: [(0, math.inf), (1, 2)], 1: [(3, 4)]}))
    assert main(["caps", "--dgm", str(dgm), "--epsilon", "0.5", "--degree", "1"]) == 0
    assert capsys.readouterr().out == "1 2\n"
    assert main(["caps", "--dgm", str(dgm), "--epsilon", "0.5", "--degree", "1", "--at", "3"]) == 0
    assert capsys.readouterr().out == "1 1\n"


def test_caps_all_degrees(tmp_path, capsys):
    dgm = tmp_path / "d.dgm"
    write_diagram(dgm, PersistenceDiagram({0: [(0, math.inf), (1, 2)], 1: [(3, 4)]}))
    assert main(["caps", "--dgm", str(dgm), "--epsilon", "0.5"]) == 0
    assert capsys.readouterr().out == "0 2\n1 2\n2 1\n"


def test_morse_report_and_exit_codes(tmp_path, capsys):
    dgm = tmp_path / "d.dgm"
    write_diagram(dgm, PersistenceDiagram({0: [(0, math.inf), (1, 2)], 1: [(3, 4)]}))
    assert main(["morse", "--dgm", str(dgm), "--epsilon", "0.5", "--max-degree", "2"]) == 0
    out = capsys.readouterr().out
    assert "m_eps" in out and "partial_sum" in out

    bad = tmp_path / "bad.dgm"
    write_diagram(bad, PersistenceDiagram({0: [(-math.inf, 1)]}))
    assert main(["morse", "--dgm", str(bad), "--epsilon", "0.5", "--max-degree", "2"]) == 2
    assert "-inf" in capsys.readouterr().err

    assert main(["morse", "--dgm", str(dgm), "--epsilon", "-1", "--max-degree", "2"]) == 1


def test_bottleneck_command(tmp_path, capsys):
    a, b = tmp_path / "a.dgm", tmp_path / "b.dgm"
    write_diagram(a, PersistenceDiagram({0: [(0, 2)]}))
    write_diagram(b, PersistenceDiagram())
    assert main(["bottleneck", str(a), str(b), "--degree", "0"]) == 0
    assert capsys.readouterr().out.strip() == "1.0"

    write_diagram(b, PersistenceDiagram({0: [(0, math.inf)]}))
    assert main(["bottleneck", str(a), str(b), "--degree", "0"]) == 0
    assert capsys.readouterr().out.strip() == "inf"


def test_radical_command(tmp_path):
    src = tmp_path / "in.bar"
    src.write_text("0 [0,1)\n0 [0,0.5)\n2 [3,3]\n")
    out = tmp_path / "out.bar"
    assert main(["radical", "--barcode", str(src), "--output", str(out)]) == 0
    assert read_barcode(out) == Barcode(
        [(0, Interval.open_open(0, 1)), (0, Interval.open_open(0, 0.5))]
    )


def test_dowker_command(tmp_path, capsys):
    cov = tmp_path / "c.cov"
    cov.write_text("set U1 1 2\nset U2 2 3\n")
    assert main(["dowker", "--cover", str(cov), "--field", "3"]) == 0
    out = capsys.readouterr().out
    assert "agree: yes" in out
    assert "nerve: 1 0" in out
    assert "vietoris: 1 0" in out


def test_hawaiian_command(capsys):
    assert main(["hawaiian", "--k", "5"]) == 0
    assert "rank=4" in capsys.readouterr().out
    assert main(["hawaiian", "--k", "1", "--sweep", "4"]) == 0
    assert capsys.readouterr().out == "1 0\n2 1\n3 2\n4 3\n"
    assert main(["hawaiian", "--k", "0"]) == 1


def test_product_command(capsys):
    assert main(["product", "--n", "2"]) == 0
    assert capsys.readouterr().out == "0 [0.0,0.5)\n0 [0.0,1.0)\n"
    assert main(["product", "--n", "0"]) == 1


def test_douglas_command(tmp_path, capsys):
    import numpy as np

    curve = tmp_path / "circle.csv"
    t = np.arange(64) * (2 * math.pi / 64)
    curve.write_text("".join(f"{math.cos(x)},{math.sin(x)}\n" for x in t))
    assert main(["douglas", "--curve", str(curve), "--phi", "id", "--n", "64"]) == 0
    value = float(capsys.readouterr().out)
    assert value == pytest.approx(math.pi**2, rel=0.05)

    phi = tmp_path / "phi.csv"
    phi.write_text("".join(f"{x}\n" for x in t))
    assert main(["douglas", "--curve", str(curve), "--phi", str(phi), "--n", "64"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(value)

    assert main(["douglas", "--curve", str(curve), "--phi", "id", "--n", "4"]) == 1


def test_missing_file_is_a_validation_error(tmp_path):
    assert main(["compute", "--input", str(tmp_path / "none.flt"), "--output", "x.dgm"]) == 1


def test_full_pipeline_through_files(tmp_path, capsys):
    # terrain loop: compute a diagram, inspect caps and the Morse report,
    # and confirm the diagram is at distance zero from itself
    flt = tmp_path / "terrain.flt"
    heights = {0: 0.0, 1: 0.8, 2: 0.1, 3: 0.9, 4: 0.3, 5: 0.7}
    lines = [f"simplex {h} {v}" for v, h in heights.items()]
    lines += [
        f"simplex {max(heights[v], heights[(v + 1) % 6])} {v} {(v + 1) % 6}"
        for v in range(6)
    ]
    flt.write_text("\n".join(lines) + "\n")

    dgm = tmp_path / "terrain.dgm"
    assert main(["compute", "--input", str(flt), "--field", "2", "--output", str(dgm)]) == 0
    capsys.readouterr()
    assert read_diagram(dgm) == PersistenceDiagram(
        {0: [(0.0, math.inf), (0.1, 0.8), (0.3, 0.7)], 1: [(0.9, math.inf)]}
    )

    assert main(["caps", "--dgm", str(dgm), "--epsilon", "0.2", "--degree", "0"]) == 0
    assert capsys.readouterr().out == "0 3\n"  # essential + two finite valleys

    assert main(["morse", "--dgm", str(dgm), "--epsilon", "0.2", "--max-degree", "1"]) == 0
    assert "partial_sum" in capsys.readouterr().out

    assert main(["bottleneck", str(dgm), str(dgm), "--degree", "0"]) == 0
    assert capsys.readouterr().out.strip() == "0.0"
