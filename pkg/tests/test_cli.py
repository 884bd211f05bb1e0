import io
import json
import sys

import pytest

from ryserlab import cli
from ryserlab.core import ColoredMultigraph, make_certificate
from ryserlab.duality import ColoredHypergraph

K4_AFFINE = """\
cg 4 3
e 0 1 1
e 2 3 1
e 0 2 2
e 1 3 2
e 0 3 3
e 1 2 3
"""


def run_cli(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_graph_roundtrip():
    g = cli.parse_graph(K4_AFFINE)
    assert g.n == 4 and g.r == 3
    text = cli.write_graph(g)
    assert cli.parse_graph(text) == g
    # repeats merge color sets
    merged = cli.parse_graph("cg 2 2\ne 0 1 1\ne 0 1 2\n")
    assert merged.colors_of(0, 1) == frozenset({1, 2})


def test_graph_parse_errors():
    with pytest.raises(cli.FormatError):
        cli.parse_graph("cg 2 1\ne 0 0 1\n")
    with pytest.raises(cli.FormatError):
        cli.parse_graph("cg 2\ne 0 1 1\n")
    with pytest.raises(cli.FormatError):
        cli.parse_graph("e 0 1 1\n")
    with pytest.raises(cli.FormatError):
        cli.parse_graph("cg 2 1\nedge 0 1 1\n")


def test_hypergraph_roundtrip():
    text = ("hg 6 3 2\n"
            "part 0 0 1\npart 1 2 3\npart 2 4 5\n"
            "e 1 0 2 4\ne 2 1 3 5\n")
    h = cli.parse_hypergraph(text)
    assert h.n == 6 and h.k == 3 and h.r == 2
    assert cli.write_hypergraph(h) .strip() == text.strip()
    with pytest.raises(cli.FormatError):
        cli.parse_hypergraph("hg 3 2 0\ne 0 1\ne 0 1\n")


def test_cover_roundtrip():
    cert = make_certificate([(1, (0, 1)), (2, (2, 3))])
    text = cli.write_cover(cert)
    back = cli.parse_cover(text)
    assert back.pieces == cert.pieces


def test_tc_command(tmp_path, capsys):
    p = tmp_path / "g.cg"
    p.write_text(K4_AFFINE)
    code, out = run_cli(["tc", "--input", str(p)], capsys)
    assert code == 0
    assert out.startswith("tc = 2")


def test_verify_command(tmp_path, capsys):
    g = tmp_path / "g.cg"
    g.write_text(K4_AFFINE)
    cov = tmp_path / "c.cover"
    cov.write_text("cover cover 2\npiece 1 0 1\npiece 1 2 3\n")
    code, out = run_cli(["verify", "--input", str(g), "--cover", str(cov)], capsys)
    assert code == 0 and out.strip() == "accept"
    bad = tmp_path / "bad.cover"
    bad.write_text("cover cover 1\npiece 1 0 1\n")
    code, out = run_cli(["verify", "--input", str(g), "--cover", str(bad)], capsys)
    assert code == 1 and out.startswith("violation")


def test_zrd_command(capsys):
    code, out = run_cli(["zrd", "--r", "3", "--d", "3"], capsys)
    assert code == 0 and out.startswith("Z(3,3) = 5")
    code, out = run_cli(["--format", "csv", "zrd", "--r", "5", "--d", "2"], capsys)
    assert code == 0 and out.splitlines()[0] == "r,d,lower,upper,exact,witness"


def test_signatures_command(capsys):
    code, out = run_cli(["signatures", "--n", "5", "--p", "3",
                         "--stage", "residual"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].endswith("= 2") and len(lines) == 3


def test_hunt_command(capsys):
    code, out = run_cli(["hunt", "--n", "4", "--r", "3", "--bound", "1"], capsys)
    assert code == 1 and out.startswith("counterexample: tc = 2")
    code, out = run_cli(["hunt", "--n", "4", "--r", "2", "--bound", "alpha"], capsys)
    assert code == 0 and out.strip() == "none"


def test_construct_and_cover_pipeline(tmp_path, capsys):
    code, out = run_cli(["construct", "star", "--k", "2", "--r", "3"], capsys)
    assert code == 0
    p = tmp_path / "star.cg"
    p.write_text(out)
    code, out = run_cli(["tc", "--input", str(p)], capsys)
    assert code == 0 and out.startswith("tc = 3")


def test_cover_methods(tmp_path, capsys):
    p = tmp_path / "g.cg"
    p.write_text(K4_AFFINE)
    code, out = run_cli(["cover", "--input", str(p), "--method", "r3"], capsys)
    assert code == 0 and out.startswith("cover cover")
    code, out = run_cli(["cover", "--input", str(p), "--method", "restricted",
                         "--r", "3", "--restrict-colors", "2", "3"], capsys)
    assert code == 0


def test_classify_command(tmp_path, capsys):
    p = tmp_path / "g.cg"
    p.write_text(K4_AFFINE)
    code, out = run_cli(["classify", "--input", str(p)], capsys)
    assert code == 0 and out.startswith("Type")


def test_hyper_command(tmp_path, capsys):
    lines = ["hg 5 3 3"]
    import itertools
    for i, e in enumerate(itertools.combinations(range(5), 3)):
        lines.append("e " + " ".join(map(str, (i % 3 + 1,) + e)))
    p = tmp_path / "h.hg"
    p.write_text("\n".join(lines) + "\n")
    code, out = run_cli(["hyper", "--input", str(p), "--method", "tight"], capsys)
    assert code == 0 and "spanning tight component" in out
    code, out = run_cli(["hyper", "--input", str(p), "--c", "1", "--ell", "2",
                         "--method", "exact"], capsys)
    assert code == 0


def test_manifest_determinism(tmp_path, capsys):
    p = tmp_path / "g.cg"
    p.write_text(K4_AFFINE)
    m1, m2 = tmp_path / "m1.json", tmp_path / "m2.json"
    run_cli(["--manifest", str(m1), "tc", "--input", str(p)], capsys)
    run_cli(["--manifest", str(m2), "tc", "--input", str(p)], capsys)
    d1 = json.loads(m1.read_text())
    d2 = json.loads(m2.read_text())
    assert d1["digest"] == d2["digest"]
    assert d1["version"]


def test_dualize_command(tmp_path, capsys):
    p = tmp_path / "g.cg"
    p.write_text("cg 3 3\ne 0 1 1\ne 0 2 2\ne 1 2 3\n")
    code, out = run_cli(["dualize", "--input", str(p)], capsys)
    assert code == 0 and out.startswith("hg 3")
