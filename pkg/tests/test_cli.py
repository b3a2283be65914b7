"""The qlat command-line interface and text encodings."""

import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qlat.cli import main
from qlat.ring import QuadraticRingElement, golden, tau
from qlat.textio import (
    format_element,
    format_vector,
    parse_element,
    parse_exact_vector,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# -- text encodings -----------------------------------------------------

def test_format_basics():
    assert format_element(QuadraticRingElement(0)) == "0"
    assert format_element(QuadraticRingElement(1)) == "1"
    assert format_element(tau()) == "t"
    assert format_element(golden(1, 2)) == "1+2t"
    assert format_element(tau() / 2) == "t/2"
    assert format_element((tau() - 1) / 2) == "(-1+t)/2"
    assert format_element(QuadraticRingElement(0, 1, 2)) == "t"  # sqrt(2)


def test_parse_basics():
    assert parse_element("t") == tau()
    assert parse_element("1+2t") == golden(1, 2)
    assert parse_element("(t-1)/2") == (tau() - 1) / 2
    assert parse_element("-1/2") == QuadraticRingElement(-1, 0, 5, 2)
    assert parse_element("t", kappa=2) == QuadraticRingElement(0, 1, 2)


@given(st.integers(-30, 30), st.integers(-30, 30),
       st.integers(min_value=1, max_value=6))
def test_format_parse_round_trip(m, n, den):
    c = golden(m, n) / den
    assert parse_element(format_element(c)) == c


def test_vector_round_trip():
    v = parse_exact_vector("1,t,0")
    assert format_vector(v) == "1,t,0"
    assert v.dim == 3


# -- CLI verbs ----------------------------------------------------------

def test_roots_count(capsys):
    code, out = run(capsys, "roots", "--system", "H4", "--count")
    assert code == 0 and out.strip() == "120"


def test_roots_json(capsys):
    code, out = run(capsys, "roots", "--system", "I2-8", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 16
    assert len(data["roots"]) == 16


def test_group_order(capsys):
    code, out = run(capsys, "group", "--system", "H3", "--count")
    assert code == 0 and out.strip() == "120"


def test_group_emit(capsys, tmp_path):
    path = tmp_path / "matrices.json"
    code, _ = run(capsys, "group", "--system", "I2-5", "--emit", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["order"] == 10
    assert len(data["matrices"]) == 10


def test_icosians_check_closure(capsys):
    code, out = run(capsys, "icosians", "--check-closure")
    assert code == 0
    assert "closure ok" in out


def test_member_yes(capsys):
    code, out = run(capsys, "member", "--ql", "H4",
                    "--vector", "1/2,1/2,1/2,1/2")
    assert code == 0 and out.startswith("member")


def test_member_no(capsys):
    code, out = run(capsys, "member", "--ql", "H3-fcc", "--vector", "1,t,0")
    assert code == 0 and out.startswith("non-member")


def test_member_bad_ql(capsys):
    code = main(["member", "--ql", "H9", "--vector", "1,0"])
    captured = capsys.readouterr()
    assert code == 1
    assert "unknown quasilattice" in captured.err


def test_residues(capsys):
    code, out = run(capsys, "residues", "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == 16


def test_scale(capsys):
    code, out = run(capsys, "scale", "--ql", "H3-primitive", "--power", "3")
    assert code == 0 and "invariant" in out
    code, out = run(capsys, "scale", "--ql", "H3-primitive", "--factor", "t")
    assert code == 0 and "not-closed" in out


def test_verify_table1(capsys):
    code, out = run(capsys, "verify", "--table1")
    assert code == 0
    assert out.strip().endswith("7/7 pass")
    assert out.count("pass") == 8  # one per row plus the summary


def test_verify_table1_json(capsys):
    code, out = run(capsys, "verify", "--table1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["summary"] == "7/7"
    assert all(row["pass"] for row in data["rows"])
    powers = {row["ql"]: row["minimal_power"] for row in data["rows"]}
    assert powers["H3-primitive"] == 3


def test_project_and_diffract(capsys, tmp_path):
    patch_path = tmp_path / "patch.csv"
    code, out = run(capsys, "project", "--target", "H3-bcc",
                    "--radius", "5", "--window", "cell",
                    "--out", str(patch_path))
    assert code == 0 and "points" in out

    klist = tmp_path / "peaks.json"
    klist.write_text(json.dumps([[0.0, 0.0, 0.0], [1.1, 0.3, -0.4]]))
    out_path = tmp_path / "intensities.csv"
    code, out = run(capsys, "diffract", "--in", str(patch_path),
                    "--k-list", str(klist), "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0] == "k0,k1,k2,intensity"
    assert len(lines) == 3
    # k = 0 sums every phase coherently
    assert abs(float(lines[1].split(",")[-1]) - 1.0) < 1e-12


def test_project_rejects_2d_target(capsys, tmp_path):
    code = main(["project", "--target", "I2-8", "--radius", "4",
                 "--out", str(tmp_path / "x.csv")])
    captured = capsys.readouterr()
    assert code == 1
    assert "error" in captured.err
