from __future__ import annotations

import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from tessella.aperiodicity import monotile_forcing
from tessella.cli import INCONCLUSIVE_EXIT, INVALID, OK, VIOLATION, parse_type, run_command
from tessella.cyclic import CyclicType
from tessella.families import ka, kn, kn_prime
from tessella.geometry import dual_tile
from tessella.io import load

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = run_command(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name, argv", [
    ("classify_text", ["classify", "[4,5,4,5]"]),
    ("classify_json", ["--format", "json", "classify", "[4,5,4,5]"]),
    ("family_kn1_text", ["family", "kn", "--n", "1"]),
    ("family_ka_json", ["--format", "json", "family", "ka", "--klm", "7,11,13"]),
    ("forcing_knp1_text", ["forcing", "--type", "knp(1)"]),
    ("forcing_ka_json", ["--format", "json", "forcing", "--type", "ka(7,11,13)"]),
    ("dual_4545_text", ["dual", "--type", "[4,5,4,5]"]),
    ("lemmas_text", ["lemmas", "--max-prime", "97"]),
])
def test_golden_output(capsys, name, argv):
    code, out, _ = run(capsys, *argv)
    assert code == OK
    assert out == (GOLDEN / f"{name}.txt").read_text()


def test_classify_examples(capsys):
    assert run(capsys, "classify", "[4,5,4,5]")[:2] == (OK, "hyperbolic 11/5\n")
    assert run(capsys, "classify", "[6,6,6]")[:2] == (OK, "euclidean 2\n")
    assert run(capsys, "classify", "[3,3,3]")[:2] == (OK, "spherical 1\n")


def test_parse_type_forms():
    assert parse_type("[4,5,4,5]") == CyclicType([4, 5, 4, 5])
    assert parse_type("4,5,4,5") == CyclicType([4, 5, 4, 5])
    assert parse_type("<kn(1)>") == kn(1)
    assert parse_type("knp(1)") == kn_prime(1)
    assert parse_type(" ka(7, 11, 13) ") == ka(7, 11, 13)
    with pytest.raises(ValueError):
        parse_type("ka(7,11)")


def test_invalid_input_exits_one_without_traceback(capsys):
    code, out, err = run(capsys, "classify", "[4,x,4]")
    assert code == INVALID
    assert err.startswith("error:") and "Traceback" not in err
    code, out, _ = run(capsys, "--format", "json", "classify", "[2,5,5]")
    assert code == INVALID and "error" in json.loads(out)
    assert run(capsys, "heesch", "--type", "[6,6,6]", "--max-layers", "2")[0] == INVALID
    assert run(capsys, "no-such-command")[0] == INVALID


def test_heesch_budget_is_inconclusive(capsys, monkeypatch):
    code, out, _ = run(capsys, "heesch", "--type", "kn(1)", "--max-layers", "3",
                       "--budget-nodes", "3", "--threads", "1")
    assert code == INCONCLUSIVE_EXIT and out.startswith("Inconclusive")
    # environment fallback for the node budget; flags win over the environment
    monkeypatch.setenv("TESSELLA_BUDGET_NODES", "3")
    monkeypatch.setenv("TESSELLA_THREADS", "1")
    assert run(capsys, "heesch", "--type", "kn(1)", "--max-layers", "3")[0] == INCONCLUSIVE_EXIT
    assert run(capsys, "heesch", "--type", "[4,7,10]", "--max-layers", "3",
               "--budget-nodes", "100000")[:2] == (OK, "Exact(1)\n")


def test_heesch_writes_witness_and_certificate(capsys, tmp_path):
    w, c = tmp_path / "w.patch.json", tmp_path / "c.cert.json"
    code, out, _ = run(capsys, "--format", "json", "heesch", "--type", "[5,6,8]", "--max-layers", "3",
                       "--threads", "1", "--witness", str(w), "--certificate", str(c))
    assert code == OK
    rep = json.loads(out)
    assert (rep["outcome"], rep["layers"]) == ("Exact", 1)
    assert load(w).completed_layers == 1
    cert = json.loads(c.read_text())
    assert cert["nodes"] > 0


def test_build_and_render_pipeline(capsys, tmp_path):
    patch = tmp_path / "p.patch.json"
    code, out, _ = run(capsys, "build", "--type", "[4,5,4,5]", "--layers", "2", "--out", str(patch))
    assert code == OK and out.startswith("2 layers")
    svg = tmp_path / "p.svg"
    assert run(capsys, "render", str(patch), "--out", str(svg))[0] == OK
    root = ET.fromstring(svg.read_bytes())
    faces = [e for e in root.iter("{http://www.w3.org/2000/svg}path")]
    assert len(faces) == load(patch).n_faces
    code, out, _ = run(capsys, "render", str(patch))
    assert code == OK and out == svg.read_text()


def test_render_missing_file_is_invalid(capsys, tmp_path):
    assert run(capsys, "render", str(tmp_path / "absent.json"))[0] == INVALID
    bad = tmp_path / "bad.json"
    bad.write_text('{"format_version": 99}')
    code, _, err = run(capsys, "render", str(bad))
    assert code == INVALID and "/format_version" in err


def test_json_mode_matches_library(capsys):
    code, out, _ = run(capsys, "--format", "json", "forcing", "--type", "[10,14,10,7]")
    rep = json.loads(out)
    lib = monotile_forcing(CyclicType([10, 14, 10, 7]))
    assert rep["verdict"] == lib.verdict == "Unforced"
    assert code == VIOLATION
    code, out, _ = run(capsys, "--format", "json", "dual", "--type", "[4,5,4,5]")
    rep = json.loads(out)
    d = dual_tile(CyclicType([4, 5, 4, 5]))
    assert rep["area"] == d.area and math.isclose(rep["area"], math.pi / 5, abs_tol=1e-9)


def test_aperiodicity_verdict(capsys):
    code, out, _ = run(capsys, "aperiodicity", "--klm", "7,11,13")
    assert code == OK
    assert out.splitlines()[-1] == "Contradiction 1:5 vs 1:3"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "tessella", "classify", "[7,7,7]"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and r.stdout == "hyperbolic 15/7\n"
