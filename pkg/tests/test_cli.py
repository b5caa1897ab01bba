import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from minkortho.cli import main

SQRT2 = math.sqrt(2)


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


@pytest.fixture
def right_scene(tmp_path):
    return write_json(tmp_path / "scene.json", {
        "norm": {"kind": "lp", "p": 2.0},
        "triangle": [[0, 0], [4, 0], [0, 3]],
        "p4": [2, 1.5],
    })


def test_construct_right_triangle(right_scene, tmp_path, capsys):
    out = tmp_path / "cfg.json"
    assert main(["construct", "--scene", right_scene, "--out", str(out)]) == 0
    cfg = json.loads(out.read_text())
    assert cfg["x4"] == [0.0, 0.0]
    assert cfg["radius"] == pytest.approx(2.5)
    assert cfg["q"] == [1.0, 0.75]


def test_construct_stdout_and_determinism(right_scene, capsys):
    assert main(["construct", "--scene", right_scene]) == 0
    first = capsys.readouterr().out
    assert main(["construct", "--scene", right_scene]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert json.loads(first)["radius"] == pytest.approx(2.5)


def test_construct_collinear_exit_2(tmp_path, capsys):
    scene = write_json(tmp_path / "bad.json", {
        "norm": {"kind": "lp", "p": 2.0},
        "triangle": [[0, 0], [1, 0], [2, 0]],
        "p4": [0, 1],
    })
    assert main(["construct", "--scene", scene]) == 2
    assert "degenerate: collinear" in capsys.readouterr().err


def test_construct_non_circumcenter_warns(tmp_path, capsys):
    scene = write_json(tmp_path / "warn.json", {
        "norm": {"kind": "lp", "p": 2.0},
        "triangle": [[0, 0], [4, 0], [0, 3]],
        "p4": [0.5, 0.5],
    })
    assert main(["construct", "--scene", scene]) == 0
    captured = capsys.readouterr()
    assert "not a circumcenter" in captured.err
    assert json.loads(captured.out)["radius"] is None


def test_construct_svg_well_formed(right_scene, tmp_path, capsys):
    svg = tmp_path / "fig.svg"
    assert main(["construct", "--scene", right_scene, "--svg", str(svg),
                 "--out", str(tmp_path / "cfg.json")]) == 0
    root = ET.parse(svg).getroot()
    assert root.tag.endswith("svg")
    assert "viewBox" in root.attrib
    polygons = [el for el in root.iter() if el.tag.endswith("polygon")]
    # unit circle + 2 triangles + circumcircle + orthocenter circle + six-point
    assert len(polygons) >= 6
    circle_pt_counts = [len(el.attrib["points"].split()) for el in polygons]
    assert max(circle_pt_counts) >= 256


def test_construct_missing_fields_exit_2(tmp_path, capsys):
    scene = write_json(tmp_path / "incomplete.json", {"norm": {"kind": "lp", "p": 2.0}})
    assert main(["construct", "--scene", scene]) == 2


def test_construct_unreadable_scene_exit_2(tmp_path, capsys):
    assert main(["construct", "--scene", str(tmp_path / "missing.json")]) == 2


def test_verify_exit_codes(tmp_path, capsys):
    base = {"norm": {"kind": "lp", "p": 2.0}}
    good = write_json(tmp_path / "good.json",
                      base | {"points": [[-1, SQRT2], [1, SQRT2], [0, -1], [0, 1]]})
    assert main(["verify", "--scene", good]) == 0
    assert "orthocentric" in capsys.readouterr().out

    collinear = write_json(tmp_path / "coll.json",
                           base | {"points": [[0, 0], [1, 0], [2, 0], [3, 0]]})
    assert main(["verify", "--scene", collinear]) == 1

    dup = write_json(tmp_path / "dup.json",
                     base | {"points": [[4, 0], [0, 3], [0, 0], [0, 0]]})
    assert main(["verify", "--scene", dup]) == 3


def test_detect_outputs_and_exit(tmp_path, capsys):
    norm = write_json(tmp_path / "norm.json", {"kind": "lp", "p": 2.0})
    out = tmp_path / "report.json"
    csv_path = tmp_path / "report.csv"
    figdir = tmp_path / "figs"
    code = main(["detect", "--norm", norm, "--samples", "20", "--seed", "0",
                 "--out", str(out), "--csv", str(csv_path), "--figures", str(figdir)])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5
    assert all("consistent with Euclidean" in line for line in lines)
    report = json.loads(out.read_text())
    assert report["samples"] == 20 and report["seed"] == 0
    rows = csv_path.read_text().strip().splitlines()
    assert rows[0] == "detector,max,mean,n,excluded"
    assert len(rows) == 6
    assert (figdir / "detector_defects.png").exists()
    assert (figdir / "unit_circle.png").exists()


def test_detect_non_euclidean_verdict(tmp_path, capsys):
    norm = write_json(tmp_path / "norm.json", {"kind": "lp", "p": 1.5})
    assert main(["detect", "--norm", norm, "--samples", "20", "--seed", "0"]) == 0
    assert "non-Euclidean signature" in capsys.readouterr().out


def test_detect_zero_samples_exit_2(tmp_path, capsys):
    norm = write_json(tmp_path / "norm.json", {"kind": "lp", "p": 2.0})
    assert main(["detect", "--norm", norm, "--samples", "0"]) == 2


def test_detect_bad_norm_exit_2(tmp_path, capsys):
    norm = write_json(tmp_path / "norm.json", {"kind": "lp", "p": 0.2})
    assert main(["detect", "--norm", norm, "--samples", "5"]) == 2


def test_detect_determinism_bytes(tmp_path, capsys):
    norm = write_json(tmp_path / "norm.json", {"kind": "polygonal",
                                               "vertices": [[1, 1], [-1, 1], [-1, -1], [1, -1]]})
    paths = []
    for tag in ("a", "b"):
        out = tmp_path / f"report_{tag}.json"
        csvp = tmp_path / f"report_{tag}.csv"
        assert main(["detect", "--norm", norm, "--samples", "25", "--seed", "7",
                     "--out", str(out), "--csv", str(csvp)]) == 0
        paths.append((out, csvp))
    assert paths[0][0].read_bytes() == paths[1][0].read_bytes()
    assert paths[0][1].read_bytes() == paths[1][1].read_bytes()


def test_plot_writes_figure(right_scene, tmp_path, capsys):
    out = tmp_path / "scene.png"
    assert main(["plot", "--scene", right_scene, "--out", str(out)]) == 0
    assert out.stat().st_size > 0


def test_console_entry_point(right_scene):
    proc = subprocess.run(
        [sys.executable, "-m", "minkortho.cli", "construct", "--scene", right_scene],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["radius"] == pytest.approx(2.5)
