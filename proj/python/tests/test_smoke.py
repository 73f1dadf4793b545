import json
import os
import subprocess

import pytest

import godeaux


def test_builtin_scenes_parse():
    names = godeaux.embedded_names()
    assert "scenes/ex-z4.scene" in names
    scene = godeaux.builtin_scene("ex-z4")
    assert scene.degree == 12
    assert scene.singularities == 5
    assert godeaux.parse_scene(scene.text()) == scene


def test_scene_errors_are_value_errors():
    with pytest.raises(ValueError) as err:
        godeaux.parse_scene("field rational\nsing q9 mult 4\n")
    assert "q9" in str(err.value)


def test_dimension_and_solution():
    scene = godeaux.builtin_scene("ex-z4")
    report = godeaux.dim(scene)
    assert report.status == godeaux.Status.OK
    assert report.lines[0] == "dimension 0"
    data = godeaux.report_dict(godeaux.solve(scene))
    assert data["status"] == "ok"
    assert data["task"] == "solve"


def test_empty_conics_is_negative():
    report = godeaux.solve(godeaux.builtin_scene("conics-6pts"))
    assert report.status == godeaux.Status.NEGATIVE
    assert report.exit_code == 1
    assert "empty (dimension -1)" in report.text()


def test_invariants():
    text = godeaux.invariants(godeaux.builtin_scene("duval")).text()
    assert "chi 1, Ksq_cover -4" in text


def test_reproduce_ex_z4():
    report = godeaux.reproduce("ex-z4")
    assert report.status == godeaux.Status.OK
    data = godeaux.report_dict(report)
    assert data["data"]["terms"] == 37
    assert data["data"]["golden_diff"] == []


def test_curve_helpers():
    assert godeaux.multiplicity_at("x^3 - y^2*z", ["0", "0", "1"]) == 2
    assert godeaux.absolute_factor_count("x^2 - 2*y^2") == 2
    assert godeaux.normalize("1/2*x - 1/3*y") == "3*x - 2*y"
    with pytest.raises(ValueError):
        godeaux.normalize("x^2 + y")


def test_run_cli():
    code, out, _ = godeaux.run_cli(["dim", "builtin:conics-6pts", "--json"])
    assert code == 1
    assert json.loads(out)["data"]["dimension"] == -1


@pytest.mark.skipif(not os.environ.get("GODEAUX_CLI"), reason="command-line binary not given")
def test_cli_binary():
    proc = subprocess.run([os.environ["GODEAUX_CLI"], "dim", "builtin:ex-z4"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("dimension 0\n")
