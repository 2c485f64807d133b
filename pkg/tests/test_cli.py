import json
import subprocess
import sys
from fractions import Fraction as F

import pytest


def run_cli(args, cwd=None):
    cmd = [sys.executable, "-m", "harbourne", *args]
    return subprocess.run(cmd, cwd=cwd, text=True, capture_output=True)


@pytest.fixture
def klein_doc(tmp_path):
    path = tmp_path / "klein.json"
    path.write_text(
        json.dumps({"class": "line-p2", "k": 21, "t": {"3": 28, "4": 21}})
    )
    return path


@pytest.fixture
def pencil_geometry_doc(tmp_path):
    members = [(1, 0), (0, 1), (1, 2), (2, 1), (1, -1)]
    curves = [
        {
            "type": "conic",
            "coeffs": [lam + 2 * mu, lam - mu, -2 * lam - mu, 0, 0, 0],
        }
        for lam, mu in members
    ]
    path = tmp_path / "pencil.json"
    path.write_text(json.dumps({"field": {"kind": "rational"}, "curves": curves}))
    return path


def test_help_smoke():
    r = run_cli(["--help"])
    assert r.returncode == 0
    for sub in ("analyze", "geom", "cremona", "search", "verify-covers", "fixtures"):
        assert sub in r.stdout


def test_analyze_human(klein_doc):
    r = run_cli(["analyze", str(klein_doc)])
    assert r.returncode == 0, r.stderr
    assert "h=-3" in r.stdout
    assert "validation: ok" in r.stdout


def test_analyze_machine_roundtrip(klein_doc):
    r = run_cli(["analyze", str(klein_doc), "--machine"])
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["profile"] == json.loads(klein_doc.read_text())
    assert data["validation"]["ok"] is True
    assert F(str(data["h_report"]["h"])) == F(-3)
    assert data["h_report"]["s"] == 49
    assert data["case"]["tag"] == "NotApplicable"


def test_analyze_validation_failure(tmp_path):
    doc = tmp_path / "bad.json"
    doc.write_text(json.dumps({"class": "conic-p2", "k": 3, "t": {"2": 11}}))
    r = run_cli(["analyze", str(doc)])
    assert r.returncode == 1
    assert "11" in r.stdout and "12" in r.stdout


def test_analyze_malformed_document(tmp_path):
    doc = tmp_path / "bad.json"
    doc.write_text(json.dumps({"class": "line-p2", "k": 3, "t": {"1": 2}}))
    r = run_cli(["analyze", str(doc)])
    assert r.returncode == 1
    assert "$.t.1" in r.stderr


def test_analyze_unparseable_json(tmp_path):
    doc = tmp_path / "bad.json"
    doc.write_text("{not json")
    r = run_cli(["analyze", str(doc)])
    assert r.returncode == 1


def test_analyze_conic_constraints_surface(tmp_path):
    doc = tmp_path / "conics.json"
    doc.write_text(json.dumps({"class": "conic-p2", "k": 4, "t": {"2": 24}}))
    r = run_cli(["analyze", str(doc), "--machine"])
    data = json.loads(r.stdout)
    assert data["case"]["tag"] == "TK0"
    q = data["constraints"]["positivity_quadratic"]
    assert (q["a"], q["b"], q["c"]) == (32, 24, 0)
    assert q["holds_over_integers"] is True
    assert q["at_one_value"] == 56  # 8k - 2f1 - 4t2 + 9f0 = 32 - 96 - 96 + 216


def test_analyze_quadric_surfaces_hirzebruch(tmp_path):
    doc = tmp_path / "quadric.json"
    doc.write_text(json.dumps({"class": "one-one-quadric", "k": 4, "t": {"2": 12}}))
    r = run_cli(["analyze", str(doc), "--machine"])
    data = json.loads(r.stdout)
    hz = data["constraints"]["hirzebruch_one_one"]
    assert (hz["lhs"], hz["rhs"], hz["holds"]) == (25, 0, True)
    assert F(str(hz["cover_margin_n3"])) == 100


def test_cremona_generic(klein_doc):
    r = run_cli(["cremona", str(klein_doc), "--mode", "generic", "--machine"])
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["law"]["holds"] is True
    after = data["after"]
    assert after["profile"]["t"] == {"3": 28, "4": 21, "21": 3}
    assert F(str(after["h_report"]["h"])) == F(-147, 52)
    assert after["h_report"]["h_decimal"] == "-2.827"


def test_cremona_common3(tmp_path):
    doc = tmp_path / "tk3.json"
    doc.write_text(json.dumps({"class": "conic-p2", "k": 4, "t": {"4": 3, "2": 6}}))
    r = run_cli(["cremona", str(doc), "--mode", "common3", "--machine"])
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["law"]["common_point_identity"] is True
    assert data["after"]["profile"] == {"class": "line-p2", "k": 4, "t": {"2": 6}}


def test_cremona_mode_violation(klein_doc):
    r = run_cli(["cremona", str(klein_doc), "--mode", "common3"])
    assert r.returncode == 2
    assert "common-points" in r.stderr


def test_cremona_degree_two_consistency_error(tmp_path):
    doc = tmp_path / "conics.json"
    doc.write_text(json.dumps({"class": "conic-p2", "k": 4, "t": {"2": 24}}))
    r = run_cli(["cremona", str(doc), "--mode", "generic"])
    assert r.returncode == 2
    assert "identity" in r.stderr


def test_geom_pencil(pencil_geometry_doc):
    r = run_cli(["geom", str(pencil_geometry_doc), "--machine"])
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["analysis"]["profile"] == {
        "class": "conic-p2",
        "k": 5,
        "t": {"5": 4},
    }
    assert F(str(data["analysis"]["h_report"]["h"])) == 0
    assert data["analysis"]["case"]["tag"] == "TK4"


def test_geom_number_field_document(tmp_path):
    doc = tmp_path / "nf.json"
    doc.write_text(
        json.dumps(
            {
                "field": {"kind": "number-field", "min_poly": [-2, 0, 1]},
                "curves": [
                    {"type": "line", "coeffs": [1, [0, -1], 0]},
                    {"type": "line", "coeffs": [1, [0, 1], 0]},
                    {"type": "line", "coeffs": [1, 1, 1]},
                ],
            }
        )
    )
    r = run_cli(["geom", str(doc), "--machine"])
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["analysis"]["profile"] == {
        "class": "line-p2",
        "k": 3,
        "t": {"2": 3},
    }


def test_geom_outside_field_is_computation_error(tmp_path):
    doc = tmp_path / "geom.json"
    doc.write_text(
        json.dumps(
            {
                "field": {"kind": "rational"},
                "curves": [
                    {"type": "conic", "coeffs": [1, 1, -1, 0, 0, 0]},
                    {"type": "conic", "coeffs": [1, 1, -3, 0, 0, 0]},
                ],
            }
        )
    )
    r = run_cli(["geom", str(doc)])
    assert r.returncode == 2
    assert "in-field" in r.stderr


def test_search_machine():
    r = run_cli(
        [
            "search",
            "--class",
            "conic-p2",
            "--k",
            "4",
            "--tk0",
            "--filter",
            "lt",
            "--machine",
        ]
    )
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["enumerated_count"] == 9
    assert F(str(data["min_h"])) == F(-4, 3)
    assert data["argmin_profiles"] == [
        {"class": "conic-p2", "k": 4, "t": {"2": 24}}
    ]


def test_search_bad_filter_combination():
    r = run_cli(["search", "--class", "line-p2", "--k", "4", "--filter", "lt"])
    assert r.returncode == 2


def test_verify_covers():
    r = run_cli(["verify-covers", "--machine"])
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["ok"] is True
    assert data["checks"]["closed_form"] is True
    assert data["checks"]["sign_agreement"] is True


def test_verify_covers_other_order():
    r = run_cli(["verify-covers", "--n", "2", "--machine"])
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["checks"]["numeric_agreement"] is True
    assert "closed_form" not in data["checks"]


def test_fixtures():
    r = run_cli(["fixtures", "--machine"])
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["ok"] is True
    names = [row["name"] for row in data["rows"]]
    assert "klein-lines" in names and "conic-pencil" in names
    for row in data["rows"]:
        assert row["ok"] is True
