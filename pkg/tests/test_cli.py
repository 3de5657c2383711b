import json

import pytest

from liesymp.cli import main
from liesymp.report import run_goldens
from liesymp import triple_to_dict, ex1, ex2


@pytest.fixture()
def ex2_file(tmp_path):
    p = tmp_path / "ex2.json"
    p.write_text(json.dumps(triple_to_dict(ex2())))
    return str(p)


def test_validate_missing_file_exits_2(capsys):
    # validate is file-only; a nonexistent path is an input failure
    assert main(["validate", "no-such-file.json"]) == 2
    assert "SerializationError" in capsys.readouterr().err


def test_validate_file(ex2_file, capsys):
    assert main(["validate", ex2_file]) == 0
    out = capsys.readouterr().out
    assert "OK" in out and "ex2" in out


def test_validate_degenerate_form_exits_2(tmp_path, capsys):
    d = triple_to_dict(ex2())
    for k in range(4):
        d["omega"][0][k] = "0"
        d["omega"][k][0] = "0"
    p = tmp_path / "degen.json"
    p.write_text(json.dumps(d))
    assert main(["validate", str(p)]) == 2
    err = capsys.readouterr().err
    assert "DegenerateForm" in err


def test_validate_jacobi_violation_exits_2(tmp_path, capsys):
    bad = {"name": "bad", "dim": 4, "basis": ["X1", "X2", "Y1", "Y2"],
           "brackets": [{"i": 0, "j": 1, "coeffs": {"3": "1"}},
                        {"i": 0, "j": 3, "coeffs": {"2": "1"}},
                        {"i": 1, "j": 3, "coeffs": {"1": "1"}}]}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    assert main(["validate", "--kind", "algebra", str(p)]) == 2
    err = capsys.readouterr().err
    assert "JacobiViolation" in err
    assert "X1" in err and "X2" in err and "Y2" in err


def test_analyze_json_report(capsys):
    assert main(["analyze", "thurston", "--alpha", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["nijenhuis"]["norm_sq"] == "24"
    assert report["validation"]["metric_positive"] is True
    assert all(report["validation"].values())


def test_analyze_is_deterministic(capsys):
    assert main(["analyze", "ex4"]) == 0
    first = capsys.readouterr().out
    assert main(["analyze", "ex4"]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_analyze_text_report(capsys):
    assert main(["analyze", "dim6", "--report", "text"]) == 0
    out = capsys.readouterr().out
    assert "maximally_non_integrable=True" in out


def test_analyze_file_target(ex2_file, capsys):
    assert main(["analyze", ex2_file]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["name"] == "ex2"


def test_analyze_output_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    assert main(["analyze", "ex1", "-o", str(out_path)]) == 0
    report = json.loads(out_path.read_text())
    assert report["nijenhuis"]["norm_sq"] == "16"


def test_timings_are_opt_in(capsys):
    assert main(["analyze", "ex1"]) == 0
    assert "timings" not in capsys.readouterr().out
    assert main(["analyze", "ex1", "--timings"]) == 0
    assert "timings" in capsys.readouterr().out


def test_goldens_pass(capsys):
    assert main(["goldens"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_goldens_filter(capsys):
    assert main(["goldens", "--filter", "twistor"]) == 0
    out = capsys.readouterr().out
    assert "twistor" in out and "ex1" not in out


def test_goldens_catch_wrong_expectations():
    # flip two known-good claims; exactly those two rows must fail
    lines, ok = run_goldens(overrides={
        ("ex3", "image_involutive"): True,
        ("ex3", "perp_involutive"): False,
    })
    assert not ok
    fails = [l for l in lines if l.startswith("FAIL")]
    assert len(fails) == 2
    assert all("ex3" in l for l in fails)


def test_examples_subcommand(tmp_path):
    out = tmp_path / "ex.json"
    assert main(["examples", "--name", "ex3", "-o", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["name"] == "ex3"


def test_construct_subcommand(capsys):
    assert main(["construct", "product", "ex2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dim"] == 6 and payload["name"] == "ex2_xR2"


def test_construct_character_with_explicit_functional(capsys):
    assert main(["construct", "character", "ex2", "--xi", "1,0,0,0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["basis"][-2:] == ["c1", "d1"]


def test_synthesize_subcommand(capsys):
    assert main(["synthesize", "--n", "3", "--k", "1",
                 "--image-involutive", "false",
                 "--perp-involutive", "true"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dim"] == 6


def test_synthesize_unsatisfiable_exits_2(capsys):
    assert main(["synthesize", "--n", "2", "--k", "2"]) == 2
    assert "Unsatisfiable" in capsys.readouterr().err


def test_nspace_dim_subcommand(capsys):
    assert main(["nspace-dim", "--n", "1,2,3"]) == 0
    out = capsys.readouterr().out
    assert "MISMATCH" not in out and "n=3: nullity=16" in out


def test_twistor_subcommand(capsys):
    assert main(["twistor", "--n", "1,2"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "witness" in out


def test_examples_action_spellings(capsys):
    assert main(["examples", "list"]) == 0
    listing = capsys.readouterr().out
    assert "ex1" in listing and "thurston" in listing
    assert main(["examples", "show", "ex1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["name"] == "ex1"
    assert main(["examples", "show"]) == 1  # name required


def test_construct_flag_spellings(capsys):
    assert main(["construct", "--op", "product", "--base", "ex2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["name"] == "ex2_xR2"
    assert main(["construct", "product"]) == 1  # base missing


def test_synthesize_short_flag_spellings(capsys):
    assert main(["synthesize", "--n", "3", "--k", "1",
                 "--inv-image", "n", "--inv-perp", "y"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dim"] == 6


def test_twistor_sign_filter_and_json(capsys):
    assert main(["twistor", "--n", "2", "--sign", "+"]) == 0
    out = capsys.readouterr().out
    assert "J+" in out and "J-" not in out
    assert main(["twistor", "--n", "2", "--report", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["minus_image_dim"] == 6
    assert payload[0]["checks_pass"] is True
    assert payload[0]["plus_witness"] == ["P_1", "-2"]


def test_usage_errors_exit_1(capsys):
    assert main(["analyze"]) == 1
    assert main(["no-such-command"]) == 1
    assert main(["analyze", "no-such-entry"]) == 1


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    assert main(["analyze", "--help"]) == 0
