import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout

from blockmod.cli import main


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_bracket_example():
    argv = ["bracket", "L(1,0)", "L(0,1)", "--q", "2"]
    code, out, _ = run_cli(argv)
    assert code == 0
    assert "-3*L(1,1)" in out
    payload = json.loads(out)
    assert payload["overall"] == "pass"
    assert payload["config"]["q"] == "2"
    # identical invocations are byte-identical
    assert run_cli(argv)[1] == out


def test_closure_example():
    argv = ["closure", "--seed", "1", "--D", "3", "--B", "5",
            "--q", "1", "--lambda", "1,1", "--alpha", "0"]
    code, out, _ = run_cli(argv)
    assert code == 0
    payload = json.loads(out)
    assert "tag=FULL, dim=10" in payload["checks"][0]["witness"]
    assert run_cli(argv)[1] == out


def test_iso_example():
    argv = ["iso", "--left", "1,1,0", "--right", "1,2,0", "--q", "1"]
    code, out, _ = run_cli(argv)
    assert code == 0
    payload = json.loads(out)
    assert "not isomorphic" in payload["checks"][0]["witness"]
    assert "m=(0,1)" in payload["checks"][0]["witness"]
    assert run_cli(argv)[1] == out


def test_json_field_order():
    code, out, _ = run_cli(["bracket", "L(1,0)", "D2", "--q", "3"])
    payload = json.loads(out)
    assert list(payload) == ["command", "config", "checks", "overall"]
    assert list(payload["config"]) == ["q", "lambda1", "lambda2", "alpha",
                                       "degree_bound", "box_radius", "rng_seed",
                                       "sweep_count"]
    assert list(payload["checks"][0]) == ["name", "anchor", "status", "witness"]


def test_act_command():
    code, out, _ = run_cli(["act", "L(1,0)", "d1", "--q", "1",
                            "--lambda", "1,1", "--alpha", "0"])
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"][0]["witness"] == "d1^2 - d1*d2 - d1 + d2"


def test_usage_errors_exit_2():
    assert run_cli(["bogus"])[0] == 2
    assert run_cli([])[0] == 2
    assert run_cli(["act", "L(1,0)", "d1^-1"])[0] == 2          # bad polynomial
    assert run_cli(["bracket", "L(1", "D2"])[0] == 2            # bad element
    assert run_cli(["bracket", "L(1,0)", "D2", "--q", "0"])[0] == 2   # invalid q
    code, _, err = run_cli(["act", "L(1,0)", "d1^-1"])
    assert "exponent" in err


def test_failing_check_exits_1():
    code, out, _ = run_cli(["axioms", "--use-variant-action", "--radius", "1",
                            "--q", "1", "--alpha", "1/3", "--sweeps", "2"])
    assert code == 1
    payload = json.loads(out)
    assert payload["overall"] == "fail"
    statuses = {check["name"]: check["status"] for check in payload["checks"]}
    assert statuses["module axioms (variant action)"] == "fail"
    assert statuses["jacobi q=1"] == "pass"


def test_axioms_command_passes():
    code, out, _ = run_cli(["axioms", "--radius", "1", "--q", "5/7",
                            "--alpha", "1/2", "--sweeps", "3"])
    assert code == 0
    assert json.loads(out)["overall"] == "pass"


def test_witt_command():
    code, out, _ = run_cli(["witt", "--q", "3/2", "--lambda", "2,3",
                            "--alpha", "1/4"])
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"][0]["anchor"] == "witt-line-reduction"


def test_replay_command():
    code, out, _ = run_cli(["replay", "--eq", "commutator", "--radius", "2",
                            "--q", "5/7", "--alpha", "1/3"])
    assert code == 0
    payload = json.loads(out)
    assert [c["anchor"] for c in payload["checks"]] == ["commutator-replay"]

    code, out, _ = run_cli(["replay", "--eq", "control", "--q", "1",
                            "--alpha", "1/3", "--radius", "2"])
    assert code == 0
    payload = json.loads(out)
    check = payload["checks"][0]
    assert check["status"] == "pass"
    # the control names both placements of the parameters
    assert "(m2+q)*d1 - m1*(d2+q*alpha)" in check["witness"]
    assert "(q*alpha+m2)*d1 - m1*(d2+alpha)" in check["witness"]

    code, out, _ = run_cli(["replay", "--eq", "all", "--radius", "2",
                            "--pairs", "30", "--q", "2", "--alpha", "3/4"])
    assert code == 0
    anchors = {c["anchor"] for c in json.loads(out)["checks"]}
    assert anchors == {"commutator-replay", "pair-difference-replay",
                       "separated-form-replay", "coefficient-replay",
                       "action-variant-control"}


def test_config_file_and_override(tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text("# defaults\nq=5/7\nlambda1=2\nlambda2=3\nalpha=1/2\nD=2\n")
    code, out, _ = run_cli(["bracket", "L(1,0)", "L(0,1)", "--config", str(config)])
    assert code == 0
    payload = json.loads(out)
    assert payload["config"]["q"] == "5/7"
    assert payload["config"]["lambda1"] == "2"
    assert payload["config"]["degree_bound"] == 2
    # flags override the file
    code, out, _ = run_cli(["bracket", "L(1,0)", "L(0,1)", "--config", str(config),
                            "--q", "3"])
    assert json.loads(out)["config"]["q"] == "3"
    # unknown keys are usage errors
    config.write_text("volume=11\n")
    assert run_cli(["bracket", "L(1,0)", "D2", "--config", str(config)])[0] == 2


def test_global_flags_before_subcommand():
    code, out, _ = run_cli(["--q", "2", "bracket", "L(1,0)", "L(0,1)"])
    assert code == 0
    assert "-3*L(1,1)" in out


def test_quick_report():
    code, out, _ = run_cli(["report", "--level", "quick"])
    assert code == 0
    payload = json.loads(out)
    assert payload["overall"] == "pass"
    anchors = {c["anchor"] for c in payload["checks"]}
    assert {"jacobi-identity", "module-action-compatibility",
            "action-variant-control", "submodule-dichotomy",
            "invariance-certificate", "witt-line-reduction",
            "commutator-replay", "isomorphism-rigidity",
            "difference-equation"} <= anchors
    assert run_cli(["report", "--level", "quick"])[1] == out


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "blockmod.cli", "bracket", "L(1,0)", "L(0,1)",
         "--q", "2"],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert "-3*L(1,1)" in result.stdout
