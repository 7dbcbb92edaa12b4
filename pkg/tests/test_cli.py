import json
import subprocess
import sys

import pytest

from statepoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out), out


def test_states_command(capsys, data_dir):
    code, report, _ = run(capsys, "states", str(data_dir / "conic.ideal"), "2")
    assert code == 0
    assert report["payload"]["states"] == [[0, 2, 0], [1, 0, 1]]
    assert report["payload"]["polytope"]["vertices"] == [["0", "2", "0"], ["1", "0", "1"]]


def test_mu_command_with_dual(capsys, data_dir):
    code, report, _ = run(capsys, "mu", str(data_dir / "conic.ideal"), "2",
                          "--weights", "2,0,0", "--dual")
    assert code == 0
    assert report["payload"]["mu"] == report["payload"]["mu_dual"] == "4/3"


def test_mu_negative_leading_weight(capsys, data_dir):
    code, report, _ = run(capsys, "mu", str(data_dir / "conic.ideal"), "2", "--weights=-1,0,1")
    assert code == 0 and report["payload"]["mu"] == "0"


def test_mu_constant_weights_note(capsys, data_dir):
    _, report, _ = run(capsys, "mu", str(data_dir / "conic.ideal"), "2", "--weights", "3,3,3")
    assert "note" in report["payload"]


def test_gotzmann_command(capsys):
    code, report, _ = run(capsys, "gotzmann", "--hilbert", "1,4")
    assert code == 0 and report["payload"]["gotzmann_number"] == 7


def test_verify_chain_geometric_checks_pass(capsys, data_dir):
    code, report, _ = run(capsys, "verify-chain", str(data_dir / "points3.json"), "2",
                          "--check", "vertices")
    assert code == 0 and report["outcome"] == "pass"


def test_verify_chain_mu_check_reports_discrepancy(capsys, data_dir):
    code, report, _ = run(capsys, "verify-chain", str(data_dir / "conic_conic.json"), "2",
                          "--check", "mu", "--mu-weights", "0,0,1,0,0")
    assert code == 1
    sample = report["payload"]["checks"]["mu"]["details"]["samples"][0]
    assert sample["derived_formula"]["equal"] is True
    assert sample["stated_formula"]["equal"] is False


@pytest.mark.parametrize("argv,code", [
    (["states", "missing.ideal", "2"], 2),
    (["gotzmann", "--hilbert", "1,x"], 2),
    (["gotzmann", "--hilbert", "0"], 2),
    (["mu", "{conic}", "2", "--weights", "1,2"], 2),
    (["verify-chain", "{bad}", "2"], 2),
    (["--budget", "3", "states", "{cubic}", "3"], 3),
])
def test_exit_codes(capsys, data_dir, argv, code):
    argv = [a.format(conic=data_dir / "conic.ideal", bad=data_dir / "bad_chain.json",
                     cubic=data_dir / "twisted_cubic.ideal") for a in argv]
    from statepoly.states import clear_caches
    clear_caches()
    got, report, _ = run(capsys, *argv)
    assert got == code
    assert report["outcome"] == "error" and report["exit_code"] == code


def test_hypothesis_violation_exit_code(capsys, tmp_path):
    path = tmp_path / "apart.json"
    path.write_text(json.dumps({"n": 2, "boundaries": [0, 1, 2],
                                "blocks": [{"vars": 2, "generators": ["x1"]},
                                           {"vars": 2, "generators": ["x0*x1"]}]}))
    code, report, _ = run(capsys, "verify-chain", str(path), "2")
    assert code == 4


def test_timing_flag_only_adds_timing(capsys, data_dir):
    _, plain, _ = run(capsys, "gotzmann", "--hilbert", "1,2")
    _, timed, _ = run(capsys, "--timing", "gotzmann", "--hilbert", "1,2")
    assert "timing_seconds" in timed and "timing_seconds" not in plain
    timed.pop("timing_seconds")
    assert timed == plain


def test_module_entry_point(data_dir):
    proc = subprocess.run([sys.executable, "-m", "statepoly", "gotzmann", "--hilbert", "1,3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["gotzmann_number"] == 4


def test_three_points_all_checks_with_balanced_weights(capsys, data_dir):
    code, report, _ = run(capsys, "verify-chain", str(data_dir / "points3.json"), "2",
                          "--check", "all", "--mu-weights", "1,0,-1")
    assert code == 0
    assert all(c["passed"] for c in report["payload"]["checks"].values())


def test_conic_chain_polytope_m3(capsys, data_dir):
    code, _, _ = run(capsys, "verify-chain", str(data_dir / "conic_conic.json"), "3",
                     "--check", "polytope")
    assert code == 0


@pytest.mark.parametrize("m,dual,expected", [(1, False, "-1"), (2, True, "-2")])
def test_mu_coordinate_hyperplane(capsys, tmp_path, m, dual, expected):
    path = tmp_path / "x0.ideal"
    path.write_text("vars: 2\nx0\n")
    argv = ["mu", str(path), str(m), "--weights", "1,-1"] + (["--dual"] if dual else [])
    code, report, _ = run(capsys, *argv)
    assert code == 0 and report["payload"]["mu"] == expected
    if dual:
        assert report["payload"]["dual_equal"] is True


def test_states_of_zero_and_monomial_ideals(capsys, tmp_path):
    empty = tmp_path / "empty.ideal"
    empty.write_text("vars: 3\n")
    _, report, _ = run(capsys, "states", str(empty), "2")
    assert report["payload"]["states"] == [[0, 0, 0]]
    mono = tmp_path / "mono.ideal"
    mono.write_text("vars: 3\nx0*x1\nx2^2\n")
    _, report, _ = run(capsys, "states", str(mono), "2")
    assert report["payload"]["state_count"] == 1


def test_statement_variant_reports_failure(capsys, data_dir):
    code, report, _ = run(capsys, "verify-chain", str(data_dir / "points3.json"), "2",
                          "--variant", "statement", "--check", "states")
    assert code == 1
    assert report["payload"]["checks"]["states"]["details"]["only_lhs"]
