import json
import subprocess
import sys

import pytest

from relkgauss import cli, relk


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_chartable(capsys):
    code, out, _ = run(capsys, "chartable", "--group", "heisenberg:3")
    assert code == 0
    data = json.loads(out)
    assert sorted(data["degrees"]) == [1] * 9 + [3, 3]


def test_output_is_byte_identical(capsys):
    _, first, _ = run(capsys, "cchar", "--conductor", "63", "--H", "8,55")
    _, second, _ = run(capsys, "cchar", "--conductor", "63", "--H", "8,55")
    assert first == second
    assert json.loads(first)["c_is_zero"] is False


def test_gauss_and_numeric_flag(capsys):
    code, out, _ = run(capsys, "--numeric", "gauss", "--modulus", "5", "--exps", "2")
    assert code == 0
    row = json.loads(out)["sums"][0]
    assert row["checks"]["tau_tau_bar_ok"]
    re, im = row["tau"]["numeric"]
    assert re * re + im * im == pytest.approx(5)
    # without the flag no numeric rendering appears
    _, out, _ = run(capsys, "gauss", "--modulus", "5", "--exps", "2")
    assert "numeric" not in json.loads(out)["sums"][0]["tau"]


def test_gauss_all_primitive(capsys):
    code, out, _ = run(capsys, "gauss", "--modulus", "16")
    assert code == 0
    assert len(json.loads(out)["sums"]) == 4


def test_jacobi(capsys):
    code, out, _ = run(capsys, "jacobi", "--modulus", "7", "--exps1", "1", "--exps2", "2")
    assert code == 0
    data = json.loads(out)
    assert data["gauss_jacobi_relation"] is True


def test_field_commands(capsys):
    for argv in (["galois-jacobi", "--conductor", "7", "--degree", "3"],
                 ["ychar", "--conductor", "9", "--degree", "3"],
                 ["ychar", "--conductor", "63", "--H", "8,55", "--prime", "3"],
                 ["resolvent", "--conductor", "7", "--degree", "3"],
                 ["assemble-a", "--conductor", "9", "--degree", "3"],
                 ["betti", "--group", "cyclic:5"],
                 ["diagram", "--group", "cyclic:3", "--samples", "10"],
                 ["enumerate-local", "--family", "p3", "--p", "5"],
                 ["enumerate-local", "--family", "l2p", "--l", "3", "--p", "7"]):
        code, out, _ = run(capsys, *argv)
        assert code == 0, argv
        json.loads(out)


def test_resolvent_with_explicit_element(capsys):
    z = json.dumps({"order": 7, "coeffs": [0, 1, 0, 0, 0, 0]})
    code, out, _ = run(capsys, "resolvent", "--conductor", "7", "--b", z)
    assert code == 0
    assert len(json.loads(out)["resolvents"]) == 6
    # zeta_7 does not lie in the cubic subfield
    code, _, err = run(capsys, "resolvent", "--conductor", "7", "--degree", "3", "--b", z)
    assert code == 2 and "error" in json.loads(err)
    code, _, _ = run(capsys, "resolvent", "--conductor", "7", "--b", "{bad")
    assert code == 2


def test_enumeration_counts(capsys):
    _, out, _ = run(capsys, "enumerate-local", "--family", "l2p", "--l", "5", "--p", "11")
    data = json.loads(out)
    assert data["count"] == 5 and data["quotient_module_check"] is True


@pytest.mark.parametrize("argv", [
    ["chartable", "--group", "bogus:1"],
    ["chartable", "--group", "metacyclic:5,5,11"],
    ["gauss", "--modulus", "12", "--exps", "1"],
    ["enumerate-local", "--family", "p3", "--p", "4"],
    ["enumerate-local", "--family", "l2p", "--p", "7"],
    ["galois-jacobi", "--conductor", "7", "--degree", "4"],
    ["verify", "--identity", "a_equals_c", "--scenario", "/nonexistent/x.json"],
])
def test_bad_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "error" in json.loads(err)


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["betti"])
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["ychar", "--conductor", "7", "--degree", "3", "--H", "6"])


def test_verify_packaged_scenarios(capsys):
    for identity, name in [("a_equals_c", "zeta9_cubic.json"), ("tame_theorem", "zeta7_tame_k5.json"),
                           ("cwr_vanish", "conductor63_nonic.json"), ("eq112", "heisenberg_restriction.json"),
                           ("prepare_proof", "zeta7_prepare.json"), ("key_diagram", "diagram_33.json"),
                           ("label_product", "zeta7_cubic.json")]:
        code, out, _ = run(capsys, "verify", "--identity", identity, "--scenario", name)
        assert code == 0, name
        assert json.loads(out) == {"identity": identity, "holds": True}


def test_verify_schema_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": {"conductor": "seven"}}))
    code, _, err = run(capsys, "verify", "--identity", "a_equals_c", "--scenario", str(bad))
    assert code == 2 and "invalid scenario" in json.loads(err)["error"]
    bad.write_text("{not json")
    code, _, err = run(capsys, "verify", "--identity", "a_equals_c", "--scenario", str(bad))
    assert code == 2 and "valid JSON" in json.loads(err)["error"]
    with pytest.raises(cli.InputError):
        cli.validate_scenario("nope", {})


def test_verify_failure_exits_1(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(relk, "verify_identity", lambda tag, data: (False, {"reason": "forced"}))
    scen = tmp_path / "s.json"
    scen.write_text(json.dumps({"field": {"conductor": 7, "degree": 3}}))
    code, out, _ = run(capsys, "verify", "--identity", "a_equals_c", "--scenario", str(scen))
    assert code == 1
    assert json.loads(out)["witness"] == {"reason": "forced"}


def test_verify_list_scenario_with_workers(tmp_path, monkeypatch, capsys):
    scen = tmp_path / "list.json"
    scen.write_text(json.dumps([{"field": {"conductor": 7, "degree": 3}},
                                {"field": {"conductor": 9, "degree": 3}}]))
    monkeypatch.setenv(cli.WORKERS_ENV, "2")
    code, out, _ = run(capsys, "verify", "--identity", "a_equals_c", "--scenario", str(scen))
    assert code == 0
    assert [r["holds"] for r in json.loads(out)] == [True, True]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "relkgauss", "enumerate-local", "--family", "p3",
                           "--p", "3"], capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 3
    proc = subprocess.run([sys.executable, "-m", "relkgauss", "chartable", "--group", "nope:1"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 2
