import json
import math

import pytest

from polarconst import cli
from polarconst import experiments as xp
from polarconst.poly import dumps_polynomial, varopoulos, real_l1_example

SMALL = {
    "l1-constants-table": {"k_max": 6, "d_max": 4},
    "l1-roots-convergence": {"thresholds": [[3, 99, 1.05]], "ladder": [12, 48]},
    "varopoulos-lp3": {"p_values": ["inf", 4], "starts": 20},
    "real-l1-bochnak": {"m_values": [1], "starts": 20},
    "banach-hilbert": {"n": 3, "trials": 5, "starts": 8, "linf2_trials": 3},
    "quotient-lemma": {"lifts": 20, "polys_per_degree": 2, "tuples_per_poly": 3, "starts": 10},
    "harris-audit": {"n": 3, "trials": 4, "starts": 10},
    "polarization-oracle": {"trials": 40},
}


@pytest.mark.parametrize("name", sorted(xp.EXPERIMENTS))
def test_registry_runs_and_passes(name):
    rep = xp.run(name, params=SMALL[name])
    assert rep.name == name
    assert rep.claims
    failed = [c.description for c in rep.claims if not c.passed]
    assert not failed, failed


def test_unknown_name():
    with pytest.raises(KeyError):
        xp.run("no-such-experiment")


def test_reports_are_reproducible():
    a = xp.run("polarization-oracle", params={"trials": 20})
    b = xp.run("polarization-oracle", params={"trials": 20})
    assert [c.to_json_dict() for c in a.claims] == [c.to_json_dict() for c in b.claims]


def test_report_json_round_trip(tmp_path):
    rep = xp.run("l1-roots-convergence")
    path = tmp_path / "report.json"
    rep.write_json(path)
    back = xp.ExperimentReport.from_json_dict(json.loads(path.read_text()))
    assert back == rep


def test_report_csv_columns(tmp_path):
    rep = xp.run("l1-constants-table", params={"k_max": 3, "d_max": 2})
    path = tmp_path / "report.csv"
    rep.write_csv(path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "claim,expected,observed,tolerance,direction,pass"
    assert len(lines) == len(rep.claims) + 1


def test_forced_failure_flips_exit_contract():
    rep = xp.run("l1-roots-convergence", perturb_claim=0)
    assert not rep.all_pass


def test_default_seed_is_stable():
    assert xp.default_seed("banach-hilbert") == xp.default_seed("banach-hilbert")
    assert xp.default_seed("banach-hilbert") != xp.default_seed("harris-audit")


def test_claim_directions():
    assert xp.Claim("d", 1.0, 0.95, 0.1, "lower").passed
    assert not xp.Claim("d", 1.0, 0.85, 0.1, "lower").passed
    assert xp.Claim("d", 1.0, 1.05, 0.1, "upper").passed
    assert not xp.Claim("d", 1.0, 1.15, 0.1, "upper").passed
    assert xp.Claim("d", 1.0, 1.05, 0.1).passed
    with pytest.raises(ValueError):
        xp.Claim("d", 1.0, 1.0, 0.0, "sideways")


# -- CLI ------------------------------------------------------------------------


def test_cli_exact_c(capsys):
    assert cli.main(["exact-c", "--k", "8", "--d", "2"]) == 0
    out = capsys.readouterr().out
    assert "128/35" in out
    assert "3.65714285714286" in out


def test_cli_harris(capsys):
    assert cli.main(["harris", "--parts", "2,2"]) == 0
    assert "8/3" in capsys.readouterr().out


def test_cli_harris_rejects_zero_part(capsys):
    assert cli.main(["harris", "--parts", "2,0"]) == 2


def test_cli_roots(capsys):
    assert cli.main(["roots", "--d", "2", "--k-list", "8,16"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("8 ")
    assert float(lines[0].split()[1]) == pytest.approx((128 / 35) ** 0.125, rel=1e-12)


def test_cli_estimate_varopoulos(tmp_path, capsys):
    f = tmp_path / "varopoulos.json"
    f.write_text(dumps_polynomial(varopoulos()))
    code = cli.main(["estimate", "--poly", str(f), "--p", "inf", "--field", "complex",
                     "--target", "poly", "--starts", "20", "--seed", "1"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "poly"
    assert data["value"] == pytest.approx(5.0, abs=1e-4)


def test_cli_estimate_blocked_requires_blocks(tmp_path, capsys):
    f = tmp_path / "v.json"
    f.write_text(dumps_polynomial(varopoulos()))
    assert cli.main(["estimate", "--poly", str(f), "--p", "2", "--target", "blocked"]) == 2


def test_cli_ratio_with_exact_denominator(tmp_path, capsys):
    f = tmp_path / "v.json"
    f.write_text(dumps_polynomial(varopoulos()))
    code = cli.main(["ratio", "--poly", str(f), "--p", "inf", "--exact-denominator", "5.0",
                     "--starts", "20"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rigorous"] is True
    assert data["ratio"] >= 6.0 / 5.0 - 1e-4


def test_cli_bochnak(tmp_path, capsys):
    f = tmp_path / "p1.json"
    f.write_text(dumps_polynomial(real_l1_example(1)))
    assert cli.main(["bochnak", "--poly", str(f), "--p", "1", "--starts", "20"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ratio"] >= 2.0 - 1e-3


def test_cli_bochnak_rejects_complex(tmp_path, capsys):
    f = tmp_path / "v.json"
    f.write_text(dumps_polynomial(varopoulos()))
    assert cli.main(["bochnak", "--poly", str(f), "--p", "2"]) == 2


def test_cli_quotient_demo(tmp_path, capsys):
    code = cli.main(["quotient-demo", "--p", "2", "--dim", "2", "--eta", "0.2",
                     "--epsilon", "0.3", "--lifts", "20", "--seed", "0"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert set(data) == {"d", "eta", "epsilon", "max_l1_ratio", "max_residual", "transfer_slack"}
    assert data["max_l1_ratio"] <= 1.3
    assert data["max_residual"] <= 1e-12
    assert data["transfer_slack"] <= 1.0


def test_cli_quotient_demo_rejects_bad_pair(capsys):
    assert cli.main(["quotient-demo", "--p", "2", "--dim", "2", "--eta", "0.5",
                     "--epsilon", "0.2"]) == 2


def test_cli_verify_pass_and_outputs(tmp_path, capsys):
    jout = tmp_path / "rep.json"
    cout = tmp_path / "rep.csv"
    code = cli.main(["verify", "l1-roots-convergence", "--json", str(jout), "--csv", str(cout)])
    out = capsys.readouterr().out
    assert code == 0
    assert "[PASS]" in out
    report = json.loads(jout.read_text())
    assert report["name"] == "l1-roots-convergence"
    assert cout.read_text().startswith("claim,expected,observed")


def test_cli_verify_forced_failure_exit_one(capsys):
    code = cli.main(["verify", "l1-roots-convergence", "--force-fail", "0"])
    assert code == 1
    assert "[FAIL]" in capsys.readouterr().out


def test_cli_verify_unknown_name_usage_error(capsys):
    assert cli.main(["verify", "nonexistent"]) == 2


def test_cli_malformed_poly_is_usage_error(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"field": "real", "degree": 2,\n  "dim": 2, "terms": [oops]}')
    assert cli.main(["estimate", "--poly", str(f), "--p", "2"]) == 2
    err = capsys.readouterr().err
    assert "bad.json:2:" in err  # line-anchored message


def test_cli_degree_mismatch_poly_file(tmp_path, capsys):
    f = tmp_path / "bad2.json"
    f.write_text(json.dumps({"field": "real", "degree": 2, "dim": 2,
                             "terms": [{"alpha": [1, 0], "re": 1.0, "im": 0.0}]}))
    assert cli.main(["estimate", "--poly", str(f), "--p", "2"]) == 2
    assert "term 0" in capsys.readouterr().err


def test_cli_missing_file_usage_error(capsys):
    assert cli.main(["estimate", "--poly", "/nonexistent/x.json", "--p", "2"]) == 2


def test_cli_usage_error_exit_two():
    assert cli.main(["exact-c", "--k", "notanint", "--d", "2"]) == 2
    assert cli.main([]) == 2
