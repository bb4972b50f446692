"""End-to-end CLI tests: every subcommand drives `gic.cli.main` directly,
parses the JSON it prints, and checks the documented report shape, the
pinned numbers, and the exit-code contract (0 = all assertions pass,
1 = an assertion failed, 2 = bad input)."""

import json
import math

import pytest

from gic.cli import main as cli_main

F3_POLY = "27,9,6,2,2,1,1"
F13_POLY = "2197,169,169,67,13,1,1"
REPORT_KEYS = {"command", "inputs", "results", "assertions",
               "skipped_primes", "timing_ms"}


def run(argv, capsys):
    code = cli_main(argv)
    out = capsys.readouterr().out
    return json.loads(out), code


@pytest.fixture(scope="module")
def curve_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("curves") / "example.curve"
    path.write_text("# y^2 = x^7 - x^6 - 5x^5 + 4x^4 + 5x^3 - x^2 - 5x + 3\n"
                    "genus 3\n"
                    "coeffs 3 -5 -1 5 4 -5 -1 1\n")
    return str(path)


# ------------------------------------------------------------------
# charpoly
# ------------------------------------------------------------------

def test_charpoly_example_curve(curve_file, capsys):
    report, code = run(["charpoly", "--curve", curve_file, "--p", "3"],
                       capsys)
    assert code == 0
    assert set(report) == REPORT_KEYS
    assert report["command"] == "charpoly"
    assert report["results"]["weil_polynomial"] == [27, 9, 6, 2, 2, 1, 1]
    assert report["results"]["counts"] == [5, 13, 29]
    assert report["results"]["q"] == 3
    [fe] = report["assertions"]
    assert fe["name"] == "weil_functional_equation" and fe["pass"] is True


def test_charpoly_bad_reduction_exits_2(curve_file, capsys):
    report, code = run(["charpoly", "--curve", curve_file, "--p", "2"],
                       capsys)
    assert code == 2 and "p=2" in report["error"]
    report, code = run(["charpoly", "--curve", curve_file, "--p", "45427"],
                       capsys)
    assert code == 2 and "45427" in report["error"]


def test_charpoly_rejects_malformed_curve_files(tmp_path, capsys):
    cases = {
        "short.curve": "genus 3\ncoeffs 1 2 3\n",
        "zero_lc.curve": "genus 1\ncoeffs 1 1 0 0\n",
        "mystery.curve": "genus 1\ncoeffs 1 1 0 1\nfoo bar\n",
        "no_coeffs.curve": "genus 3\n",
    }
    for name, text in cases.items():
        path = tmp_path / name
        path.write_text(text)
        report, code = run(["charpoly", "--curve", str(path), "--p", "3"],
                           capsys)
        assert code == 2 and "error" in report, name
    report, code = run(["charpoly", "--curve", str(tmp_path / "absent"),
                        "--p", "3"], capsys)
    assert code == 2 and "cannot read" in report["error"]


# ------------------------------------------------------------------
# galois-cert / a7-cert
# ------------------------------------------------------------------

def test_galois_cert_full_group(capsys):
    report, code = run(["galois-cert", "--poly", F3_POLY, "--q", "3"],
                       capsys)
    assert code == 0
    res = report["results"]
    assert res["certified"] is True
    assert res["group_order"] == 48
    assert len(res["witnesses"]) == 10
    assert res["missing_classes"] == []
    assert 3 in report["skipped_primes"]
    [a] = report["assertions"]
    assert a["name"] == "full_signed_group" and a["pass"] is True


def test_galois_cert_small_group_exits_1(capsys):
    report, code = run(["galois-cert", "--poly", F13_POLY, "--q", "13",
                        "--prime-bound", "2000"], capsys)
    assert code == 1
    assert report["results"]["certified"] is False
    assert len(report["results"]["missing_classes"]) == 4


def test_a7_cert_example_septic(capsys):
    report, code = run(["a7-cert", "--poly", "3,-5,-1,5,4,-5,-1,1"], capsys)
    assert code == 0
    res = report["results"]
    assert res["certified"] is True
    assert res["discriminant"] == 45427 ** 2
    assert res["discriminant_is_square"] is True


def test_a7_cert_rejects_non_square_discriminant(capsys):
    # leading minus needs the `=` form or argparse reads it as a flag
    report, code = run(["a7-cert", "--poly=-2,0,0,0,0,0,0,1"], capsys)
    assert code == 1
    assert report["results"]["certified"] is False


# ------------------------------------------------------------------
# weyl-scan
# ------------------------------------------------------------------

def test_weyl_scan_flags_the_thirteen_anomaly(curve_file, capsys):
    report, code = run(["weyl-scan", "--curve", curve_file,
                        "--pmin", "3", "--pmax", "20"], capsys)
    assert code == 0
    rows = {row["p"]: row["status"] for row in report["results"]["scan"]}
    assert rows == {3: "certified", 5: "certified", 7: "certified",
                    11: "certified", 13: "not certified",
                    17: "certified", 19: "certified"}
    assert report["skipped_primes"] == []


def test_weyl_scan_empty_range(curve_file, capsys):
    report, code = run(["weyl-scan", "--curve", curve_file,
                        "--pmin", "10", "--pmax", "9"], capsys)
    assert code == 0
    assert report["results"]["scan"] == []


# ------------------------------------------------------------------
# bounds
# ------------------------------------------------------------------

def test_bounds_main_mode(capsys):
    report, code = run(["bounds", "--height", "-2.511"], capsys)
    assert code == 0
    res = report["results"]
    assert res["dominant"] == "square_isogeny_term"
    assert math.isclose(res["bound"]["ln"], 376377333.81042224, rel_tol=1e-9)
    assert set(res["terms"]) == {"aux_place_term", "isogeny_term",
                                 "square_isogeny_term"}
    assert res["bound"]["ln"] == max(t["ln"] for t in res["terms"].values())


def test_bounds_main_mode_rejects_genus_two(capsys):
    report, code = run(["bounds", "--g", "2", "--height", "1.0"], capsys)
    assert code == 2 and "dimension" in report["error"]


def test_bounds_grh3_mode(capsys):
    report, code = run(["bounds", "--mode", "grh3", "--height", "-2.511",
                        "--logdisc", "0.0", "--lognorm", "3.3"], capsys)
    assert code == 0
    res = report["results"]
    assert res["bound"] == {"ln": 867173377247.1, "tag": "tensor-threshold-grh"}
    assert res["chebotarev_q"] == {"ln": 18066112025.2881, "tag": "q"}


def test_bounds_uncond3_mode(capsys):
    report, code = run(["bounds", "--mode", "uncond3", "--height", "-2.511",
                        "--logdisc", "0.0", "--lognorm", "3.3"], capsys)
    assert code == 0
    res = report["results"]
    assert res["bound"] == {"ln_ln": 18066112046.27711,
                            "tag": "tensor-threshold-unconditional"}
    assert res["chebotarev_q"] == {"ln_ln": 18066112042.40591, "tag": "q"}


def test_bounds_threefold_modes_need_discriminant_data(capsys):
    report, code = run(["bounds", "--mode", "grh3", "--height", "1.0"],
                       capsys)
    assert code == 2 and "--logdisc" in report["error"]


# ------------------------------------------------------------------
# exclude
# ------------------------------------------------------------------

def test_exclude_all_classes_at_v3(curve_file, capsys):
    report, code = run(["exclude", "--curve", curve_file, "--v", "3"],
                       capsys)
    assert code == 0
    res = report["results"]
    assert res["weil_polynomial"] == [27, 9, 6, 2, 2, 1, 1]
    assert res["precision_bits_used"] >= 192
    classes = [r["class"] for r in res["reports"]]
    assert classes == ["tensor-product (2 x 3)", "small-Lie-socle",
                       "minuscule-weight (n=1, N=4)",
                       "minuscule-weight (n=3, N=2)", "tensor-induced"]
    tensor = res["reports"][0]
    assert tensor["small_primes"] == [2, 3] and tensor["cofactors"] == []
    induced = res["reports"][-1]
    assert induced["applicable"] is False
    assert all(a["pass"] for a in report["assertions"])
    # the 192-bit floor is below what the orbit norms escalate to
    assert any("working bits" in note for note in res["notes"])


def test_exclude_single_class_and_big_integer_strings(curve_file, capsys):
    report, code = run(["exclude", "--curve", curve_file, "--v", "3",
                        "--classes", "minuscule"], capsys)
    assert code == 0
    reports = report["results"]["reports"]
    assert len(reports) == 2
    n1 = reports[0]
    assert n1["class"] == "minuscule-weight (n=1, N=4)"
    # exact integers ride as decimal strings, far beyond double precision
    big = "64614514710381724522464442957268266114051772967077841"
    assert n1["integers"] == [
        big, "2708543504717688500219566134132736"]
    assert all(isinstance(s, str) for s in n1["integers"])


def test_exclude_rejects_unknown_class(curve_file, capsys):
    report, code = run(["exclude", "--curve", curve_file, "--v", "3",
                        "--classes", "frobnicate"], capsys)
    assert code == 2 and "frobnicate" in report["error"]


def test_exclude_refuses_uncertified_frobenius(curve_file, capsys):
    report, code = run(["exclude", "--curve", curve_file, "--v", "13",
                        "--classes", "tensor"], capsys)
    assert code == 2
    assert "certification failed" in report["error"]


def test_exclude_output_is_deterministic(curve_file, capsys):
    argv = ["exclude", "--curve", curve_file, "--v", "3",
            "--classes", "tensor"]
    first, code1 = run(argv, capsys)
    second, code2 = run(argv, capsys)
    assert code1 == code2 == 0
    first.pop("timing_ms")
    second.pop("timing_ms")
    assert first == second


def test_exclude_low_floor_same_integers(curve_file, capsys):
    lo, code = run(["exclude", "--curve", curve_file, "--v", "3",
                    "--classes", "tensor", "--prec", "64"], capsys)
    assert code == 0
    hi, _ = run(["exclude", "--curve", curve_file, "--v", "3",
                 "--classes", "tensor"], capsys)
    assert (lo["results"]["reports"][0]["integers"]
            == hi["results"]["reports"][0]["integers"])
    assert any("working bits" in note for note in lo["results"]["notes"])


# ------------------------------------------------------------------
# example12
# ------------------------------------------------------------------

@pytest.fixture(scope="module")
def example12_report(capsys_factory=None):
    # run once for the module; capsys is function-scoped, so capture by hand
    import contextlib
    import io
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(["example12"])
    return json.loads(buf.getvalue()), code


def test_example12_all_assertions_pass(example12_report):
    report, code = example12_report
    assert code == 0
    assert len(report["assertions"]) == 10
    assert all(a["pass"] for a in report["assertions"])


def test_example12_records_the_thirteen_exception(example12_report):
    report, _ = example12_report
    scan = {row["p"]: row["status"] for row in report["results"]["weyl_scan"]}
    not_certified = sorted(p for p, s in scan.items() if s != "certified")
    assert not_certified == [13]
    names = [a["name"] for a in report["assertions"]]
    assert "signed group certified at all odd good p <= 53 except 13" in names


def test_example12_catches_a_perturbed_curve(tmp_path, capsys):
    path = tmp_path / "tweaked.curve"
    path.write_text("genus 3\ncoeffs 4 -5 -1 5 4 -5 -1 1\n")
    report, code = run(["example12", "--curve", str(path)], capsys)
    assert code == 1
    failed = [a["name"] for a in report["assertions"] if not a["pass"]]
    assert "disc(g) = 45427^2" in failed
    assert len(failed) >= 3


# ------------------------------------------------------------------
# global behavior
# ------------------------------------------------------------------

def test_seed_flag_is_accepted(curve_file, capsys):
    report, code = run(["--seed", "7", "charpoly", "--curve", curve_file,
                        "--p", "3"], capsys)
    assert code == 0
    assert report["results"]["weil_polynomial"] == [27, 9, 6, 2, 2, 1, 1]


def test_argparse_level_errors_use_exit_code_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli_main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli_main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli_main(["--help"])
    assert exc.value.code == 0
    capsys.readouterr()
