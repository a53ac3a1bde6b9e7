import json
from fractions import Fraction as F

import pytest

from levintype import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def entry(doc, k, n):
    return next(r for r in doc["table"] if r["k"] == k and r["n"] == n)


# -- accelerate --------------------------------------------------------------


def test_ln2_order_one_spot_value(capsys):
    doc = run_json(capsys, "accelerate", "--problem", "ln2", "--family", "S", "--variant", "d",
                   "--kmax", "1", "--scalar", "rational", "--terms", "6")
    assert entry(doc, 1, 0)["value"] == "7/10"
    assert doc["meta"]["family"] == "S"


def test_constant_input(capsys, tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("\n".join(["3.5"] * 8))
    om = tmp_path / "omega.txt"
    om.write_text("\n".join(f"1/{n + 1}" for n in range(8)))
    doc = run_json(capsys, "accelerate", "--input", str(f), "--as-sums", "--variant", "explicit",
                   "--omega", str(om), "--scalar", "rational")
    assert doc["recommended"]["value"] == "7/2"
    assert doc["recommended"]["error_estimate"] == 0


def test_divergent_euler_series(capsys):
    doc = run_json(capsys, "accelerate", "--problem", "euler-z1", "--family", "S", "--variant", "d",
                   "--terms", "26")
    assert doc["recommended"]["abs_error"] <= 1e-6


def test_rational_literals_and_json_input(capsys, tmp_path):
    f = tmp_path / "a.json"
    f.write_text(json.dumps(["1", "-1/2", "1/3", "-1/4", "1/5"]))
    doc = run_json(capsys, "accelerate", "--input", str(f), "--family", "S", "--variant", "d",
                   "--kmax", "1", "--scalar", "rational")
    assert entry(doc, 1, 0)["value"] == "7/10"


def test_stdin_input(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("1\n-0.5\n0.3333333333333333\n-0.25\n"))
    doc = run_json(capsys, "accelerate", "--input", "-", "--family", "S", "--variant", "d", "--kmax", "1")
    assert abs(entry(doc, 1, 0)["value"] - 0.7) < 1e-15


def test_csv_output_to_file(capsys, tmp_path):
    out = tmp_path / "t.csv"
    code, stdout, _ = run(capsys, "accelerate", "--problem", "ln2", "--terms", "5", "--format", "csv",
                          "--output", str(out))
    assert code == 0 and stdout == ""
    lines = out.read_text().splitlines()
    assert lines[0] == "k,n,value,valid,denominator_abs"
    assert len(lines) == 1 + 5 + 4 + 3 + 2 + 1


def test_richardson_family_has_no_denominators(capsys):
    doc = run_json(capsys, "accelerate", "--problem", "zeta2", "--family", "lambda", "--terms", "8")
    assert all(r["denominator_abs"] is None for r in doc["table"])
    assert doc["recommended"]["abs_error"] < 1e-6


def test_stable_selection(capsys):
    doc = run_json(capsys, "accelerate", "--problem", "zeta2", "--terms", "25", "--select", "stable")
    assert doc["recommended"]["abs_error"] <= 1e-8


def test_coefficient_problem_needs_z(capsys):
    code, _, err = run(capsys, "accelerate", "--problem", "exp")
    assert code == 1 and "--z" in err
    doc = run_json(capsys, "accelerate", "--problem", "exp", "--z", "1", "--terms", "12", "--variant", "t")
    assert abs(doc["recommended"]["value_float"] - 2.718281828459045) < 1e-12


# -- predict -----------------------------------------------------------------


def test_predict_exp(capsys):
    doc = run_json(capsys, "predict", "--problem", "exp", "--terms", "3", "--variant", "d", "--k", "1",
                   "--scalar", "rational")
    assert doc["predictions"][0] == {"index": 3, "predicted": "1/4", "predicted_float": 0.25}
    assert doc["guaranteed_matched"] == 3
    assert doc["approximant"]["numerator"] == ["1", "1/2"]


def test_predict_geometric(capsys):
    doc = run_json(capsys, "predict", "--problem", "geometric", "--terms", "3", "--variant", "t", "--k", "2",
                   "--count", "5", "--scalar", "rational")
    assert [p["predicted"] for p in doc["predictions"]] == ["1"] * 5


def test_predict_reports_matches_against_extra_input(capsys):
    doc = run_json(capsys, "predict", "--problem", "exp", "--terms", "10", "--variant", "d", "--k", "1",
                   "--scalar", "rational")
    assert doc["matched_against_input"] == 3


def test_predict_too_short(capsys):
    code, _, err = run(capsys, "predict", "--problem", "exp", "--terms", "2", "--variant", "d")
    assert code == 2
    assert "needs 3 coefficients" in err


# -- compare -----------------------------------------------------------------


def test_compare_ln2_against_epsilon(capsys):
    doc = run_json(capsys, "compare", "--problem", "ln2", "--terms", "12", "--family", "S", "--variant", "d",
                   "--baseline", "epsilon")
    assert doc["methods"] == ["0:S:d", "1:epsilon"]
    for lab in doc["methods"]:
        errs = [r[f"{lab}:abs_error"] for r in doc["rows"] if r["i"] >= 2]
        errs = [e for e in errs if e is not None]
        assert all(b < a for a, b in zip(errs, errs[1:])), lab
    final = [r["0:S:d:abs_error"] for r in doc["rows"] if r["0:S:d:abs_error"] is not None][-1]
    assert final < 1e-8


def test_compare_without_oracle(capsys, tmp_path):
    f = tmp_path / "a.txt"
    f.write_text("1\n0.5\n0.25\n0.125\n0.0625\n")
    doc = run_json(capsys, "compare", "--input", str(f), "--baseline", "lambda")
    assert "oracle" not in doc
    assert not any(key.endswith("abs_error") for key in doc["rows"][0])


def test_compare_same_method_twice(capsys):
    doc = run_json(capsys, "compare", "--problem", "ln2", "--terms", "10", "--baseline", "L:u")
    for r in doc["rows"]:
        assert r["0:L:u:value"] == r["1:L:u:value"]
        assert r["0:L:u:abs_error"] == r["1:L:u:abs_error"]


# -- general behaviour -------------------------------------------------------


def test_list_problems(capsys):
    doc = run_json(capsys, "list-problems")
    names = [p["name"] for p in doc["problems"]]
    assert names == sorted(names) and "euler-z1" in names


def test_output_is_deterministic(capsys):
    argv = ("accelerate", "--problem", "euler-z1", "--family", "C", "--alpha", "3", "--variant", "v")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize("family, extra", [("L", ()), ("S", ()), ("M", ("--xi", "4")),
                                           ("C", ("--alpha", "2")), ("G", ("--q", "m^2"))])
@pytest.mark.parametrize("variant", "utdv")
def test_scalar_modes_agree(capsys, family, extra, variant):
    argv = ["accelerate", "--problem", "ln2", "--terms", "11", "--kmax", "8", "--family", family,
            "--variant", variant, *extra]
    approx = run_json(capsys, *argv)
    exact = run_json(capsys, *argv, "--scalar", "rational")
    for a, e in zip(approx["table"], exact["table"]):
        if a["valid"]:
            ref = F(e["value"])
            assert abs(a["value"] - ref) <= 1e-10 * abs(ref)


@pytest.mark.parametrize("argv", [
    ("accelerate", "--problem", "ln2", "--family", "epsilon", "--variant", "d"),
    ("accelerate", "--problem", "ln2", "--family", "C"),
    ("accelerate", "--problem", "ln2", "--family", "G"),
    ("accelerate", "--problem", "ln2", "--q", "m^2"),
    ("accelerate", "--problem", "nope"),
    ("accelerate",),
    ("accelerate", "--problem", "ln2", "--input", "x.txt"),
    ("accelerate", "--problem", "ln2", "--family", "L", "--beta", "0"),
    ("predict", "--problem", "exp", "--family", "epsilon"),
    ("compare", "--problem", "ln2", "--baseline", "wynn"),
    ("accelerate", "--bogus"),
], ids=["epsilon-variant", "c-no-alpha", "g-no-q", "q-not-g", "unknown-problem", "no-input", "two-inputs",
        "bad-beta", "predict-epsilon", "bad-baseline", "unknown-flag"])
def test_configuration_errors_exit_1(capsys, argv):
    code, out, err = run_or_exit(capsys, argv)
    assert code == 1
    assert out == "" and err


def run_or_exit(capsys, argv):
    try:
        return run(capsys, *argv)
    except SystemExit as exc:
        out, err = capsys.readouterr()
        return exc.code, out, err


def test_input_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "accelerate", "--input", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("1\nabc\n")
    assert run(capsys, "accelerate", "--input", str(bad))[0] == 2
    bad.write_text("[1, 2")
    assert run(capsys, "accelerate", "--input", str(bad))[0] == 2
    bad.write_text("   \n")
    assert run(capsys, "accelerate", "--input", str(bad))[0] == 2
    one = tmp_path / "one.txt"
    one.write_text("1\n")
    code, _, err = run(capsys, "accelerate", "--input", str(one), "--variant", "d")
    assert code == 2 and "at least 2" in err


def test_numerical_errors_exit_3(capsys, tmp_path):
    # equal consecutive terms leave the v estimate undefined
    f = tmp_path / "flat.txt"
    f.write_text("1\n1\n1\n1\n")
    code, _, err = run(capsys, "accelerate", "--input", str(f), "--variant", "v")
    assert code == 3 and "numerical" in err
    # q_2 = -3 makes the factor n + k + q_m vanish at n = 0, k = 3
    code, _, err = run(capsys, "accelerate", "--problem", "ln2", "--terms", "8", "--family", "G",
                       "--q", "list:1,-3,2,2,2,2,2,2,2")
    assert code == 3 and "n=0, k=3" in err
