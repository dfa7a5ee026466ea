import csv
import io
import json

import pytest

from yangian.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def body(out):
    lines = out.splitlines()
    assert lines[0].startswith("# config N=")
    return lines[1:]


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "T[1,2,1]*T[1,1,2]")
    assert code == EXIT_OK
    assert body(out) == ["-T[1,1,1] + T[1,2,2] + T[1,1,2]*T[1,2,1]"]


def test_config_echo(capsys):
    _, out, _ = run(capsys, "normalize", "1", "--n", "3", "--dual-trunc", "5", "--seed", "7")
    assert out.splitlines()[0] == "# config N=3 D=5 K=4 seed=7"


def test_commute(capsys):
    code, out, _ = run(capsys, "commute", "T[1,1,2]", "T[1,2,1]")
    assert code == EXIT_OK and body(out) == ["T[1,1,1] - T[1,2,2]"]
    _, out, _ = run(capsys, "commute", "Z[2]", "T[1,1,2]")
    assert body(out) == ["0"]


def test_pair(capsys):
    _, out, _ = run(capsys, "pair", "T[1,1,2]", "T[-1,2,1]")
    assert body(out) == ["-1"]
    _, out, _ = run(capsys, "pair", "T[1,1,1]*T[1,1,1]", "T[-1,1,1]*T[-1,1,1]")
    assert body(out) == ["2"]


def test_pair_rejects_wrong_signs(capsys):
    code, _, err = run(capsys, "pair", "T[-1,1,1]", "T[1,1,1]")
    assert code == EXIT_USAGE and err.startswith("error:")


def test_gram(capsys):
    code, out, _ = run(capsys, "gram", "--deg", "1")
    lines = body(out)
    assert code == EXIT_OK and lines[0] == "degree 1: size 4, rank 4"
    assert len(lines) == 5


def test_dual_basis(capsys):
    _, out, _ = run(capsys, "dual-basis", "--deg-max", "1")
    assert "T[1,1,2]  ->  -T[-1,2,1]" in body(out)


def test_urmatrix(capsys):
    _, out, _ = run(capsys, "urmatrix", "--deg-max", "1")
    lines = body(out)
    assert lines[0] == "1 * (1) (x) (1)"
    assert "-1 * (T[-1,2,1]) (x) (T[1,1,2])" in lines


def test_zseries(capsys):
    _, out, _ = run(capsys, "zseries", "--order", "2")
    assert body(out)[:3] == ["Z^(0) = 1", "Z^(1) = 0", "Z^(2) = -T[1,1,1] - T[1,2,2]"]


def test_antipode(capsys):
    _, out, _ = run(capsys, "antipode", "--side", "y", "--order", "1")
    assert "S(T[1,1,2]) = -T[1,1,2]" in body(out)
    _, out, _ = run(capsys, "antipode", "--side", "y", "--of", "T[1,1,2]*T[1,2,1]")
    assert body(out)


def test_rep(capsys):
    _, out, _ = run(capsys, "rep", "--spec", "rho_c:3", "--apply", "T[2,1,2]")
    assert body(out) == ["[2] <- [1]: -3"]
    _, out, _ = run(capsys, "rep", "--spec", "sigma_c:2,sigma_c:3", "--apply", "T[1,1,2]")
    assert len(body(out)) == 4


def test_rep_zero_parameter(capsys):
    code, _, err = run(capsys, "rep", "--spec", "sigma_dual_c:0", "--apply", "T[-1,1,1]", "--dual-trunc", "2")
    assert code == EXIT_USAGE and "error:" in err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "ybe", "--n", "3")
    lines = body(out)
    assert code == EXIT_OK
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].startswith("# ") and "0 failed" in lines[-1]


def test_check_unknown_suite(capsys):
    code, _, _ = run(capsys, "check", "nonsense")
    assert code == EXIT_USAGE


def test_check_exit_code_on_failure(capsys, monkeypatch):
    from yangian import cli
    from yangian.verify import CheckResult

    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [CheckResult("forced", False, "detail")])
    code, out, _ = run(capsys, "check", "ybe")
    assert code == EXIT_FAIL and "FAIL  forced" in out


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "normalize", "T[0,1,1]")
    assert code == EXIT_USAGE
    assert err.startswith("error:") and "^" in err


def test_missing_truncation_is_usage_error(capsys):
    code, _, err = run(capsys, "normalize", "T[-2,1,1]*T[-1,1,1]")
    assert code == EXIT_USAGE and "error:" in err


def test_json_format(capsys):
    _, out, _ = run(capsys, "pair", "T[1,1,2]", "T[-1,2,1]", "--format", "json")
    data = json.loads(out)
    assert data["config"] == {"N": 2, "D": None, "K": 4, "seed": 0}
    assert data["command"] == "pair" and data["result"] == {"value": "-1"}


def test_json_element(capsys):
    _, out, _ = run(capsys, "normalize", "T[1,1,2]*T[-1,2,1]", "--dual-trunc", "3", "--format", "json")
    data = json.loads(out)
    assert data["result"]["D"] == 3
    assert all({"coeff", "mono"} <= set(t) for t in data["result"]["terms"])


def test_csv_format(capsys):
    _, out, _ = run(capsys, "normalize", "T[1,1,1] + 1/2", "--format", "csv")
    lines = body(out)
    rows = list(csv.reader(io.StringIO("\n".join(lines))))
    assert rows[0] == ["coeff", "mono"]
    assert sorted(rows[1:]) == [["1", "T[1,1,1]"], ["1/2", "1"]]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "z.json"
    code, out, _ = run(capsys, "zseries", "--order", "2", "--format", "json", "--out", str(target))
    assert code == EXIT_OK
    data = json.loads(target.read_text())
    assert data["command"] == "zseries"


@pytest.mark.parametrize("argv", [[], ["normalize"], ["gram", "--deg", "x"]])
def test_argparse_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE
