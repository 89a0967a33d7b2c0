import json
import subprocess
import sys

import pytest

from growthlab.cli import main


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out


def test_growth_csv(capsys):
    code, out = run(["growth", "--group", "z^1", "--radius", "3"], capsys)
    assert code == 0
    assert out.splitlines() == ["r,value", "1,3", "2,5", "3,7"]


def test_distortion_flags_lower_bounds(capsys):
    code, out = run(["distortion", "--group", "heis3", "--subgroup", "center", "--radius", "8"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r,value,lower_bound"
    assert "4,4,1" in lines and "8,8,4" in lines


def test_closure_and_equiv(tmp_path, capsys):
    f = tmp_path / "f.csv"
    f.write_text("r,value\n1,1\n2,5\n3,6\n4,6\n")
    code, out = run(["closure", "--input", str(f)], capsys)
    assert code == 0 and out.splitlines()[-1] == "4,10"
    g = tmp_path / "g.csv"
    g.write_text("r,value\n1,2\n2,10\n3,12\n4,12\n")
    code, out = run(["equiv", "--f", str(f), "--g", str(g), "--relation", "approx", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)


def test_signed_sum_example(tmp_path, capsys):
    s = tmp_path / "s.json"
    s.write_text(json.dumps({"pairs": [[1, 1], [10, 5], [100, 30]]}))
    code, out = run(["signed-sum", "--system", str(s), "--horizon", "100"], capsys)
    rows = dict(line.split(",") for line in out.splitlines()[1:])
    assert code == 0 and rows["20"] == "10" and rows["99"] == "31"


def test_check_cd_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.csv"
    good.write_text("n,l\n" + "".join(f"{n},{n}\n" for n in range(21)))
    assert run(["check-cd", "--input", str(good)], capsys)[0] == 0
    bad = tmp_path / "bad.csv"
    vals = {n: n for n in range(21)}
    vals[2] = 5
    bad.write_text("n,l\n" + "".join(f"{n},{v}\n" for n, v in vals.items()))
    assert run(["check-cd", "--input", str(bad)], capsys)[0] == 1
    assert run(["check-cd", "--group", "heis3", "--radius", "3"], capsys)[0] == 0


def test_lenfun_build_and_seq(tmp_path, capsys):
    f = tmp_path / "f.csv"
    f.write_text("r,value\n" + "".join(f"{r},{r * r}\n" for r in range(1, 11)))
    code, out = run(["lenfun-build", "--kind", "ps", "--input", str(f), "--format", "json"], capsys)
    assert code == 0 and json.loads(out)
    code, out = run(["seq", "--count", "3", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["a"][:2] == [1, 33]


def test_smallcanc_reports_failure(capsys):
    code, out = run(["smallcanc", "check", "--k-max", "6"], capsys)
    assert code == 1 and out


def test_config_errors(tmp_path, capsys):
    assert run(["growth", "--group", "sl2", "--radius", "3"], capsys)[0] == 2
    assert run(["closure", "--input", str(tmp_path / "missing.csv")], capsys)[0] == 2
    assert run(["experiment", "no-such-preset"], capsys)[0] == 2
    with pytest.raises(SystemExit) as ei:
        main(["growth", "--group", "z^1", "--radius", "0"])
    assert ei.value.code == 2


def test_budget_exit_code(capsys):
    assert run(["growth", "--group", "free:2", "--radius", "12", "--budget", "100"], capsys)[0] == 3


def test_out_file(tmp_path, capsys):
    out = tmp_path / "b.csv"
    assert run(["ball", "--group", "bs12", "--radius", "2", "--out", str(out)], capsys)[0] == 0
    assert out.read_text().startswith("key,length\n")


@pytest.mark.parametrize("argv", [
    ["experiment", "signed-sum-engine", "--seed", "5", "--format", "json"],
    ["experiment", "--preset", "closure-corpus", "--seed", "1", "--format", "json"],
    ["relgrowth", "--group", "bs12", "--subgroup", "cyclic:a", "--radius", "7"],
])
def test_reruns_are_byte_identical(argv):
    cmd = [sys.executable, "-m", "growthlab.cli", *argv]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == 0 and a.stdout and a.stdout == b.stdout
