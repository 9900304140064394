import json
from pathlib import Path

import pytest

from golodavoid.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name,argv,code", [
    ("certify_xxxxyyyy_t2.json", ["certify", "xxxxyyyy", "--target", "2"], 0),
    ("certify_xyxy_t4.json", ["certify", "xyxy", "--target", "4"], 3),
    ("certify_xyzxyz_t4.json", ["certify", "xyzxyz", "--target", "4"], 1),
    ("certify_x_t2.json", ["certify", "x", "--target", "2"], 3),
    ("golod_xx_m3.txt", ["golod", "xx", "--m", "3", "--order", "10"], 0),
    ("golod_xxx_m2.txt", ["golod", "xxx", "--m", "2", "--order", "10"], 0),
    ("compare_xxx_m2.csv", ["compare", "xxx", "--m", "2", "--n-max", "10"], 0),
    ("compare_xx_m3.csv", ["compare", "xx", "--m", "3", "--n-max", "5"], 0),
    ("compare_xx_m1.csv", ["compare", "xx", "--m", "1", "--n-max", "3"], 0),
    ("lemma5_m3_mu3.json", ["lemma5", "--m", "3", "--mu", "3", "--format", "json"], 0),
    ("lemma5_m2_mu4.json", ["lemma5", "--m", "2", "--mu", "4", "--format", "json"], 0),
    ("lemma5_m4_mu2_l3.txt", ["lemma5", "--m", "4", "--mu", "2", "--lambda", "3/1"], 1),
    ("analyze_zimin4.json", ["analyze", "zimin:4", "--format", "json"], 0),
])
def test_golden(capsys, name, argv, code):
    got_code, out, err = run(capsys, *argv)
    assert got_code == code
    assert out == (GOLDEN / name).read_text()
    assert err == ""


def test_certify_json_payload(capsys):
    code, out, _ = run(capsys, "certify", "xxxxyyyy", "--target", "2")
    cert = json.loads(out)
    assert cert["verdict"] == "proved"
    assert cert["lambda"] == {"num": 97, "den": 50}
    assert list(cert) == ["pattern", "target_m", "k", "length", "threshold", "threshold_met",
                          "factor", "mu", "method", "lambda", "verified_order", "verdict",
                          "established_m", "notes", "tool_version"]


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "xyxy")
    assert code == 0
    assert "(a) 4-avoidable" in out and "2^k = 4, 3^k = 9, 4^k = 16" in out


def test_analyze_zimin_length(capsys):
    code, out, _ = run(capsys, "analyze", "zimin:4", "--format", "json")
    assert json.loads(out)["length"] == 15


@pytest.mark.parametrize("argv", [
    ["analyze", ""],
    ["analyze", "x1y"],
    ["analyze", "zimin:0"],
    ["analyze", "zimin:two"],
    ["compare", "x", "--m", "2", "--n-max", "3"],
])
def test_bad_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["certify", "xx", "--target", "5"],
    ["golod", "xx", "--m", "0"],
    ["lemma5", "--m", "3", "--mu", "3", "--lambda", "1/0"],
    ["golod", "xx", "--m", "3", "--format", "yaml"],
])
def test_argparse_rejections(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_golod_seven_letters(capsys):
    code, out, _ = run(capsys, "golod", "xx", "--m", "7", "--order", "100")
    assert code == 0
    assert "no negative coefficient through order 100" in out


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_golod_machine_formats(capsys, fmt):
    code, out, _ = run(capsys, "golod", "xx", "--m", "3", "--order", "6", "--format", fmt)
    if fmt == "json":
        doc = json.loads(out)
        assert doc["coeffs"] == [1, 3, 6, 9, 0, -54, -243]
        assert doc["first_negative"] == 5 and doc["empirical_growth"] is None
    else:
        assert out.splitlines()[:2] == ["n,coeff", "0,1"]


def test_compare_longer_table(capsys):
    code, out, _ = run(capsys, "compare", "xxx", "--m", "2", "--n-max", "10")
    for line in out.splitlines()[1:]:
        n, golod, brute, gap, applicable = line.split(",")
        if applicable == "true":
            assert int(brute) >= int(golod)


def test_compare_json(capsys):
    code, out, _ = run(capsys, "compare", "xx", "--m", "3", "--n-max", "5", "--format", "json")
    rows = json.loads(out)
    assert rows[5] == {"n": 5, "golod": -54, "brute": 30, "gap": 84, "applicable": False}


def test_compare_budget_exit(capsys):
    code, out, err = run(capsys, "compare", "xxx", "--m", "2", "--n-max", "30", "--budget", "10")
    assert code == 4 and "budget" in err


def test_lemma5_text(capsys):
    code, out, _ = run(capsys, "lemma5", "--m", "2", "--mu", "4")
    assert code == 0 and "~0.052439" in out and out.rstrip().endswith("holds")


def test_lemma5_not_applicable(capsys):
    code, out, _ = run(capsys, "lemma5", "--m", "3", "--mu", "1")
    assert code == 1 and out.startswith("not applicable")


def test_certify_text_and_exit_codes(capsys):
    assert run(capsys, "certify", "xxxx", "--target", "2", "--format", "text")[0] == 0
    assert run(capsys, "certify", "zimin:3", "--target", "4")[0] == 3


def test_env_budget(monkeypatch):
    monkeypatch.setenv("GOLOD_BUDGET", "7")
    from golodavoid.cli import build_parser
    args = build_parser().parse_args(["compare", "xx", "--m", "2", "--n-max", "2"])
    assert args.budget == 7


def test_module_entry_point_streams():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "golodavoid", "certify", "xxxx", "--target", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "cited"
    assert proc.stderr == ""
    proc = subprocess.run([sys.executable, "-m", "golodavoid", "analyze", "x-"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stdout == "" and "position 1" in proc.stderr
