import csv
import io
import json
import subprocess
import sys
import time
from fractions import Fraction as F

import pytest

from qeuler import engine
from qeuler.cli import main
from qeuler.qcalc import ArgSpec


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_proc(*argv):
    return subprocess.run(
        [sys.executable, "-m", "qeuler", *argv], capture_output=True, check=False
    )


def test_compute_examples(capsys):
    assert run(capsys, "compute", "--family", "euler_q", "--n", "1", "--r", "1", "--w", "1", "--q", "4") == (0, "-1/5\n", "")
    code, out, _ = run(capsys, "compute", "--family", "genocchi_q_poly", "--n", "0", "--r", "2", "--w", "1", "--q", "1/2")
    assert (code, out) == (0, "0\n")
    code, out, _ = run(capsys, "compute", "--family", "euler_q", "--n", "0", "--r", "2", "--w", "1", "--q", "1/3")
    assert (code, out) == (0, "1\n")


def test_compute_range_and_fractional_x(capsys):
    code, out, _ = run(capsys, "compute", "--family", "euler_q", "--n", "0:3", "--r", "1", "--q", "4")
    vals = out.split()
    assert code == 0 and vals[:2] == ["1", "-1/5"] and len(vals) == 4
    code, out, _ = run(
        capsys, "compute", "--family", "euler_q_poly", "--n", "2", "--r", "1",
        "--w", "1/3", "--u", "1/2", "--d", "2", "--s", "1",
    )
    assert code == 0
    assert F(out.strip()) == engine.euler_q_poly(2, 1, F(1, 3), ArgSpec(1, 2, F(1, 2)))


def test_compute_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "compute", "--family", "euler_hq_poly", "--n", "0:2", "--r", "2", "--h", "1",
        "--w", "1/3", "--q", "1/2", "--x", "1", "--format", "json", "--decimal", "6",
    )
    assert code == 0
    recs = json.loads(out)
    assert [r["params"]["n"] for r in recs] == [0, 1, 2]
    for rec in recs:
        p = rec["params"]
        assert rec["family"] == "euler_hq_poly"
        expect = engine.euler_hq_poly(p["n"], p["r"], p["h"], F(p["w"]), ArgSpec.integer(int(p["x"]), F(p["q"])))
        assert F(rec["value"]) == expect
        assert abs(float(rec["decimal_approx"]) - float(expect)) < 1e-6


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--family", "euler_q", "--n", "1", "--r", "1", "--q", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1
    assert rows[0]["value"] == "-1/5" and rows[0]["q"] == "4"


def test_compute_domain_error(capsys):
    code, out, err = run(capsys, "compute", "--family", "euler_q", "--n", "2", "--r", "1", "--w", "-2", "--q", "1/2")
    assert code == 2 and out == "" and "error" in err
    code, out, err = run(capsys, "compute", "--family", "euler_hq_poly", "--n", "1", "--r", "1", "--q", "1/2")
    assert code == 2 and "--h" in err
    code, _, _ = run(capsys, "compute", "--family", "euler_q", "--n", "1", "--r", "1", "--q", "half")
    assert code == 2
    code, _, _ = run(capsys, "compute", "--family", "nope", "--n", "1", "--r", "1", "--q", "2")
    assert code == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--family", "euler_q", "--n-max", "3", "--r", "1", "--w", "1", "--q", "4")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [r["n"] for r in rows] == ["0", "1", "2", "3"]
    assert [r["value"] for r in rows[:2]] == ["1", "-1/5"]


def test_table_sorted_across_families(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "genocchi_q_poly", "--family", "euler_q",
        "--n-max", "1", "--r", "2,1", "--q", "1/2", "--format", "json",
    )
    keys = [(r["family"], r["params"]["n"], r["params"]["r"]) for r in json.loads(out)]
    assert code == 0 and keys == sorted(keys) and len(keys) == 8


def test_table_empty_grid(capsys):
    code, out, _ = run(capsys, "table", "--family", "euler_q", "--n-max", "2", "--r", "1")
    assert code == 0
    assert out == "family,n,r,h,w,q,x,u,value\n"


def test_table_fail_fast(capsys):
    # w = -2 is fine at q = 4 for n = 0 but hits a pole at n >= 1 when q = 1/2
    code, out, err = run(capsys, "table", "--family", "euler_q", "--n-max", "3", "--r", "1", "--w", "-2", "--q", "4,1/2")
    assert code == 2 and out == "" and err


def test_golden(tmp_path, capsys):
    g = tmp_path / "g.txt"
    g.write_text("-1/5\n")
    args = ["compute", "--family", "euler_q", "--n", "1", "--r", "1", "--q", "4", "--golden", str(g)]
    assert run(capsys, *args)[0] == 0
    g.write_text("-1/6\n")
    assert run(capsys, *args)[0] == 1


def test_byte_stable_subprocess():
    args = ("table", "--family", "euler_hq_special", "--family", "cos_genocchi", "--n-max", "3",
            "--r", "1:2", "--h", "0,1", "--w", "1,1/3", "--q", "1/2", "--x", "0,1", "--format", "json")
    a, b = run_proc(*args), run_proc(*args)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout


def test_verify_small_all():
    start = time.perf_counter()
    proc = run_proc("verify", "all", "--grid", "small")
    assert proc.returncode == 0, proc.stdout.decode()[-2000:]
    assert time.perf_counter() - start < 60
    out = proc.stdout.decode()
    assert "resolution" in out and "r-i" in out


@pytest.mark.parametrize("suite", ["distribution", "cos_formula", "special"])
def test_verify_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", suite)
    assert code == 0 and "0 failed" in out
