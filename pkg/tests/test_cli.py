from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from lemnisc import report as rp
from lemnisc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and "FAIL" not in out


def test_empty_range(capsys):
    code, out, _ = run(capsys, "scan", "--lmin", "10", "--lmax", "12", "--no-meta")
    assert code == 0
    assert out.strip().splitlines() == [",".join(rp.COLUMNS)]


def test_scan_csv_small(capsys):
    code, out, err = run(capsys, "scan", "--lmin", "5", "--lmax", "120", "--prec", "128", "--no-meta")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["ell"]) for r in rows] == [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113]
    by = {int(r["ell"]): r for r in rows}
    assert by[13]["a_lambda"] == "1" and by[89]["vanishing"] == "1" and by[89]["a_lambda"] == "0"
    assert by[37]["a_lambda"] == "" and "family_covered=0" in by[37]["checks"]
    s = json.loads(err.strip().splitlines()[-1])
    assert s["schema_version"] == rp.SCHEMA_VERSION and s["vanishing_1mod8"] == [89, 113]


def test_scan_deterministic(capsys):
    args = ("scan", "--lmin", "5", "--lmax", "60", "--prec", "128", "--no-meta")
    a = run(capsys, *args)[1]
    b = run(capsys, *args)[1]
    c = run(capsys, *args, "--jobs", "2")[1]
    assert a == b == c


def test_scan_meta_header(capsys):
    code, out, _ = run(capsys, "scan", "--lmin", "5", "--lmax", "14", "--prec", "128")
    head = out.splitlines()[0]
    assert head.startswith("# ") and json.loads(head[2:])["schema_version"] == rp.SCHEMA_VERSION


def test_scan_json(capsys, tmp_path):
    path = tmp_path / "s.json"
    code, _, _ = run(capsys, "scan", "--lmin", "5", "--lmax", "30", "--prec", "128", "--format", "json",
                     "--out", str(path))
    data = json.loads(path.read_text())
    assert code == 0 and data["schema_version"] == rp.SCHEMA_VERSION
    assert [r["ell"] for r in data["rows"]] == [5, 13, 17, 29]
    assert "meta" in data


def test_scan_class_filter(capsys):
    code, out, _ = run(capsys, "scan", "--lmin", "5", "--lmax", "200", "--class", "5mod8", "--prec", "128",
                       "--no-meta")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and all(int(r["ell"]) % 8 == 5 for r in rows)
    odd = [int(r["a_lambda"]) % 2 for r in rows if int(r["ell"]) % 16 == 13]
    assert odd and all(odd)


def test_scan_budget(capsys):
    code, _, err = run(capsys, "scan", "--lmin", "5", "--lmax", "300000")
    assert code == 1 and "budget" in err


def test_prec_env(monkeypatch):
    monkeypatch.setenv("LEMNISC_PREC_DEFAULT", "160")
    assert rp.default_prec() == 160


def test_egs_thirteen(capsys):
    code, out, _ = run(capsys, "egs", "--ell", "13", "--prec", "128")
    assert code == 0 and "numeric 1, l-adic 1, congruence 1 -> agree" in out


def test_egs_seventeen(capsys):
    code, out, _ = run(capsys, "egs", "--ell", "17", "--prec", "128")
    assert code == 0 and "-> agree" in out and "L(1) routes agree" in out


def test_egs_rejects_seven(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["egs", "--ell", "7"])
    assert exc.value.code == 2


def test_kummer_vanishing(capsys):
    code, out, _ = run(capsys, "kummer", "--ell", "89", "--amax", "10", "--b", "0")
    assert code == 0 and "FAIL" not in out
    assert out.count("pass") == 22 + 4


def test_kummer_non_vanishing(capsys):
    code, out, _ = run(capsys, "kummer", "--ell", "17", "--amax", "1")
    assert code == 0 and "vanishing=False" in out


def test_hurwitz(capsys):
    code, out, _ = run(capsys, "hurwitz", "--pmax", "300")
    assert code == 0 and "FAIL" not in out and out.count("pass") == 60


def test_curve_fixture(capsys):
    code, out, _ = run(capsys, "curve")
    assert code == 0 and "FAIL" not in out


def test_curve_fixture_file(capsys, tmp_path):
    from importlib import resources
    src = resources.files("lemnisc").joinpath("data/example_4817.json").read_text()
    broken = json.loads(src)
    broken["lambda"] = [41, 57]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(broken))
    code, out, _ = run(capsys, "curve", "--fixture", str(p))
    assert code == 2 and "FAIL" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "lemnisc", "selftest"], capture_output=True, text=True)
    assert r.returncode == 0 and "report: pass" in r.stdout
