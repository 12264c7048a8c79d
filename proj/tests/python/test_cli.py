import csv
import json
import os
import subprocess

import pytest

CLI = os.environ.get("MONOCURVE_CLI", "monocurve")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def test_analyze_json():
    p = run("analyze", "3,4,5", "--json")
    assert p.returncode == 0
    r = json.loads(p.stdout)
    assert r == {
        "generators": [3, 4, 5], "c": 2, "d": 2, "e": 3, "bound": 3,
        "class": "ACI", "cm": True, "theorem_ok": True, "extremal": True,
        "koszul": "certified",
    }


def test_analyze_fixture():
    p = run("analyze", "11,13,14,15,19", "--json")
    assert p.returncode == 0
    r = json.loads(p.stdout)
    assert (r["e"], r["bound"], r["class"], r["extremal"]) == (11, 12, "ACI", False)


def test_analyze_betti_and_consequences():
    p = run("analyze", "3,4,5", "--json", "--betti", "--consequences")
    assert p.returncode == 0
    r = json.loads(p.stdout)
    assert r["betti_totals"] == [1, 3, 2]
    assert r["consequences"]["all_pass"]


def test_analyze_input_errors():
    assert run("analyze", "4,6").returncode == 2
    assert run("analyze", "2,3").returncode == 2
    assert run("analyze", "pear").returncode == 2


def test_effort_cap_exit():
    assert run("analyze", "7,9,11,13", "--max-pairs", "2").returncode == 3
    env = dict(os.environ, MONOCURVE_MAX_PAIRS="2")
    p = subprocess.run([CLI, "analyze", "7,9,11,13"], capture_output=True,
                       text=True, env=env)
    assert p.returncode == 3


def test_family():
    p = run("family", "--c", "4", "--d", "2")
    assert p.returncode == 0
    assert p.stdout.strip() == "<12,13,14,15,18>"
    p = run("family", "--c", "2", "--d", "2", "--check")
    assert p.returncode == 0
    assert p.stdout.splitlines()[0] == "<3,4,5>"
    assert json.loads("".join(p.stdout.splitlines()[1:]))["all_pass"]
    assert run("family", "--c", "1", "--d", "2").returncode == 2


def test_lemma():
    p = run("lemma", "--c", "3", "--d", "3")
    assert p.returncode == 0
    lines = p.stdout.splitlines()
    assert "min product 6" in lines[0] and "{1,2,3}" in lines[0]
    assert "min product 9" in lines[1]
    p = run("lemma", "--c", "5", "--d", "2")
    assert "min product 8" in p.stdout and "{1,1,2,2,2}" in p.stdout


def test_betti():
    p = run("betti", "x1^2,x1*x2,x2^2", "--vars", "3")
    assert p.returncode == 0
    assert json.loads(p.stdout)["totals"] == [1, 3, 2]
    p = run("betti", "x1^2,x1*x2,x2^2,x3^2", "--vars", "4")
    assert json.loads(p.stdout)["totals"] == [1, 4, 5, 2]
    p = run("betti", "x1^2", "--vars", "2")
    assert json.loads(p.stdout)["totals"] == [1, 1]
    assert run("betti", "x)", "--vars", "2").returncode == 2


def survey_rows(path):
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def test_survey_plane_curves(tmp_path):
    out = tmp_path / "s.csv"
    p = run("survey", "--embdim", "2", "--max-gen", "10", "--out", str(out))
    assert p.returncode == 0
    rows = survey_rows(out)
    assert rows and all(r["class"] == "CI" for r in rows)
    assert all(r["bound"] == "" for r in rows)
    assert "theorem violations   0" in p.stdout


def test_survey_finds_extremal(tmp_path):
    out = tmp_path / "s.csv"
    p = run("survey", "--embdim", "3", "--max-gen", "12", "--out", str(out))
    assert p.returncode == 0
    rows = {r["generators"]: r for r in survey_rows(out)}
    r = rows["<3,4,5>"]
    assert (r["e"], r["bound"], r["class"], r["extremal"]) == ("3", "3", "ACI", "true")


def test_survey_resume_byte_identical(tmp_path):
    out, cache = tmp_path / "s.csv", tmp_path / "c.jsonl"
    args = ("survey", "--embdim", "3", "--max-gen", "11",
            "--out", str(out), "--cache", str(cache))
    assert run(*args).returncode == 0
    first_csv = out.read_bytes()
    first_cache = cache.read_bytes()
    p = run(*args)
    assert p.returncode == 0
    assert out.read_bytes() == first_csv
    assert cache.read_bytes() == first_cache
    assert "from cache" in p.stdout


def test_survey_jobs_deterministic(tmp_path):
    def rows_without_timing(path):
        return [{k: v for k, v in r.items() if k != "elapsed_ms"}
                for r in survey_rows(path)]

    one, four = tmp_path / "one.csv", tmp_path / "four.csv"
    assert run("survey", "--embdim", "3..4", "--max-gen", "12",
               "--out", str(one), "--jobs", "1").returncode == 0
    assert run("survey", "--embdim", "3..4", "--max-gen", "12",
               "--out", str(four), "--jobs", "4").returncode == 0
    assert rows_without_timing(one) == rows_without_timing(four)


def test_survey_records_caps(tmp_path):
    out, cache = tmp_path / "s.csv", tmp_path / "c.jsonl"
    p = run("survey", "--embdim", "4", "--max-gen", "9", "--out", str(out),
            "--cache", str(cache), "--max-pairs", "2")
    assert p.returncode == 0
    rows = survey_rows(out)
    assert rows and all(r["class"] == "cap" and r["e"] == "" for r in rows)
    assert cache.read_text() == ""  # capped rows are recomputable, never cached
