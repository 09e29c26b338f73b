import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
BIN = os.environ.get("FACTORKIT_BIN", str(ROOT / "build" / "tools" / "factorkit"))
SCHEMA = json.loads((ROOT / "schema" / "report.schema.json").read_text())


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("FACTORKIT_MAX_N", None)
    full_env.update(env or {})
    return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, env=full_env)


def report(*args, env=None):
    proc = run(*args, "--json", env=env)
    assert proc.returncode == 0, proc.stderr
    data = json.loads(proc.stdout)
    jsonschema.validate(data, SCHEMA)
    return data


def graph_file(tmp_path, name, n, edges):
    path = tmp_path / name
    path.write_text(f"{n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in edges))
    return path


@pytest.fixture
def k3(tmp_path):
    return graph_file(tmp_path, "k3.txt", 3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def star(tmp_path):
    return graph_file(tmp_path, "star.txt", 4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def c4(tmp_path):
    return graph_file(tmp_path, "c4.txt", 4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def k2_2k1(tmp_path):
    return graph_file(tmp_path, "k2_2k1.txt", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def test_check_triangle_halves(k3):
    r = report("check", k3, "g=const:1", "f=const:1")
    assert r["verdict"] is True
    assert [e["numerator"] for e in r["indicator"]["entries"]] == [1, 1, 1]
    assert r["indicator"]["denominator"] == 2


def test_check_star_certificate(star):
    r = report("check", star, "g=const:1", "f=const:1")
    assert r["verdict"] is False
    assert r["certificate"] == {"S": ["0"], "T": ["1", "2", "3"], "deficiency": -2}


def test_check_zero(c4):
    r = report("check", c4, "g=const:0", "f=const:0")
    assert r["verdict"] is True
    assert r["indicator"]["entries"] == []


def test_check_prescription_file(tmp_path, k3):
    spec = tmp_path / "q.txt"
    spec.write_text("0 1\n1 1\n2 0\n")
    r = report("check", k3, f"g=file:{spec}", f"f=file:{spec}")
    assert r["verdict"] is True
    by_edge = {(e["u"], e["v"]): e["numerator"] for e in r["indicator"]["entries"]}
    assert by_edge == {("0", "1"): 2}


def test_check_all_examples(c4, tmp_path, k2_2k1):
    assert report("check-all", c4, "a=1", "b=2")["verdict"] is False
    k4 = graph_file(tmp_path, "k4.txt", 4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert report("check-all", k4, "a=1", "b=2")["verdict"] is True
    r = report("check-all", k2_2k1, "a=1", "b=2", "--oracle", "corner")
    assert r["verdict"] is False
    assert r["engine"] == "corner-oracle"
    assert r["failing_corner"] == ["0", "1"]
    box = report("check-all", k2_2k1, "g=const:1", "f=const:2", "--oracle", "box")
    assert box["verdict"] is False
    assert box["engine"] == "box-oracle"


def test_fast_path_and_enumeration_agree(tmp_path):
    out = tmp_path / "k13.txt"
    report("generate", "complete", "k=13", "-o", out)
    fast = report("check-all", out, "a=1", "b=2")
    slow = report("check-all", out, "a=1", "b=2", "--no-fast-path", "--workers", "2")
    assert fast["engine"] == "sufficient-condition"
    assert slow["engine"] == "worst-set"
    assert fast["verdict"] is slow["verdict"] is True
    analyzed = report("analyze", out, "a=1", "b=2")
    assert analyzed["verdict"] is True
    assert all(h["holds"] for h in analyzed["hypotheses"])


def test_kano_and_niessen(tmp_path):
    out = tmp_path / "k10.txt"
    report("generate", "complete", "k=10", "-o", out)
    kano = report("kano", out, "a=1", "b=2", "f=const:2")
    assert kano["verdict"] is True
    assert [h["name"] for h in kano["hypotheses"]] == ["connected", "order", "parity", "min_degree"]
    e2 = graph_file(tmp_path, "e2.txt", 2, [])
    niessen = report("niessen", e2, "g=const:1", "f=const:1")
    assert niessen["verdict"] is False
    assert niessen["certificate"]["deficiency"] == -2
    assert niessen["threshold"] == 0


def test_generate_neighborhood(tmp_path):
    out = tmp_path / "g.txt"
    r = report("generate", "neighborhood", "a=1", "b=2", "m=1", "-o", out)
    assert (r["n"], r["edges"]) == (4, 5)
    assert out.read_text().splitlines()[0] == "4 5"
    stdout = run("generate", "neighborhood", "a=1", "b=2", "m=1")
    assert stdout.returncode == 0
    assert stdout.stdout == out.read_text()


def test_generate_random_is_seeded(tmp_path):
    first = run("generate", "random", "n=9", "p=0.5", "--seed", "7").stdout
    assert first == run("generate", "random", "n=9", "p=0.5", "--seed", "7").stdout
    r = report("generate", "random", "n=9", "p=0.5", "--seed", "7", "-o", tmp_path / "r.txt")
    assert r["seed"] == 7


def test_sharpness_mindegree():
    r = report("sharpness", "mindegree", "a=1", "b=2", "r=30")
    assert r["verdict"] is False
    assert r["sharpness"]["verified"] is True
    assert r["sharpness"]["witness"] == {"S": ["0"], "T": ["31", "32"], "deficiency": -1}
    assert r["sharpness"]["min_degree"] == 2


def test_sharpness_round_trip(tmp_path):
    for family, params in [("neighborhood", ["a=2", "b=3", "m=1"]), ("mindegree", ["a=1", "b=2", "r=15"])]:
        out = tmp_path / f"{family}.txt"
        report("generate", family, *params, "-o", out)
        direct = report("sharpness", family, *params)
        reloaded = report("sharpness", family, *params, "--graph", out)
        direct.pop("timing_ms")
        reloaded.pop("timing_ms")
        assert direct == reloaded


def test_sharpness_reports_failed_clause(tmp_path):
    k4 = graph_file(tmp_path, "k4.txt", 4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    r = report("sharpness", "neighborhood", "a=1", "b=2", "m=1", "--graph", k4)
    assert r["sharpness"]["verified"] is False
    assert r["sharpness"]["failed_clause"]


@pytest.mark.parametrize(
    "args",
    [
        ["check", "missing.txt", "g=const:1", "f=const:1"],
        ["check", "{k3}", "g=const:x", "f=const:1"],
        ["check", "{k3}", "g=const:2", "f=const:1"],
        ["check", "{k3}", "g=const:1"],
        ["check-all", "{k3}", "a=1", "b=2", "--oracle", "nope"],
        ["check-all", "{k3}", "a=1", "b=2", "c=3"],
        ["check-all", "{bad}", "a=1", "b=2"],
        ["generate", "nope", "a=1"],
        ["sharpness", "mindegree", "a=2", "b=3", "r=12"],
        ["sharpness", "mindegree", "a=1", "b=3", "r=12"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_and_input_errors_exit_2(args, k3, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    proc = run(*[a.format(k3=k3, bad=bad) for a in args])
    assert proc.returncode == 2, proc.stdout + proc.stderr


def test_cutoff_exits_3_and_env_override(tmp_path):
    big = graph_file(tmp_path, "e26.txt", 26, [])
    proc = run("check-all", big, "a=1", "b=2", "--no-fast-path")
    assert proc.returncode == 3
    assert "cutoff" in proc.stderr
    assert run("check-all", big, "a=1", "b=2", "--no-fast-path", "--max-n", "26").returncode == 0
    r = report("check-all", big, "a=1", "b=2", "--no-fast-path", env={"FACTORKIT_MAX_N": "26"})
    assert r["verdict"] is False
    small = graph_file(tmp_path, "e5.txt", 5, [])
    assert run("check-all", small, "a=1", "b=2", env={"FACTORKIT_MAX_N": "4"}).returncode == 3
    assert run("niessen", big, "g=const:0", "f=const:1").returncode == 3


def test_human_output_runs(k3):
    proc = run("check", k3, "g=const:1", "f=const:1")
    assert proc.returncode == 0
    assert proc.stdout.strip()
