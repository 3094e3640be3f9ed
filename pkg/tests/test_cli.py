import json

import pytest
from hypothesis import given, settings, strategies as st

from dfvsfpt.cli import main, run_solve, verify_solution
from dfvsfpt.dfvs import is_dfvs
from dfvsfpt.instance import InstanceFormatError, generate_instance, parse_instance, render_instance
from dfvsfpt.ordmc import check_ordered_separation

TRIANGLE = "p dfvs 3 3 1\n0 1\n1 2\n2 0\n"
ORDMC = "# x1 -> v -> y1\np ordmc 3 2 1\nx 0\ny 2\n0 1\n1 2\n"


def test_parse_dfvs():
    inst = parse_instance(TRIANGLE)
    assert (inst.kind, inst.n, inst.k) == ("dfvs", 3, 1)
    assert inst.edges == [(0, 1), (1, 2), (2, 0)]
    assert not inst.graph().is_acyclic()


def test_parse_ordmc_with_comments():
    inst = parse_instance("\n" + ORDMC + "\n# trailing\n")
    assert inst.xs == [0] and inst.ys == [2]
    assert render_instance(inst) == "p ordmc 3 2 1\nx 0\ny 2\n0 1\n1 2\n"


@pytest.mark.parametrize("text, line", [
    ("0 1\n", 1),
    ("p dfvs 3 1 1\n0 x\n", 2),
    ("p dfvs 3 1\n", 1),
    ("p foo 3 0 1\n", 1),
    ("p dfvs 3 0 1\np dfvs 3 0 1\n", 2),
    ("p dfvs 3 1 1\n0 1 2\n", 2),
    ("p dfvs 3 0 1\nx 0\n", 2),
    ("p ordmc 4 0 1\nx 0\nx 1\n", 3),
    ("p dfvs 3 1 1\n-1 2\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(InstanceFormatError) as exc:
        parse_instance(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


@pytest.mark.parametrize("text", [
    "p ordmc 4 3 1\nx 0\ny 3\n0 1\n1 2\n2 0\n",   # cycle
    "p dfvs 3 1 1\n0 3\n",                          # label == n
    "p ordmc 4 0 1\nx 0 1\ny 1 2\n",                # terminal overlap
    "p ordmc 4 0 1\nx 0 0\ny 2 3\n",                # duplicate terminal
    "p ordmc 4 0 1\nx 0 1\ny 2\n",                  # unequal lengths
    "p dfvs 3 2 1\n0 1\n0 1\n",                     # duplicate edge
    "p dfvs 3 2 1\n0 1\n",                          # edge count mismatch
    "p ordmc 3 0 1\nx 0\n",                         # missing y
    "",
])
def test_semantic_errors(text):
    with pytest.raises(InstanceFormatError):
        parse_instance(text)


def test_run_solve():
    report = run_solve(parse_instance(TRIANGLE))
    assert report["status"] == "solution" and len(report["solution"]) == 1
    assert report["leaf_bound_ok"] and report["stats"]["nodes"] >= 0
    inst = parse_instance(TRIANGLE)
    inst.k = 0
    assert run_solve(inst)["status"] == "no"
    assert run_solve(parse_instance(ORDMC))["solution"] == [1]


def test_main_exit_codes(tmp_path, capsys):
    path = tmp_path / "tri.txt"
    path.write_text(TRIANGLE)
    assert main(["solve", str(path)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["status"] == "solution"
    assert main(["solve", str(path), "--k", "0", "--stats"]) == 1
    captured = capsys.readouterr()
    assert json.loads(captured.out)["status"] == "no" and "nodes=" in captured.err
    bad = tmp_path / "bad.txt"
    bad.write_text("p dfvs 2 1 1\n0 5\n")
    assert main(["solve", str(bad)]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["solve", str(tmp_path / "missing.txt")]) == 2
    assert main(["frobnicate"]) == 2


def test_verify(tmp_path, capsys):
    path = tmp_path / "tri.txt"
    path.write_text(TRIANGLE)
    assert main(["verify", str(path), "0"]) == 0
    assert json.loads(capsys.readouterr().out)["valid"]
    assert main(["verify", str(path)]) == 1
    capsys.readouterr()
    ordmc = tmp_path / "o.txt"
    ordmc.write_text(ORDMC)
    assert main(["verify", str(ordmc), "0"]) == 1
    assert "terminal" in json.loads(capsys.readouterr().out)["reason"]
    assert verify_solution(parse_instance(ORDMC), [1]) == (True, "ok")
    assert not verify_solution(parse_instance(TRIANGLE), [0, 1])[0]


def test_generate_cli(tmp_path, capsys):
    args = ["generate", "--kind", "dfvs", "--n", "12", "--k", "2", "--density", "0.2", "--seed", "5", "--planted"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    out = tmp_path / "g.txt"
    assert main(args + ["-o", str(out)]) == 0
    assert out.read_text() == first
    assert main(["generate", "--kind", "dfvs", "--n", "3", "--k", "1", "--density", "2"]) == 2


def test_generate_density_zero():
    for kind in ("dfvs", "ordmc"):
        assert generate_instance(kind, 10, 0.0, 1, seed=3).edges == []


@pytest.mark.parametrize("seed", range(10))
def test_planted_instances_are_solvable(seed):
    inst = generate_instance("dfvs", 25, 0.15, 3, seed, planted=True)
    result = run_solve(inst)
    assert result["status"] == "solution" and is_dfvs(inst.graph(), result["solution"])
    inst = generate_instance("ordmc", 25, 0.3, 3, seed, planted=True, pairs=3)
    result = run_solve(inst)
    assert result["status"] == "solution"
    assert check_ordered_separation(inst.graph(), inst.terminals(), result["solution"])


@settings(max_examples=100)
@given(st.sampled_from(["dfvs", "ordmc"]), st.integers(6, 30), st.floats(0, 1), st.integers(0, 2),
       st.integers(0, 2**32), st.booleans())
def test_round_trip(kind, n, density, k, seed, planted):
    inst = generate_instance(kind, n, density, k, seed, planted=planted)
    assert parse_instance(render_instance(inst)) == inst
