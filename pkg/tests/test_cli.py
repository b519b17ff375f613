import json
import xml.dom.minidom

import pytest

from jmokit import cli


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_pins_solve_contest(capsys):
    code, out = run_cli(capsys, "pins", "solve", "--doubled-area", "4042", "--json")
    assert code == 0
    env = json.loads(out)
    assert env["cost"] == 128
    assert env["status"] == "certified_optimal"
    assert env["lower_bound"] == 128


def test_pins_oracle(capsys):
    code, out = run_cli(capsys, "pins", "oracle", "--doubled-area", "2", "--radius", "3", "--json")
    assert code == 0
    assert json.loads(out)["cost"] == 3


def test_gcdset_check_failure_exits_one(capsys):
    code, out = run_cli(capsys, "gcdset", "check", "--elements", "2", "--json")
    assert code == 1
    env = json.loads(out)
    assert env["verdict"] is False
    assert env["witness_failure"] == [2, 1, 0]


def test_gcdset_check_success(capsys):
    code, out = run_cli(capsys, "gcdset", "check", "--elements", "6,14,15,35", "--json")
    assert code == 0
    env = json.loads(out)
    assert env["verdict"] is True
    assert env["prime_count"] == 2


def test_gcdset_construct(capsys):
    code, out = run_cli(capsys, "gcdset", "construct", "--k", "2",
                        "--p", "2,3", "--q", "5,7", "--json")
    assert code == 0
    assert json.loads(out)["elements"] == [6, 14, 15, 35]


def test_gcdset_search_empty_is_success(capsys):
    code, out = run_cli(capsys, "gcdset", "search", "--size", "3", "--max", "100", "--json")
    assert code == 0
    env = json.loads(out)
    assert env["count"] == 0 and env["sets"] == []


def test_gcdset_search_budget_exhaustion_is_usage_error(capsys):
    code, _ = run_cli(capsys, "gcdset", "search", "--size", "2", "--max", "100",
                      "--budget", "3")
    assert code == 2


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["nonsense"])
    assert exc.value.code == 2


def test_missing_file_exits_two(capsys):
    code, _ = run_cli(capsys, "pack", "validate", "--input", "/nonexistent/file.txt")
    assert code == 2


def test_malformed_packing_exits_two(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a rational\n")
    code, _ = run_cli(capsys, "pack", "validate", "--input", str(bad))
    assert code == 2


def test_pack_build_validate_roundtrip(capsys, tmp_path):
    out = tmp_path / "packing.txt"
    code, _ = run_cli(capsys, "pack", "build", "--side", "6", "--out", str(out))
    assert code == 0
    code, text = run_cli(capsys, "pack", "validate", "--input", str(out), "--json")
    assert code == 0
    env = json.loads(text)
    assert env["report"]["valid"] is True
    assert env["report"]["count"] == 15


def test_pack_render(capsys, tmp_path):
    packing = tmp_path / "p.txt"
    svg = tmp_path / "p.svg"
    run_cli(capsys, "pack", "build", "--side", "5", "--out", str(packing))
    code, _ = run_cli(capsys, "pack", "render", "--input", str(packing), "--svg", str(svg))
    assert code == 0
    doc = xml.dom.minidom.parse(str(svg))
    polygons = doc.getElementsByTagName("polygon")
    # Delta plus one triangle and one hexagon per anchor
    count = json.loads(run_cli(capsys, "pack", "validate", "--input", str(packing), "--json")[1])
    assert len(polygons) == 1 + 2 * count["report"]["count"]


def test_pack_render_empty_packing(capsys, tmp_path):
    packing = tmp_path / "empty.txt"
    packing.write_text("8\n")
    svg = tmp_path / "empty.svg"
    code, _ = run_cli(capsys, "pack", "render", "--input", str(packing), "--svg", str(svg))
    assert code == 0
    doc = xml.dom.minidom.parse(str(svg))
    assert len(doc.getElementsByTagName("polygon")) == 1  # Delta only


def test_cyclic_solve_and_verify_roundtrip(capsys, tmp_path):
    entries = tmp_path / "solution.txt"
    code, out = run_cli(capsys, "cyclic", "solve", "--n", "4", "--seed", "7",
                        "--out", str(entries), "--json")
    assert code == 0
    env = json.loads(out)
    assert env["converged"] is True
    assert env["entries"][0] == pytest.approx(1.0, abs=1e-7)
    assert env["entries"][1] == pytest.approx(2.0, abs=1e-7)
    code, out = run_cli(capsys, "cyclic", "verify", "--input", str(entries), "--json")
    assert code == 0
    env = json.loads(out)
    assert env["residual_max_abs"] <= 1e-8
    assert env["minmax"]["ok"] is True


def test_cyclic_verify_rejects_non_solution(capsys, tmp_path):
    entries = tmp_path / "bad.txt"
    entries.write_text("\n".join(["1.0"] * 8) + "\n")
    code, out = run_cli(capsys, "cyclic", "verify", "--input", str(entries), "--json")
    assert code == 1
    assert json.loads(out)["residual_max_abs"] == 1.0


def test_funceq_check_constant_table(capsys, tmp_path):
    table = tmp_path / "table.txt"
    table.write_text("".join(f"{n} 1\n" for n in range(1, 101)))
    code, out = run_cli(capsys, "funceq", "check", "--input", str(table), "--json")
    assert code == 0
    assert json.loads(out)["violation_count"] == 0


def test_funceq_check_mutated_table(capsys, tmp_path):
    lines = {n: 1 for n in range(1, 11)}
    lines[5] = 2
    table = tmp_path / "table.txt"
    table.write_text("".join(f"{n} {v}\n" for n, v in lines.items()))
    code, out = run_cli(capsys, "funceq", "check", "--input", str(table), "--json")
    assert code == 1
    env = json.loads(out)
    assert env["violation_count"] >= 1
    assert env["violations"][0]["kind"] == "sum_rule"


def test_funceq_trace(capsys):
    code, out = run_cli(capsys, "funceq", "trace", "--limit", "50", "--json")
    assert code == 0
    env = json.loads(out)
    assert env["steps"] == 50
    assert env["replay_ok"] is True


def test_rect_batch_passes(capsys):
    code, out = run_cli(capsys, "rect", "batch", "--count", "5", "--seed", "1", "--json")
    assert code == 0
    assert json.loads(out)["all_pass"] is True


def test_rect_batch_perturbed_fails(capsys):
    code, out = run_cli(capsys, "rect", "batch", "--count", "5", "--seed", "1",
                        "--perturb", "1.05", "--json")
    assert code == 1
    env = json.loads(out)
    assert env["all_pass"] is False
    assert all(r["line_defect_rel"] > 1e-4 for r in env["rows"])


def test_rect_render(capsys, tmp_path):
    svg = tmp_path / "rect.svg"
    code, _ = run_cli(capsys, "rect", "render", "--seed", "3", "--svg", str(svg))
    assert code == 0
    doc = xml.dom.minidom.parse(str(svg))
    assert len(doc.getElementsByTagName("circle")) >= 4  # 3 circles + point P
    assert len(doc.getElementsByTagName("line")) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ("pins", "solve", "--doubled-area", "4042", "--json"),
        ("gcdset", "search", "--size", "2", "--max", "30", "--json"),
        ("cyclic", "solve", "--n", "6", "--seed", "3", "--json"),
        ("pack", "build", "--side", "8", "--json"),
        ("rect", "batch", "--count", "10", "--seed", "42", "--json"),
        ("funceq", "trace", "--limit", "100", "--json"),
    ],
)
def test_json_output_is_deterministic(capsys, argv):
    first = run_cli(capsys, *argv)
    second = run_cli(capsys, *argv)
    assert first == second
    env = json.loads(first[1])
    for key in ("tool", "version", "subcommand", "inputs", "timings"):
        assert key in env
    assert env["timings"] is None
