from __future__ import annotations

import pytest

from palette_index.cli import cli_main
from palette_index.fileformat import parse_coloring, parse_graph, serialize_graph
from palette_index.graph import gen_complete_bipartite, gen_grid


def run_cli(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, g, name="graph.txt"):
    path = tmp_path / name
    path.write_text(serialize_graph(g))
    return str(path)


def test_gen_grid_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family", "grid", "--m", "3", "--n", "3")
    assert code == 0
    assert parse_graph(out).edge_count == 12


def test_gen_biregular_deterministic(capsys):
    args = ("gen", "--family", "biregular", "--a", "2", "--b", "4",
            "--scale", "2", "--seed", "5")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_color_grid_strategy(capsys, tmp_path):
    path = write_graph(tmp_path, gen_grid(4, 5))
    code, out, _ = run_cli(capsys, "color", "--strategy", "grid", path)
    assert code == 0
    assert "palettes=3 bound=3 theorem=grid" in out


def test_color_output_file_reverifies(capsys, tmp_path):
    gpath = write_graph(tmp_path, gen_complete_bipartite(2, 4))
    cpath = str(tmp_path / "coloring.txt")
    code, out, _ = run_cli(capsys, "color", "--strategy", "auto", gpath,
                           "--output", cpath)
    assert code == 0 and "palettes=3" in out
    code, out, _ = run_cli(capsys, "verify", gpath, cpath)
    assert code == 0 and out == ""


def test_color_stdout_stream_reparses(capsys, tmp_path):
    gpath = write_graph(tmp_path, gen_complete_bipartite(2, 4))
    code, out, _ = run_cli(capsys, "color", gpath)
    assert code == 0
    coloring, _ = parse_coloring(out)  # summary line is tolerated
    assert len(coloring.color_of) == 8


def test_exact_k23(capsys, tmp_path):
    gpath = write_graph(tmp_path, gen_complete_bipartite(2, 3))
    code, out, _ = run_cli(capsys, "exact", gpath)
    assert code == 0
    assert "palette_index=4 proved=true" in out


def test_exact_budget_exit_code(capsys, tmp_path):
    gpath = write_graph(tmp_path, gen_grid(3, 3))
    code, out, _ = run_cli(capsys, "exact", gpath, "--max-nodes", "3")
    assert code == 3
    assert "proved=false" in out


def test_verify_tampered_coloring(capsys, tmp_path):
    gpath = write_graph(tmp_path, gen_complete_bipartite(2, 3))
    code, out, _ = run_cli(capsys, "exact", gpath, "--output",
                           str(tmp_path / "w.txt"))
    assert code == 0
    text = (tmp_path / "w.txt").read_text()
    lines = text.splitlines()
    lines[1] = lines[1].rsplit(" ", 1)[0] + " " + lines[2].rsplit(" ", 1)[1]
    bad = str(tmp_path / "bad.txt")
    (tmp_path / "bad.txt").write_text("\n".join(lines) + "\n")
    code, out, _ = run_cli(capsys, "verify", gpath, bad)
    assert code == 1
    assert "violation vertex=" in out


def test_bounds_lines(capsys, tmp_path):
    gpath = write_graph(tmp_path, gen_complete_bipartite(2, 3))
    code, out, _ = run_cli(capsys, "bounds", gpath)
    assert code == 0
    lines = out.splitlines()
    assert all(line.split()[0] in ("lower", "upper") for line in lines)
    assert "lower 3 biregular-ratio" in out
    assert any(line.startswith("upper 4 ") for line in lines)


def test_classify_star(capsys, tmp_path):
    gpath = write_graph(tmp_path, gen_complete_bipartite(1, 4))
    code, out, _ = run_cli(capsys, "classify", gpath)
    assert code == 0 and out.strip() == "star"
    gpath = write_graph(tmp_path, gen_grid(2, 2), "c4.txt")
    code, out, _ = run_cli(capsys, "classify", gpath)
    assert code == 0 and out.strip() == "none"


def test_unknown_flag_exits_2(capsys):
    code, _, _ = run_cli(capsys, "gen", "--no-such-flag")
    assert code == 2


def test_malformed_input_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("p 2 1\ne 1 9\n")
    code, out, err = run_cli(capsys, "exact", str(path))
    assert code == 2
    assert "error:" in err


def test_exact_isolated_vertices_noted(capsys, tmp_path):
    path = tmp_path / "iso.txt"
    path.write_text("p 4 1\ne 1 2\n")
    code, out, err = run_cli(capsys, "exact", str(path))
    assert code == 0
    assert "palette_index=2 proved=true" in out
    assert "empty palette" in err


def test_suite_filter_runs_only_matching(capsys):
    code, out, _ = run_cli(capsys, "suite", "--filter", "kab-exact")
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith("case")]
    assert lines and all("kab-exact" in line for line in lines)


def test_suite_empty_filter_passes(capsys):
    code, out, _ = run_cli(capsys, "suite", "--filter", "no-such-case")
    assert code == 0
    assert out.strip() == "suite status=pass passed=0/0"
