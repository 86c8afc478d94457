from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

import lexsearch as lx
from lexsearch.cli import main

from conftest import GRID_EDGE_LIST_TEXT, GRID_GOLDEN_ORDERINGS, SearchKind


@pytest.fixture
def grid_file(tmp_path):
    path = tmp_path / "grid.edges"
    path.write_text(GRID_EDGE_LIST_TEXT)
    return str(path)


def run_cli(args, stdin_text=None, monkeypatch=None, capsys=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_order_lexbfs_grid(grid_file, monkeypatch, capsys):
    code, out, err = run_cli(
        ["order", "--search", "lexbfs", "--input", grid_file],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 0 and out.strip() == "1 2 3 4 5 6 7 8 9"


def test_order_reads_stdin(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["order", "--search", "lexbfs"],
        stdin_text="1 2\n", monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 0 and out.strip() == "1 2"


def test_order_reference_trace_matches_golden_table(grid_file, monkeypatch, capsys):
    code, out, _ = run_cli(
        ["order", "--search", "lexdfs", "--engine", "reference", "--trace",
         "--input", grid_file],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[:9] == [
        "step 1: vertex 1 label [inf]",
        "step 2: vertex 2 label [1]",
        "step 3: vertex 4 label [2]",
        "step 4: vertex 3 label [3,1]",
        "step 5: vertex 6 label [4]",
        "step 6: vertex 8 label [5,3]",
        "step 7: vertex 9 label [6]",
        "step 8: vertex 7 label [7,3]",
        "step 9: vertex 5 label [8,2]",
    ]
    assert lines[9] == "1 2 4 3 6 8 9 7 5"


def test_order_fast_engines_check_and_json(grid_file, monkeypatch, capsys):
    for search in ("lexbfs", "lexup", "lexdfs", "lexdown"):
        code, out, err = run_cli(
            ["order", "--search", search, "--input", grid_file,
             "--engine", "fast", "--check", "--json"],
            capsys=capsys, monkeypatch=monkeypatch,
        )
        assert code == 0, (search, err)
        payload = json.loads(out)
        assert set(payload) == {"order", "counters"}
        assert sorted(payload["order"]) == list(range(1, 10))
        assert set(payload["counters"]) == {
            "node_moves", "comparisons", "sort_elements"
        }


def test_order_deterministic_output(grid_file, monkeypatch, capsys):
    outputs = set()
    for _ in range(3):
        _, out, _ = run_cli(
            ["order", "--search", "lexup", "--input", grid_file],
            capsys=capsys, monkeypatch=monkeypatch,
        )
        outputs.add(out)
    assert outputs == {"1 2 4 7 9 8 6 5 3\n"}


def test_order_trace_with_json(grid_file, monkeypatch, capsys):
    code, out, _ = run_cli(
        ["order", "--search", "lexbfs", "--input", grid_file,
         "--trace", "--json"],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == list(range(1, 10))
    assert payload["trace"][3] == "step 4: vertex 4 label [7,6]"


def test_order_source_override(grid_file, monkeypatch, capsys):
    code, out, _ = run_cli(
        ["order", "--search", "lexbfs", "--input", grid_file, "--source", "9"],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 0 and out.split()[0] == "9"


def test_order_parse_error_exit_2(monkeypatch, capsys):
    code, _, err = run_cli(
        ["order", "--search", "lexbfs"],
        stdin_text="1 x\n", monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 2 and "malformed" in err


def test_order_disconnected_exit_3_and_extension(monkeypatch, capsys):
    text = "n 4\n1 2\n3 4\n"
    code, _, err = run_cli(
        ["order", "--search", "lexdfs"],
        stdin_text=text, monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 3 and "disconnected" in err
    code, out, _ = run_cli(
        ["order", "--search", "lexdfs", "--allow-disconnected", "--check"],
        stdin_text=text, monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 0 and out.strip() == "1 2 3 4"


def test_verify_golden_orderings(grid_file, tmp_path, monkeypatch, capsys):
    for search, kind in (
        ("lexup", SearchKind.LEXUP),
        ("lexdfs", SearchKind.LEXDFS),
    ):
        ordering = tmp_path / f"{search}.order"
        ordering.write_text(" ".join(map(str, GRID_GOLDEN_ORDERINGS[kind])))
        code, out, _ = run_cli(
            ["verify", "--search", search, "--input", grid_file,
             "--ordering", str(ordering)],
            capsys=capsys, monkeypatch=monkeypatch,
        )
        assert code == 0 and out.strip() == "valid"


def test_verify_invalid_ordering_exit_1(grid_file, tmp_path, monkeypatch, capsys):
    ordering = tmp_path / "identity.order"
    ordering.write_text("1 2 3 4 5 6 7 8 9")
    code, _, err = run_cli(
        ["verify", "--search", "lexdfs", "--input", grid_file,
         "--ordering", str(ordering)],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 1 and "step 3" in err


def test_verify_short_ordering_not_a_permutation(grid_file, tmp_path, monkeypatch, capsys):
    ordering = tmp_path / "short.order"
    ordering.write_text("1 2 3 4 5 6 7 8")
    code, _, err = run_cli(
        ["verify", "--search", "lexbfs", "--input", grid_file,
         "--ordering", str(ordering)],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 1 and "not a permutation" in err


def test_verify_malformed_ordering_exit_2(grid_file, tmp_path, monkeypatch, capsys):
    ordering = tmp_path / "bad.order"
    ordering.write_text("1 2 three")
    code, _, err = run_cli(
        ["verify", "--search", "lexbfs", "--input", grid_file,
         "--ordering", str(ordering)],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 2 and "malformed" in err


def test_enumerate_triangle(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["enumerate", "--search", "lexbfs"],
        stdin_text="1 2\n2 3\n1 3\n", monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 0
    assert out.strip().splitlines() == ["1 2 3", "1 3 2", "count 2"]


def test_enumerate_grid_lexdown_prefix(grid_file, monkeypatch, capsys):
    code, out, _ = run_cli(
        ["enumerate", "--search", "lexdown", "--input", grid_file,
         "--prefix", "1 2"],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 0
    assert out.strip().splitlines() == ["1 2 3 5 4 6 7 8 9", "count 1"]


def test_enumerate_single_vertex(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["enumerate", "--search", "lexup"],
        stdin_text="n 1\n", monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 0 and out.strip().splitlines() == ["1", "count 1"]


def test_enumerate_refuses_large_without_force(monkeypatch, capsys):
    text = "\n".join(f"{i} {i+1}" for i in range(1, 13))
    code, _, err = run_cli(
        ["enumerate", "--search", "lexbfs"],
        stdin_text=text, monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 2 and "--force" in err
    code, out, _ = run_cli(
        ["enumerate", "--search", "lexbfs", "--force"],
        stdin_text=text, monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 0 and out.strip().splitlines()[-1] == "count 1"


def test_enumerate_bad_prefix_exit_2(grid_file, monkeypatch, capsys):
    code, _, err = run_cli(
        ["enumerate", "--search", "lexdfs", "--input", grid_file,
         "--prefix", "1 2 3"],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 2 and "prefix position 3" in err


def test_generate_and_pipe_back(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["generate", "--family", "grid", "--rows", "3", "--cols", "3"],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 0
    g = lx.parse_edge_list(out)
    assert (g.n, g.m) == (9, 12)
    code, out2, _ = run_cli(
        ["order", "--search", "lexbfs", "--check"],
        stdin_text=out, monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 0 and len(out2.split()) == 9


def test_generate_random_deterministic(monkeypatch, capsys):
    args = ["generate", "--family", "random", "--n", "30", "--p", "0.2",
            "--seed", "5"]
    _, out1, _ = run_cli(args, capsys=capsys, monkeypatch=monkeypatch)
    _, out2, _ = run_cli(args, capsys=capsys, monkeypatch=monkeypatch)
    assert out1 == out2
    assert lx.is_connected(lx.parse_edge_list(out1))


def test_generate_missing_params_exit_2(monkeypatch, capsys):
    code, _, err = run_cli(
        ["generate", "--family", "grid", "--rows", "3"],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 2 and "--cols" in err


def test_dimacs_input(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["order", "--search", "lexbfs", "--format", "dimacs"],
        stdin_text="p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n",
        monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 0 and out.strip() == "1 2 3"
    code, _, err = run_cli(
        ["order", "--search", "lexbfs", "--format", "dimacs"],
        stdin_text="p edge 2 2\ne 1 2\ne 2 1\n",
        monkeypatch=monkeypatch, capsys=capsys,
    )
    assert code == 2 and "declared m=2" in err


def test_bench_small_run(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["bench", "--search", "lexup", "--family", "path",
         "--sizes", "50,100", "--engine", "fast"],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 0
    report = json.loads(out)
    assert report["engine"] == "fast" and len(report["results"]) == 2
    assert report["ratio_spread"] is not None
    for row in report["results"]:
        assert set(row["counters"]) == {"node_moves", "comparisons", "sort_elements"}


def test_bench_bad_sizes_exit_2(monkeypatch, capsys):
    code, _, err = run_cli(
        ["bench", "--search", "lexup", "--family", "path", "--sizes", "ten"],
        capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 2


def test_installed_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "lexsearch", "order", "--search", "lexdown"],
        input="1 2\n2 3\n", capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 2 3"
