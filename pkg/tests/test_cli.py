import json
import os
import pathlib
import subprocess
import sys

import pytest

from abelcurves.cli import (
    CountTable,
    SOURCE_CLOSED,
    SOURCE_ORACLE,
    build_count_table,
    main,
    run_verification,
)
from abelcurves.modular import InvariantKind

SRC = str(pathlib.Path(__file__).resolve().parents[1] / "src")


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- coeff ------------------------------------------------------------------


def test_coeff_closed_form(capsys):
    code, out, err = run(capsys, "coeff", "--kind", "fls", "--genus", "5", "--nodes", "7")
    assert code == 0
    assert out == "1169520\n"
    assert err == ""


def test_coeff_oracle_source_agrees(capsys):
    for kind, g, n in (("n", 3, 2), ("fls", 4, 1), ("n12", 2, 1), ("zero23", 3, 3)):
        closed = run(capsys, "coeff", "--kind", kind, "--genus", str(g), "--nodes", str(n))
        oracle = run(
            capsys,
            "coeff", "--kind", kind, "--genus", str(g), "--nodes", str(n),
            "--source", "oracle",
        )
        assert closed[0] == oracle[0] == 0
        assert closed[1] == oracle[1]


def test_coeff_genus_one_point_count(capsys):
    code, out, _ = run(capsys, "coeff", "--kind", "n", "--genus", "1", "--nodes", "0")
    assert code == 0
    assert out == "1\n"


def test_coeff_fls_genus_one_is_domain_error(capsys):
    code, out, err = run(capsys, "coeff", "--kind", "fls", "--genus", "1", "--nodes", "3")
    assert code == 2
    assert out == ""
    assert "error:" in err


# --- series -----------------------------------------------------------------


def test_series_default_listing(capsys):
    code, out, _ = run(capsys, "series", "--kind", "n34", "--genus", "2", "--prec", "5")
    assert code == 0
    assert out == "0:0 1:1 2:6 3:12 4:28\n"


def test_series_fls_listing(capsys):
    code, out, _ = run(capsys, "series", "--kind", "fls", "--genus", "2", "--prec", "5")
    assert code == 0
    assert out == "0:0 1:1 2:12 3:36 4:112\n"


def test_series_genus_one(capsys):
    code, out, _ = run(capsys, "series", "--kind", "n", "--genus", "1", "--prec", "3")
    assert code == 0
    assert out == "0:1 1:0 2:0\n"


def test_series_csv(capsys):
    code, out, _ = run(
        capsys, "series", "--kind", "n34", "--genus", "2", "--prec", "3",
        "--format", "csv",
    )
    assert code == 0
    assert out == "exponent,coefficient\n0,0\n1,1\n2,6\n"


def test_series_json(capsys):
    code, out, _ = run(
        capsys, "series", "--kind", "fls", "--genus", "3", "--prec", "6",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data == {
        "kind": "fls",
        "genus": 3,
        "prec": 6,
        "coefficients": ["0", "0", "1", "18", "120", "500"],
    }


def test_series_bad_prec(capsys):
    code, _, err = run(capsys, "series", "--kind", "n", "--genus", "2", "--prec", "0")
    assert code == 2
    assert "error:" in err


# --- table ------------------------------------------------------------------


def test_table_csv_layout(capsys):
    code, out, _ = run(
        capsys,
        "table", "--kind", "fls", "--gmin", "2", "--gmax", "3",
        "--nmin", "0", "--nmax", "4", "--format", "csv",
    )
    assert code == 0
    assert out == (
        "g\\n,0,1,2,3,4\n"
        "2,1,12,36,112,150\n"
        "3,1,18,120,500,1620\n"
    )


def test_table_markdown_layout(capsys):
    code, out, _ = run(
        capsys,
        "table", "--kind", "fls", "--gmin", "2", "--gmax", "3",
        "--nmin", "0", "--nmax", "2",
    )
    assert code == 0
    assert out.splitlines() == [
        "| fls | n=0 | n=1 | n=2 |",
        "| --- | --- | --- | --- |",
        "| g=2 | 1 | 12 | 36 |",
        "| g=3 | 1 | 18 | 120 |",
    ]


def test_table_json_round_trip(capsys):
    code, out, _ = run(
        capsys,
        "table", "--kind", "n", "--gmin", "2", "--gmax", "5",
        "--nmin", "0", "--nmax", "7", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "n"
    assert data["g_range"] == [2, 5]
    assert data["n_range"] == [0, 7]
    assert data["source"] == "closed_form"
    assert all(isinstance(v, str) for row in data["values"] for v in row)
    parsed = CountTable.from_json(out)
    assert parsed == build_count_table(InvariantKind.N, (2, 5), (0, 7), SOURCE_CLOSED)


def test_table_oracle_source_matches_closed(capsys):
    closed = run(
        capsys,
        "table", "--kind", "n34", "--gmin", "1", "--gmax", "4",
        "--nmin", "0", "--nmax", "5", "--format", "csv",
    )
    oracle = run(
        capsys,
        "table", "--kind", "n34", "--gmin", "1", "--gmax", "4",
        "--nmin", "0", "--nmax", "5", "--format", "csv", "--source", "oracle",
    )
    assert closed[0] == oracle[0] == 0
    assert closed[1] == oracle[1]


def test_table_zero_kind_is_all_zeros(capsys):
    code, out, _ = run(
        capsys,
        "table", "--kind", "zero14", "--gmin", "1", "--gmax", "3",
        "--nmin", "0", "--nmax", "3", "--format", "csv",
    )
    assert code == 0
    for line in out.splitlines()[1:]:
        assert line.split(",")[1:] == ["0", "0", "0", "0"]


def test_table_rejects_bad_ranges(capsys):
    code, _, err = run(
        capsys,
        "table", "--kind", "fls", "--gmin", "1", "--gmax", "4",
        "--nmin", "0", "--nmax", "3",
    )
    assert code == 2 and "error:" in err
    code, _, err = run(
        capsys,
        "table", "--kind", "n", "--gmin", "4", "--gmax", "2",
        "--nmin", "0", "--nmax", "3",
    )
    assert code == 2 and "error:" in err
    code, _, err = run(
        capsys,
        "table", "--kind", "n", "--gmin", "1", "--gmax", "2",
        "--nmin", "-2", "--nmax", "3",
    )
    assert code == 2 and "error:" in err


def test_count_table_cell_accessor():
    table = build_count_table(InvariantKind.FLS, (2, 4), (0, 3), SOURCE_CLOSED)
    assert table.cell(2, 1) == 12
    assert table.cell(4, 3) == 1464
    oracle_table = build_count_table(InvariantKind.FLS, (2, 4), (0, 3), SOURCE_ORACLE)
    assert oracle_table.values == table.values
    assert oracle_table.source == "oracle"


# --- verify -----------------------------------------------------------------


def test_verify_passes(capsys):
    code, out, err = run(capsys, "verify")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert all(line.startswith("PASS ") for line in lines)
    assert err == ""


def test_verify_degenerate_bounds(capsys):
    code, out, _ = run(capsys, "verify", "--gmax", "1", "--nmax", "0", "--sigma-max", "1")
    assert code == 0
    assert all(line.startswith("PASS ") for line in out.splitlines())


def test_verify_rejects_bad_bounds(capsys):
    code, _, err = run(capsys, "verify", "--gmax", "0")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "verify", "--sigma-max", "0")
    assert code == 2 and "error:" in err


def _corrupted_tables():
    from abelcurves import golden

    rows = [list(r) for r in golden.TABLES[InvariantKind.FLS]]
    rows[1][4] += 1  # g=3, n=4: 1620 -> 1621
    corrupted = dict(golden.TABLES)
    corrupted[InvariantKind.FLS] = tuple(tuple(r) for r in rows)
    return corrupted


def test_run_verification_catches_corrupted_cell():
    results = run_verification(golden=_corrupted_tables())
    by_name = {r.name: r for r in results}
    failed = by_name["golden-fls"]
    assert not failed.passed
    assert "g=3" in failed.detail and "n=4" in failed.detail
    assert "1621" in failed.detail and "1620" in failed.detail
    assert by_name["golden-n"].passed


def test_verify_exit_one_on_corrupted_golden(capsys, monkeypatch):
    monkeypatch.setattr("abelcurves.golden.TABLES", _corrupted_tables())
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAIL golden-fls" in out


def test_run_verification_rejects_bad_bounds():
    with pytest.raises(ValueError):
        run_verification(g_max=0)
    with pytest.raises(ValueError):
        run_verification(n_max=-1)


# --- exit codes and determinism ---------------------------------------------


def test_usage_errors_exit_two(capsys):
    for argv in (
        ["coeff", "--kind", "bogus", "--genus", "2", "--nodes", "0"],
        ["coeff", "--genus", "2", "--nodes", "0"],
        ["series", "--kind", "n", "--genus", "2"],
        ["nonsense"],
        [],
    ):
        with pytest.raises(SystemExit) as excinfo:
            main(argv)
        capsys.readouterr()
        assert excinfo.value.code == 2


def test_output_is_deterministic(capsys):
    args = (
        "table", "--kind", "fls", "--gmin", "2", "--gmax", "5",
        "--nmin", "0", "--nmax", "7", "--format", "json",
    )
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second


def _run_process(*args):
    env = os.environ.copy()
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "abelcurves", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_process_coeff():
    proc = _run_process("coeff", "--kind", "fls", "--genus", "5", "--nodes", "7")
    assert proc.returncode == 0
    assert proc.stdout == "1169520\n"


def test_process_exit_codes():
    assert _run_process("verify", "--sigma-max", "50").returncode == 0
    assert _run_process("coeff", "--kind", "fls", "--genus", "1", "--nodes", "0").returncode == 2
    assert _run_process("table", "--kind", "n").returncode == 2


def test_process_determinism():
    args = ("series", "--kind", "n12", "--genus", "4", "--prec", "12", "--format", "json")
    assert _run_process(*args).stdout == _run_process(*args).stdout
