"""CLI subcommands, exit codes, and document output, driven through main(argv)."""

import json
import subprocess
import sys

import pytest

from ipkit.certificates import comparable_form, load_document
from ipkit.cli import main, parse_sequence_source
from ipkit.errors import InputError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_sequence_sources(tmp_path):
    assert parse_sequence_source("nat:5") == (1, 2, 3, 4, 5)
    assert parse_sequence_source("pow:2:4") == (2, 4, 8, 16)
    assert parse_sequence_source("fib:1") == (1,)
    assert parse_sequence_source("fib:6") == (1, 1, 2, 3, 5, 8)
    path = tmp_path / "seq.txt"
    path.write_text("# sample\n3\n1\n4\n")
    assert parse_sequence_source(f"file:{path}") == (3, 1, 4)
    for bad in ("nat:0", "nat:x", "pow:0:3", "moon:9", "file:", "fib:"):
        with pytest.raises(InputError):
            parse_sequence_source(bad)


def test_fs_fp_output(capsys):
    code, out, _ = run(capsys, "fs", "--seq", "nat:3")
    assert code == 0
    assert "FS (6 values): 1 2 3 4 5 6" in out
    code, out, _ = run(capsys, "fp", "--seq", "nat:3")
    assert code == 0
    assert "FP (4 values): 1 2 3 6" in out


def test_search_found_exit_zero(capsys, tmp_path):
    path = tmp_path / "c.json"
    code, out, _ = run(
        capsys, "search", "--seq", "nat:64", "--spec", "mod(6,0)",
        "--depth", "3", "--window", "64", "--json", str(path),
    )
    assert code == 0
    assert "outcome: found" in out
    assert "H1 = {1,2,3}  y1 = 6" in out
    assert "verified: true" in out
    assert path.exists()


def test_search_exhausted_exit_one(capsys):
    code, out, _ = run(capsys, "search", "--seq", "nat:8", "--spec", "none", "--depth", "1")
    assert code == 1
    assert "outcome: exhausted" in out


def test_search_node_limit_exit_three(capsys):
    code, out, _ = run(
        capsys, "search", "--seq", "nat:20", "--spec", "mod(1000,999)",
        "--depth", "3", "--node-limit", "5",
    )
    assert code == 3
    assert "outcome: node-limit" in out
    assert "nothing is claimed" in out


def test_search_bad_spec_exit_two(capsys):
    code, _, err = run(capsys, "search", "--seq", "nat:8", "--spec", "mod(6,", "--depth", "1")
    assert code == 2
    assert err.startswith("error:")


def test_search_verbose_echoes_budget(capsys):
    code, out, _ = run(
        capsys, "search", "--seq", "nat:8", "--spec", "all", "--depth", "1", "--verbose"
    )
    assert code == 0
    assert "budget: depth 1, window 8" in out


def test_search_verify_round_trip(capsys, tmp_path):
    path = tmp_path / "cert.json"
    code, _, _ = run(
        capsys, "search", "--seq", "nat:32", "--spec", "mod(6,0)",
        "--depth", "2", "--json", str(path),
    )
    assert code == 0
    code, out, _ = run(capsys, "verify", "--cert", str(path))
    assert code == 0
    assert "certificate verifies" in out


def test_verify_tampered_exit_one(capsys, tmp_path):
    path = tmp_path / "cert.json"
    run(capsys, "search", "--seq", "nat:32", "--spec", "mod(6,0)", "--depth", "2",
        "--json", str(path))
    doc = json.loads(path.read_text())
    doc["ys"] = ["6", "7"]
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--cert", str(path))
    assert code == 1
    assert "does not verify" in out


def test_verify_membership_tamper_prints_element(capsys, tmp_path):
    path = tmp_path / "cert.json"
    run(capsys, "search", "--seq", "nat:32", "--spec", "mod(6,0)", "--depth", "2",
        "--json", str(path))
    doc = json.loads(path.read_text())
    doc["spec"] = "mod(12,0)"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--cert", str(path))
    assert code == 1
    assert "element 6" in out


def test_verify_missing_file_exit_two(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--cert", str(tmp_path / "absent.json"))
    assert code == 2
    assert "error:" in err


def test_refute_found_and_absent(capsys, tmp_path):
    code, out, _ = run(capsys, "refute", "--spec", "mod(6,0)", "--depth", "3", "--bound", "10")
    assert code == 0
    assert "refutation witness: 1 2 7" in out
    path = tmp_path / "ref.json"
    code, out, _ = run(
        capsys, "refute", "--spec", "mod(6,0)", "--depth", "6", "--bound", "60",
        "--json", str(path),
    )
    assert code == 1
    assert "no refutation within (k=6, N=60)" in out
    doc = load_document(path)
    assert doc["kind"] == "ip-refutation"
    assert doc["outcome"] == "none"


def test_hindman_round_trip(capsys, tmp_path):
    coloring = tmp_path / "col.txt"
    coloring.write_text("".join(f"{v} 0\n" for v in range(1, 6)))
    out_path = tmp_path / "h.json"
    code, out, _ = run(
        capsys, "hindman", "--coloring", str(coloring), "--depth", "2",
        "--json", str(out_path),
    )
    assert code == 0
    assert "monochromatic witness (color 0): 1 2" in out
    assert load_document(out_path)["outcome"] == "found"

    parity = tmp_path / "parity.txt"
    parity.write_text("".join(f"{v} {v % 2}\n" for v in range(1, 5)))
    code, out, _ = run(capsys, "hindman", "--coloring", str(parity), "--depth", "2")
    assert code == 1
    assert "no monochromatic witness" in out


def test_hindman_bad_coloring_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 0\n3 0\n")
    code, _, err = run(capsys, "hindman", "--coloring", str(bad), "--depth", "2")
    assert code == 2
    assert "missing" in err


def test_semigroup_reports(capsys, tmp_path):
    table = tmp_path / "t.txt"
    table.write_text("2\n0 0\n1 1\n")  # left zero
    code, out, _ = run(capsys, "semigroup", "--table", str(table))
    assert code == 0
    assert "order: 2" in out and "idempotents: 0 1" in out

    json_path = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "semigroup", "--table", str(table), "--report", "full",
        "--json", str(json_path),
    )
    assert code == 0
    assert "minimal left ideals: {0,1}" in out
    assert "minimal right ideals: {0} {1}" in out
    assert "kernel K: {0,1}" in out
    assert "all groups: true" in out
    doc = load_document(json_path)
    assert doc["kind"] == "semigroup-report"
    assert doc["kernel"] == [0, 1]
    assert doc["group_check"]["all_groups"] is True
    assert doc["product_formula"]["all_agree"] is True


def test_semigroup_non_associative_exit_two(capsys, tmp_path):
    table = tmp_path / "bad.txt"
    table.write_text("2\n1 0\n0 0\n")
    code, _, err = run(capsys, "semigroup", "--table", str(table), "--report", "full")
    assert code == 2
    assert "not associative at triple (0,0,1)" in err


def test_semigroup_order_cap_env_and_flag(capsys, tmp_path, monkeypatch):
    table = tmp_path / "z5.txt"
    table.write_text("5\n" + "\n".join(" ".join(str((a + b) % 5) for b in range(5)) for a in range(5)) + "\n")
    monkeypatch.setenv("IPKIT_ORDER_CAP", "4")
    code, _, err = run(capsys, "semigroup", "--table", str(table), "--report", "full")
    assert code == 2
    assert "refused at order 5" in err
    # explicit flag beats the environment
    code, out, _ = run(
        capsys, "semigroup", "--table", str(table), "--report", "full", "--order-cap", "5"
    )
    assert code == 0
    assert "kernel K: {0,1,2,3,4}" in out


def test_dilate_output(capsys):
    code, out, _ = run(capsys, "dilate", "--spec", "mod(6,0)", "--n", "2")
    assert code == 0
    assert out.strip() == "mod(3,0)"
    code, _, err = run(capsys, "dilate", "--spec", "mod(6,0)", "--n", "0")
    assert code == 2
    assert "factor" in err


def test_certificate_documents_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["search", "--seq", "nat:64", "--spec", "mod(6,0)", "--depth", "4"]
    run(capsys, *argv, "--json", str(a))
    run(capsys, *argv, "--json", str(b))
    assert comparable_form(load_document(a)) == comparable_form(load_document(b))


def test_unknown_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["search", "--frobnicate"])
    assert err.value.code == 2


def test_no_subcommand_exits_two():
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "ipkit", "fs", "--seq", "nat:3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "FS (6 values)" in proc.stdout
