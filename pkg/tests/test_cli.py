"""End-to-end tests for the versorlab command-line interface."""

import json
import subprocess
import sys

import pytest

from versorlab.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, *argv):
    rc, out, err = run_cli(capsys, *argv)
    assert rc == 0, err
    return json.loads(out)


def test_roots_json_payload(capsys):
    d = run_json(capsys, "roots", "A3", "--format", "json")
    assert d["name"] == "A3"
    assert d["rank"] == 3
    assert d["root_count"] == 12
    assert d["signature"] == [3, 0]
    assert d["axioms_ok"] is True
    assert d["cartan_integral"] is True
    assert len(d["roots"]) == 12
    assert d["diagram_edges"] == [{"i": 1, "j": 2, "m": 3}, {"i": 2, "j": 3, "m": 3}]


def test_roots_csv_lists_every_root(capsys):
    rc, out, err = run_cli(capsys, "roots", "B3", "--format", "csv")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[0] == "index"
    assert len(lines) == 1 + 18


def test_roots_markdown_mentions_cartan(capsys):
    rc, out, _ = run_cli(capsys, "roots", "H3", "--format", "markdown")
    assert rc == 0
    assert "H3" in out and "Cartan" in out
    assert "| 30" in out or "30 roots" in out or "30" in out


def test_roots_from_file(tmp_path, capsys):
    f = tmp_path / "b2.json"
    f.write_text(json.dumps({
        "name": "custom-B2",
        "sig": [2, 0],
        "simple_roots": [[1.0, 0.0],
                         [-0.7071067811865476, 0.7071067811865476]],
    }))
    d = run_json(capsys, "roots", str(f))
    assert d["name"] == "custom-B2"
    assert d["root_count"] == 8


def test_group_kind_orders(capsys):
    for kind, order in [("spin", 24), ("pin", 48), ("chiral", 12), ("full", 24)]:
        d = run_json(capsys, "group", "A3", "--kind", kind)
        assert d["order"] == order, kind


def test_classes_table(capsys):
    d = run_json(capsys, "classes", "A3", "--kind", "spin")
    sizes = [c["size"] for c in d["classes"]]
    assert sizes == [1, 1, 4, 4, 4, 4, 6]
    assert d["order"] == 24


def test_classes_markdown_rows(capsys):
    rc, out, _ = run_cli(capsys, "classes", "A3", "--kind", "spin", "--format", "markdown")
    assert rc == 0
    # seven class rows below the header
    rows = [l for l in out.splitlines() if l.startswith("|") and "---" not in l]
    assert len(rows) == 1 + 7


def test_induce_payload(capsys):
    d = run_json(capsys, "induce", "A1^3")
    assert d["identification"] == "A1^4"
    assert d["root_count"] == 8
    assert d["spin_order"] == 8
    assert d["reflection_agreement"]["all_in_group"] is True
    assert d["automorphism_sweep"]["exhaustive"] is True
    assert d["automorphism_sweep"]["pairs_tested"] == 64
    assert d["automorphism_sweep"]["distinct_images"] == 32


def test_mckay_rows(capsys):
    d = run_json(capsys, "mckay")
    assert [r["lie"] for r in d["rows"]] == ["D4+", "E6+", "E7+", "E8+"]
    for r in d["rows"]:
        assert r["phi_count"] == r["sum_dims"] == r["coxeter_h"]


def test_modular_word_wire(capsys):
    d = run_json(capsys, "modular", "T", "0", "1")
    assert d["word"] == "T"
    assert d["versor_result"] == [1.0, 1.0]
    assert d["oracle_result"] == [1.0, 1.0]
    assert d["max_deviation"] <= 1e-9


def test_modular_empty_word(capsys):
    d = run_json(capsys, "modular", "", "0.25", "0.75")
    assert d["versor_result"] == [0.25, 0.75]


def test_error_unknown_catalog_name(capsys):
    rc, out, err = run_cli(capsys, "roots", "Z99")
    assert rc == 2
    assert out == ""
    payload = json.loads(err.strip())
    assert payload["error"] == "UnknownCatalogName"
    assert "Z99" in payload["message"]


def test_error_bad_modular_input(capsys):
    rc, _, err = run_cli(capsys, "modular", "S", "0.5", "-1.0")
    assert rc == 2
    assert json.loads(err.strip())["error"]
    rc, _, err = run_cli(capsys, "modular", "SQ", "0.5", "1.0")
    assert rc == 2


def test_error_payload_is_single_line(capsys):
    rc, _, err = run_cli(capsys, "roots", "nope")
    assert rc == 2
    assert len(err.strip().splitlines()) == 1


def test_verify_subcommand_passes(capsys):
    d = run_json(capsys, "verify")
    assert d["ok"] is True
    assert d["failed"] == 0
    assert d["passed"] == len(d["checks"])
    names = {c["name"] for c in d["checks"]}
    assert "kernel.reflection_formula" in names
    assert "mckay.table" in names
    assert all(c["passed"] for c in d["checks"])


def test_seed_env_round_trip(monkeypatch, capsys):
    monkeypatch.setenv("VERSORLAB_SEED", "7")
    d = run_json(capsys, "induce", "A3")
    assert d["automorphism_sweep"]["pairs_tested"] == 576  # 24^2, still exhaustive
    assert d["identification"] == "D4"


def test_output_is_byte_deterministic():
    cmd = [sys.executable, "-m", "versorlab", "mckay", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and len(a) > 100


def test_console_entry_point_runs():
    out = subprocess.run([sys.executable, "-m", "versorlab", "roots", "A1",
                          "--format", "csv"], capture_output=True, check=True)
    assert out.stdout.decode().splitlines()[0].startswith("index")
