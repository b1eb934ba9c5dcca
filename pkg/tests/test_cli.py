import csv
import dataclasses
import io
import json
import subprocess
import sys

import pytest

from benesnet import cli, closedforms


def run(capsys, *args):
    code = cli.main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_generate_dot_bba2(capsys):
    code, out, _ = run(capsys, "generate", "--network", "bba", "--n", "2", "--format", "dot")
    assert code == 0
    assert out.count(" -- ") == 46
    assert sum(1 for line in out.splitlines() if line.strip().endswith(";") and " -- " not in line) == 20
    assert '"01:3"' in out


@pytest.mark.parametrize("net,n,v,e", [("bb", 1, 6, 8), ("bf", 2, 12, 16)])
def test_generate_counts(capsys, net, n, v, e):
    code, out, _ = run(capsys, "generate", "--network", net, "--n", str(n), "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["vertices"] == v and len(doc["edges"]) == e


def test_generate_csv(capsys):
    _, out, _ = run(capsys, "generate", "--network", "bb", "--n", "1")
    lines = out.splitlines()
    assert lines[0] == "u,v" and len(lines) == 9


def test_descriptors_all_agree(capsys):
    code, out, _ = run(capsys, "descriptors", "--network", "bb", "--n", "3", "--method", "all")
    assert code == 0
    assert out.splitlines()[0] == "network,n,descriptor,method,value"
    table = rows(out)
    values = [r for r in table if r["method"] != "agree"]
    assert len(values) == 7 * 3
    agree = [r for r in table if r["method"] == "agree"]
    assert len(agree) == 7 and all(r["value"] == "true" for r in agree)


def test_descriptors_brute_value(capsys):
    _, out, _ = run(capsys, "descriptors", "--network", "bba", "--n", "2", "--method", "brute")
    w = [r for r in rows(out) if r["descriptor"] == "W"]
    assert w == [{"network": "bba", "n": "2", "descriptor": "W", "method": "brute", "value": "418"}]


def test_descriptors_cluster(capsys):
    code, out, _ = run(capsys, "descriptors", "--network", "cluster", "--m", "3", "--a", "3", "--b", "2")
    assert code == 0
    w = [r for r in rows(out) if r["descriptor"] == "W"][0]
    assert w["value"] == "141"
    assert w["network"].startswith("cluster[m=3;a=3;b=2")


def test_descriptors_cluster_closed_is_wiener_only(capsys):
    _, out, _ = run(capsys, "descriptors", "--network", "cluster", "--m", "2", "--a", "1", "--b", "1", "--method", "closed")
    assert [(r["descriptor"], r["value"]) for r in rows(out)] == [("W", "6")]


def test_descriptors_precision_column(capsys):
    _, out, _ = run(
        capsys, "descriptors", "--network", "cluster", "--m", "2", "--a", "1", "--b", "1",
        "--alpha", "1", "--beta", "2", "--precision", "3",
    )
    header = out.splitlines()[0]
    assert header == "network,n,descriptor,method,value,value_decimal"


def test_closed_method_needs_supported_network(capsys):
    code, _, err = run(capsys, "descriptors", "--network", "bf", "--n", "2", "--method", "closed")
    assert code == 2 and "closed forms" in err
    code, _, _ = run(capsys, "descriptors", "--network", "bb", "--n", "1", "--method", "closed")
    assert code == 2


@pytest.mark.parametrize(
    "args",
    [
        ["generate", "--network", "bb", "--n", "0"],
        ["generate", "--network", "bb"],
        ["generate", "--n", "2"],
        ["generate", "--network", "cluster", "--m", "2"],
        ["tables", "--n-range", "4..3"],
        ["params", "--n-range", "1..3"],
        ["broadcast", "--network", "bb", "--n", "2", "--source", "0,0"],
        ["broadcast", "--n", "2", "--source", "00,9"],
        ["cuts", "--network", "bb", "--n", "2", "--class-index", "5"],
        ["generate", "--network", "bb", "--n", "2", "--format", "md"],
    ],
)
def test_usage_errors(capsys, args):
    code, _, err = run(capsys, *args)
    assert code == 2
    assert "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["generate", "--network", "torus"])
    assert exc.value.code == 2


def test_empty_sweep_message(capsys):
    _, _, err = run(capsys, "tables", "--n-range", "4..3")
    assert "empty sweep" in err


def test_unwritable_out(capsys, tmp_path):
    code, _, err = run(capsys, "generate", "--network", "bb", "--n", "2", "--out", str(tmp_path / "no" / "x.csv"))
    assert code == 2 and "cannot write" in err


def test_out_file_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.md", tmp_path / "b.md"
    assert run(capsys, "tables", "--out", str(a))[0] == 0
    assert run(capsys, "tables", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_tables_default(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0
    assert "| 5 | 412384 | 18711808 | 45143424 | 29116032 |" in out
    assert "| 6 | 2945152 | 296448 | 683776 |" in out


def test_tables_csv_all_methods(capsys):
    code, out, _ = run(capsys, "tables", "--n-range", "2..3", "--format", "csv", "--method", "all")
    assert code == 0
    table = rows(out)
    assert list(table[0]) == ["descriptor", "n", "bb", "bba"]
    assert {"descriptor": "PI", "n": "2", "bb": "736", "bba": "1176"} in table


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--n-range", "2..3")
    assert code == 0
    table = rows(out)
    mtd = [r for r in table if r["network"] == "bb" and r["n"] == "2" and r["parameter"] == "mtd"]
    assert {r["source"] for r in mtd} == {"measured", "formula"}
    assert all(r["value_exact"] == "615/2" and r["value_decimal"] == "307.500000" for r in mtd)
    assert any(r["network"] == "bba/bb" for r in table)


def test_cuts_weight_table(capsys):
    code, out, _ = run(capsys, "cuts", "--network", "bb", "--n", "2", "--class-index", "2")
    assert code == 0
    table = rows(out)
    assert list(table[0]) == ["component_id", "w_v", "s_v", "member_count"]
    assert len(table) == 2 + 8


def test_cuts_dot_and_md(capsys):
    _, out, _ = run(capsys, "cuts", "--network", "bba", "--n", "2", "--format", "dot")
    assert out.count("graph ") == 2
    _, out, _ = run(capsys, "cuts", "--network", "bba", "--n", "2", "--format", "md")
    assert "not transitive" in out


def test_broadcast_trace(capsys):
    code, out, _ = run(capsys, "broadcast", "--n", "2", "--source", "00,0")
    assert code == 0
    table = rows(out)
    assert max(int(r["round"]) for r in table) == 6
    assert len(table) == 19
    _, out, _ = run(capsys, "broadcast", "--n", "2", "--source", "00,0", "--format", "json")
    doc = json.loads(out)
    assert doc["rounds"] == doc["bound"] == 6 and doc["tree_conditions_hold"]
    _, out, _ = run(capsys, "broadcast", "--n", "2", "--source", "00,0", "--format", "dot")
    assert out.startswith("digraph") and out.count("->") == 19


def test_broadcast_sweep(capsys):
    code, out, _ = run(capsys, "broadcast", "--n-range", "2..3")
    assert code == 0
    table = rows(out)
    assert list(table[0]) == ["n", "source_j", "source_k", "e_S", "rounds", "bound", "meets_bound"]
    assert len(table) == 24 and all(r["meets_bound"] == "true" for r in table)


def test_verify_default_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "FAIL" not in out


def test_verify_closed_at_six(capsys):
    code, out, _ = run(capsys, "verify", "--n", "6", "--method", "closed")
    assert code == 0
    assert out.count("PASS") == 2


def test_verify_catches_perturbed_formula(capsys, monkeypatch):
    real = closedforms.closed_forms

    def perturbed(network, n):
        d = real(network, n)
        return dataclasses.replace(d, pi=d.pi + 1) if network == "bb" else d

    monkeypatch.setattr(closedforms, "closed_forms", perturbed)
    code, out, _ = run(capsys, "verify", "--n-range", "2..3")
    assert code == 1
    failing = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert failing and all("PI" in line for line in failing)


def test_descriptors_disagreement_exit_1(capsys, monkeypatch):
    real = closedforms.closed_forms
    monkeypatch.setattr(
        closedforms, "closed_forms", lambda net, n: dataclasses.replace(real(net, n), mo=0)
    )
    code, out, _ = run(capsys, "descriptors", "--network", "bb", "--n", "2", "--method", "all")
    assert code == 1
    assert "bb,2,Mo,agree,false" in out


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "benesnet", "generate", "--network", "bb", "--n", "1"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "u,v"
