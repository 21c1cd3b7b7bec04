"""Command-line surface: JSON output, exit codes, graph-spec resolution."""

import json
from fractions import Fraction as F

from hardcore_lab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_command(capsys):
    code, out, _ = run(capsys, "poly", "pasch")
    assert code == 0
    data = json.loads(out)
    assert data["coefficients"] == "1,10,33,42,20,6,1"
    assert data["n"] == 10 and data["edges"] == 12


def test_quantities_matches_displayed_value(capsys):
    code, out, _ = run(capsys, "quantities", "pasch", "--lambda", "5")
    assert code == 0
    data = json.loads(out)
    lam = F(5)
    num = lam * (6 * lam**5 + 30 * lam**4 + 80 * lam**3 + 126 * lam**2 + 66 * lam + 10)
    den = 10 * (lam**6 + 6 * lam**5 + 20 * lam**4 + 42 * lam**3 + 33 * lam**2 + 10 * lam + 1)
    assert data["occupancy_at_lambda"] == f"{num / den}"
    assert data["partition_at_lambda"] == "53001"


def test_order_failing_pair_exit_code(capsys):
    code, out, _ = run(capsys, "order", "FV", "1,9,30,45,30,9,1", "1,9,30,44,24,9")
    assert code == 2
    data = json.loads(out)
    assert data["status"] == "fails" and data["witness"] == "4"


def test_order_holding_pair(capsys):
    code, out, _ = run(capsys, "order", "VAR", "1,9,30,45,30,9,1", "1,9,30,44,24,9")
    assert code == 0
    assert json.loads(out)["status"] == "holds"


def test_order_unknown_kind_is_usage_error(capsys):
    code, _, err = run(capsys, "order", "WIBBLE", "1,1", "1,1")
    assert code == 1 and "unknown ordering kind" in err


def test_bound_groups(capsys):
    code, out, _ = run(capsys, "bound", "occupancy", "kab:1,3", "--lambda", "3/16")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert {l["bound"] for l in lines} >= {"occupancy.complete_floor", "occupancy.degree_floor"}
    assert all(l["status"] == "holds" for l in lines)


def test_bound_graphless(capsys):
    code, out, _ = run(capsys, "bound", "p5_threshold")
    assert code == 0
    assert len(out.splitlines()) == 3


def test_bound_vertex_ceiling_reports_failure(capsys):
    code, out, _ = run(capsys, "bound", "vertex_ceiling", "path:4", "--lambda", "1")
    assert code == 2
    assert json.loads(out.splitlines()[0])["status"] == "fails"


def test_bound_unknown_name(capsys):
    code, _, err = run(capsys, "bound", "nonsense", "kn:3", "--lambda", "1")
    assert code == 1 and "unknown bound" in err


def test_bound_inconclusive_exit_code(capsys):
    # Equality case: enclosure comparison must bottom out as inconclusive.
    code, out, _ = run(capsys, "bound", "combined", "empty:2", "--lambda", "1",
                       "--tol", "1/" + "1" + "0" * 28)
    assert code == 3
    statuses = {json.loads(l)["status"] for l in out.splitlines()}
    assert "inconclusive" in statuses and "fails" not in statuses


def test_graph6_and_file_specs(tmp_path, capsys):
    code, out, _ = run(capsys, "poly", "g6:Bw")
    assert code == 0 and json.loads(out)["coefficients"] == "1,3"

    edge_file = tmp_path / "tri.txt"
    edge_file.write_text("0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "poly", f"@{edge_file}")
    assert code == 0 and json.loads(out)["coefficients"] == "1,3"


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "poly", "@/nonexistent/file.txt")
    assert code == 1 and err


def test_bad_generator_spec(capsys):
    code, _, err = run(capsys, "poly", "frobnicate:9")
    assert code == 1 and "unknown generator" in err


def test_sample_command(capsys):
    code, out, _ = run(capsys, "sample", "kn:3", "--lambda", "1",
                       "--steps", "100000", "--burn-in", "1000", "--seed", "3")
    assert code == 0
    data = json.loads(out)
    assert data["seed"] == 3 and data["steps"] == 100000


def test_repro_selected_items(capsys):
    code, out, _ = run(capsys, "repro", "lemmas.fv_and_var_hold",
                       "series.clique_weight_identity")
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines()]
    assert [l["id"] for l in lines] == ["lemmas.fv_and_var_hold",
                                        "series.clique_weight_identity"]
    assert all(l["status"] == "verified" for l in lines)


def test_repro_unknown_id(capsys):
    code, _, err = run(capsys, "repro", "nope.nothing")
    assert code == 1 and "unknown repro ids" in err


def test_repro_out_file_and_determinism(tmp_path, capsys):
    out1 = tmp_path / "a.jsonl"
    out2 = tmp_path / "b.jsonl"
    ids = ["lemmas.var_without_fv", "series.ratio_coefficients",
           "variance.p5_threshold"]
    assert main(["repro", *ids, "--out", str(out1)]) == 0
    assert main(["repro", *ids, "--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert [json.loads(l)["id"] for l in lines] == sorted(ids)


def test_tolerance_env_override(capsys, monkeypatch):
    monkeypatch.setenv("HARDCORE_LAB_TOL", "1/1000")
    code, out, _ = run(capsys, "quantities", "kn:3", "--lambda", "1")
    assert code == 0
    data = json.loads(out)
    lo, hi = data["free_energy_enclosure"][1:-1].split(",")
    width = F(hi.strip()) - F(lo.strip())
    assert width <= F(1, 1000)
