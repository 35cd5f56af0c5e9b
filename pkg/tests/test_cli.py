"""
Command line: documents, exit codes, global flags and the shipped schema
"""
import json
from pathlib import Path

import pytest

from src.algebra import skewpoly as sp
from src.algebra.gf import FieldAut, field_create
from src.cli.main import main, parse_ints, parse_matrix, UsageError
from src.cli.models import DOCUMENTS, document_schemas
from src.codes import skewrs
from src.config import load_catalogue

SCHEMA = Path(__file__).resolve().parent.parent / "schemas" / "output.json"

SKEWPOLY_SAMPLES = ["division_round_trips=20", "gcd_pairs=10", "commutative_pairs=10", "right_eval=10"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, err


def test_text_forms():
    assert parse_ints("1,0,1") == [1, 0, 1]
    assert parse_ints("") == []
    assert parse_matrix("1,0;0,1") == [[1, 0], [0, 1]]
    with pytest.raises(UsageError):
        parse_matrix("1,0;1")
    with pytest.raises(UsageError):
        parse_ints("1,x")


def test_composite_characteristic_is_a_usage_error(capsys):
    code, out, err = run(capsys, "field", "info", "--p", "4", "--m", "1")
    assert code == 1
    assert out == ""
    assert "CompositeCharacteristic" in err


def test_field_commands(capsys):
    code, doc, _ = run_json(capsys, "field", "info", "--p", "2", "--m", "3")
    assert code == 0 and doc["q"] == 8 and doc["modulus"] == [1, 1, 0, 1]
    code, doc, _ = run_json(capsys, "field", "arith", "--p", "2", "--m", "2", "--op", "mul", "--x", "2", "--y", "2")
    assert code == 0 and doc["result"] == 3
    code, doc, _ = run_json(capsys, "field", "frobenius", "--p", "2", "--m", "2", "--x", "2")
    assert doc["result"] == 3
    code, doc, _ = run_json(capsys, "field", "trace", "--p", "2", "--m", "2", "--x", "2")
    assert doc["result"] == 1
    code, doc, _ = run_json(capsys, "field", "norm", "--p", "2", "--m", "2", "--x", "2")
    assert doc["result"] == 1


def test_field_arith_needs_a_second_operand(capsys):
    code, _, err = run(capsys, "field", "arith", "--p", "2", "--m", "2", "--op", "add", "--x", "1")
    assert code == 1 and "--y" in err


def test_hilbert90_command(capsys):
    L = field_create(2, 3)
    sigma = FieldAut(L, 1)
    code, doc, _ = run_json(capsys, "field", "hilbert90", "--p", "2", "--m", "3", "--mu", "1")
    assert code == 0
    nu = L(doc["result"])
    assert sigma.apply(nu) / nu == 1
    # 2 generates GF(16)^*, so its norm 2^5 down to GF(4) is not 1
    code, _, err = run(capsys, "field", "hilbert90", "--p", "2", "--m", "4", "--d", "2", "--mu", "2")
    assert code == 1 and "NormNotOne" in err


def test_self_dual_normal_basis_command(capsys):
    code, doc, _ = run_json(capsys, "basis", "self-dual-normal", "--p", "2", "--m", "3")
    assert code == 0
    assert doc["alpha"] == 3 and doc["normal"] and doc["self_dual"]
    assert doc["gram"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_dual_basis_command(capsys):
    code, doc, _ = run_json(capsys, "basis", "dual", "--p", "2", "--m", "2", "--basis", "2,3")
    assert code == 0 and sorted(doc["elements"]) == [2, 3] and doc["self_dual"]
    code, _, err = run(capsys, "basis", "dual", "--p", "2", "--m", "2", "--basis", "1,1")
    assert code == 1 and "NotABasis" in err


@pytest.mark.parametrize("side", ["right", "left"])
def test_skewpoly_divide(capsys, side):
    L = field_create(2, 2)
    sigma = FieldAut(L, 1)
    code, doc, _ = run_json(capsys, "skewpoly", "divide", "--p", "2", "--m", "2",
                            "--f", "2,3,0,1", "--g", "3,1", "--side", side)
    assert code == 0
    f, g = sp.from_ints(sigma, [2, 3, 0, 1]), sp.from_ints(sigma, [3, 1])
    q, r = sp.from_ints(sigma, doc["result"]["q"]), sp.from_ints(sigma, doc["result"]["r"])
    product = sp.sp_mul(q, g) if side == "right" else sp.sp_mul(g, q)
    assert product + r == f and r.degree < g.degree


def test_skewpoly_commands(capsys):
    code, doc, _ = run_json(capsys, "skewpoly", "mul", "--p", "2", "--m", "2", "--f", "0,1", "--g", "2")
    # x a = sigma(a) x
    assert code == 0 and doc["result"]["product"] == [0, 3]
    code, doc, _ = run_json(capsys, "skewpoly", "gcd", "--p", "2", "--m", "2", "--kind", "lclm",
                            "--f", "1,1", "--g", "2,1")
    assert code == 0 and len(doc["result"]["lclm"]) == 3 and doc["result"]["lclm"][-1] == 1
    code, doc, _ = run_json(capsys, "skewpoly", "norm", "--p", "2", "--m", "2", "--a", "2", "--i", "2")
    assert doc["result"]["norm"] == 1
    code, doc, _ = run_json(capsys, "skewpoly", "eval", "--p", "2", "--m", "2", "--f", "1,0,1", "--a", "2")
    assert doc["result"]["value"] == 0
    code, _, err = run(capsys, "skewpoly", "divide", "--p", "2", "--m", "2", "--f", "1,1", "--g", "")
    assert code == 1 and "DivisionByZero" in err


def test_skewrs_example(capsys):
    code, doc, _ = run_json(capsys, "code", "skewrs", "--p", "2", "--m", "3", "--alpha", "3", "--delta", "3",
                            "--mindist")
    assert code == 0
    assert doc["n"] == 3 and doc["k"] == 1
    assert doc["min_distance"] == 3 and doc["dual_min_distance"] == 2 and doc["mds"] is True
    assert all(doc["checks"].values())


def test_skewrs_dual_and_evaluation(capsys):
    L = field_create(2, 4)
    alpha = skewrs.normal_elements(L, FieldAut(L, 1))[0]
    code, doc, _ = run_json(capsys, "code", "skewrs", "--p", "2", "--m", "4", "--alpha", str(alpha), "--delta", "3",
                            "--dual", "--eval")
    assert code == 0
    assert doc["n"] == 4 and doc["k"] == 2
    assert len(doc["g"]) == 3 and len(doc["dual_g"]) == doc["n"] - doc["delta"] + 2
    assert len(doc["sge_matrix"]) == doc["k"]
    assert doc["checks"] == {"dual_matches_oracle": True, "theta_h": True, "sge_spans_code": True}


def test_skewrs_rejects_a_non_normal_element(capsys):
    code, _, err = run(capsys, "code", "skewrs", "--p", "2", "--m", "3", "--alpha", "1", "--delta", "2")
    assert code == 1 and "NotNormal" in err


def test_constacyclic_command(capsys):
    code, doc, _ = run_json(capsys, "code", "constacyclic", "--p", "2", "--m", "2", "--n", "2", "--u", "1",
                            "--gen", "1,1")
    assert code == 0
    assert doc["cofactor"] == [1, 1]
    assert doc["dimension"] == 1 and doc["dual_dimension"] == 1
    assert all(doc["checks"].values())
    code, _, err = run(capsys, "code", "constacyclic", "--p", "2", "--m", "2", "--n", "2", "--gen", "2")
    assert code == 1 and "NotMonic" in err


def test_conv_command(capsys):
    code, doc, _ = run_json(capsys, "code", "conv", "--p", "2", "--t", "2", "--n", "2",
                            "--U", "1,0;0,1", "--h", "1", "--idem", "1,0;0,0")
    assert code == 0
    assert doc["basis"] and doc["idempotent"] == [[1, 0], [0, 0]]
    assert len(doc["M_R_f"]) == 8 and len(doc["dual_generators"]) == 4
    assert all(doc["checks"].values())
    code, _, err = run(capsys, "code", "conv", "--p", "2", "--t", "2", "--n", "2",
                       "--U", "1,0;0,1", "--idem", "1,1;1,1")
    assert code == 1 and "BadCertificate" in err
    code, _, err = run(capsys, "code", "conv", "--p", "2", "--t", "2", "--n", "2",
                       "--U", "1,1;1,1", "--idem", "1,0;0,0")
    assert code == 1 and "SingularU" in err


def test_verify_suite(capsys):
    code, doc, _ = run_json(capsys, "verify", "gf", "--seed", "3")
    assert code == 0
    assert doc["passed"] and doc["seed"] == 3
    assert [s["suite"] for s in doc["suites"]] == ["GF"]


def test_verify_is_reproducible(capsys):
    argv = ["--seed", "5", "verify", "skewpoly", "--samples", *SKEWPOLY_SAMPLES]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == second[0] == 0
    assert first[1] == second[1]
    assert json.loads(first[1])["seed"] == 5


def test_verify_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SKEWDUAL_SEED", "12")
    _, doc, _ = run_json(capsys, "verify", "gf")
    assert doc["seed"] == 12
    _, doc, _ = run_json(capsys, "verify", "gf", "--seed", "2")
    assert doc["seed"] == 2


def test_verify_failure_exits_with_two(capsys, tmp_path):
    catalogue = load_catalogue()
    gf = next(s for s in catalogue["suites"] if s["id"] == "GF")
    gf["instances"]["self_dual_normal"] = [[2, 3, 1, 5]]
    path = tmp_path / "catalogue.json"
    path.write_text(json.dumps(catalogue))
    code, doc, _ = run_json(capsys, "verify", "gf", "--catalogue", str(path))
    assert code == 2
    assert not doc["passed"] and doc["suites"][0]["failures"] == 1


def test_usage_errors(capsys):
    assert run(capsys, "verify", "nosuch")[0] == 1
    assert run(capsys, "verify", "gf", "--samples", "gcd_pairs")[0] == 1
    assert run(capsys, "field")[0] == 1
    assert run(capsys, "field", "info", "--p", "2")[0] == 1
    assert run(capsys, "--output", "xml", "field", "info", "--p", "2", "--m", "1")[0] == 1


def test_table_output(capsys):
    code, out, _ = run(capsys, "field", "info", "--p", "2", "--m", "3", "--output", "table")
    assert code == 0
    assert "modulus" in out and "operation" in out
    assert not out.lstrip().startswith("{")


def test_schema_command_lists_every_document(capsys):
    code, doc, _ = run_json(capsys, "schema")
    assert code == 0
    assert set(doc) == set(DOCUMENTS)


def test_shipped_schema_matches_the_models():
    shipped = json.loads(SCHEMA.read_text())["documents"]
    generated = document_schemas()
    assert set(shipped) == set(generated)
    for name, model in DOCUMENTS.items():
        assert set(shipped[name]["properties"]) == set(generated[name]["properties"]), name
        required = model.model_json_schema().get("required", [])
        assert set(shipped[name]["required"]) == set(required), name
