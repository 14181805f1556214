"""CLI behaviour: exit codes, wire formats, schema validity, determinism."""

import json
from importlib import resources as importlib_resources

import pytest
from jsonschema import Draft7Validator
from referencing import Registry, Resource

from breakops.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture(scope="module")
def validators():
    root = importlib_resources.files("breakops") / "schemas"
    docs = {}
    for entry in root.iterdir():
        if entry.name.endswith(".json"):
            docs[entry.name] = json.loads(entry.read_text())
    registry = Registry().with_resources(
        [(doc["$id"], Resource.from_contents(doc)) for doc in docs.values()]
    )
    return {
        name.removesuffix(".schema.json"): Draft7Validator(doc, registry=registry)
        for name, doc in docs.items()
    }


def test_classify_json(capsys, validators):
    code, out, _ = run_cli(capsys, "classify", "--lambda=-1", "--nu", "2", "-N", "1", "-m", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 1 and doc["sporadic"] and doc["all_sbos_differential"]
    validators["classification"].validate(doc)


def test_classify_rational_lambda(capsys, validators):
    code, out, _ = run_cli(capsys, "classify", "--lambda=1/2", "--nu=7/2", "-N", "1", "-m", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 0
    validators["classification"].validate(doc)


def test_classify_unsupported_regime_exits_2(capsys):
    code, _, err = run_cli(capsys, "classify", "--lambda=-1", "--nu", "2", "-N", "2", "-m", "1")
    assert code == 2
    assert "unsupported" in err


def test_classify_bad_rational_exits_2(capsys):
    code, _, _ = run_cli(capsys, "classify", "--lambda=zzz", "--nu", "2", "-N", "1", "-m", "2")
    assert code == 2


def test_solve_generator(capsys, validators):
    code, out, _ = run_cli(capsys, "solve", "--lambda=-1", "--nu", "2", "-N", "1", "-m", "2")
    assert code == 0
    doc = json.loads(out)
    validators["solution"].validate(doc)
    assert doc["k_min"] == 1
    coeffs = [c for comp in doc["components"] for c in comp]
    nonzero = [c for c in coeffs if c != {"re": "0", "im": "0"}]
    assert nonzero[0] == {"re": "1", "im": "0"}  # first nonzero coefficient is 1


def test_solve_empty_exits_3(capsys):
    code, out, _ = run_cli(capsys, "solve", "--lambda=0", "--nu", "3", "-N", "1", "-m", "2")
    assert code == 3
    assert json.loads(out)["dimension"] == 0


def test_solve_negative_m_via_duality(capsys, validators):
    code, out, _ = run_cli(capsys, "solve", "--lambda=-1", "--nu", "2", "-N", "1", "-m", "-2")
    assert code == 0
    doc = json.loads(out)
    validators["solution"].validate(doc)
    assert doc["via_duality"] is True


def test_operator_both_forms(capsys, validators):
    code, out, _ = run_cli(
        capsys, "operator", "--lambda=-1", "--nu", "1", "-N", "0", "-m", "2", "--form", "both"
    )
    assert code == 0
    doc = json.loads(out)
    validators["operator"].validate(doc)
    assert doc["paper"] == [{"d": 0, "p": 0, "q": 2, "r": 0, "coeff": {"re": "1", "im": "0"}}]
    assert doc["proportionality"] == {"re": "4", "im": "0"}


def test_operator_empty_space_exits_3(capsys):
    code, out, _ = run_cli(
        capsys, "operator", "--lambda=-1", "--nu", "3", "-N", "1", "-m", "2"
    )
    assert code == 3
    assert json.loads(out)["dimension"] == 0


def test_operator_latex(capsys):
    code, out, _ = run_cli(
        capsys, "operator", "--lambda=-1", "--nu", "2", "-N", "1", "-m", "2", "--format", "latex"
    )
    assert code == 0
    assert out.strip() == "\\left(-2\\right) \\partial_{\\bar z}^{3} \\otimes u_{2}^{\\vee}"


def test_verify_quick_all(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "hypergeom", "--quick")
    assert code == 0
    assert "cases=" in out and "FAIL" not in out


def test_verify_json_schema(capsys, validators):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "hypergeom", "--quick", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    validators["verify"].validate(doc)
    assert doc["total_failures"] == 0


def test_sweep_small_grid(tmp_path, capsys, validators):
    out_file = tmp_path / "certs.json"
    code, _, err = run_cli(
        capsys,
        "sweep",
        "--max-N", "0",
        "--m-span", "2",
        "--a-extra", "2",
        "--out", str(out_file),
    )
    assert code == 0
    doc = json.loads(out_file.read_text())
    validators["sweep"].validate(doc)
    assert doc["summary"]["failures"] == 0
    assert doc["summary"]["checked"] == len(doc["certificates"]) > 0
    keys = [
        (c["params"]["N"], c["params"]["m"], c["params"]["a"], c["params"]["lambda"])
        for c in doc["certificates"]
    ]
    assert len(set(keys)) == len(keys)


def test_sweep_jobs_byte_identical(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    base = ["sweep", "--max-N", "1", "--m-span", "2", "--a-extra", "1"]
    assert main(base + ["--jobs", "1", "--out", str(first)]) == 0
    assert main(base + ["--jobs", "8", "--out", str(second)]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()


def test_sweep_empty_grid_exits_0(tmp_path, capsys):
    out_file = tmp_path / "empty.json"
    code, _, _ = run_cli(
        capsys, "sweep", "--max-N", "0", "--m-span", "0", "--out", str(out_file)
    )
    assert code == 0
    assert json.loads(out_file.read_text())["summary"]["checked"] == 0


def test_verify_gegenbauer_quick(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "gegenbauer", "--quick")
    assert code == 0
    assert "FAIL" not in out


def test_classify_text_format(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--lambda=-1", "--nu", "2", "-N", "1", "-m", "2", "--format", "text"
    )
    assert code == 0
    assert "one-dimensional" in out


def test_solve_text_format(capsys):
    code, out, _ = run_cli(
        capsys, "solve", "--lambda=-1", "--nu", "2", "-N", "1", "-m", "2", "--format", "text"
    )
    assert code == 0
    assert out.startswith("dimension 1")


def test_operator_text_format(capsys):
    code, out, _ = run_cli(
        capsys, "operator", "--lambda=-1", "--nu", "2", "-N", "1", "-m", "2", "--format", "text"
    )
    assert code == 0
    assert "[paper]" in out and "u_2" in out


def test_operator_canonical_form_negative_m(capsys, validators):
    code, out, _ = run_cli(
        capsys, "operator", "--lambda=-1", "--nu", "2", "-N", "1", "-m", "-2",
        "--form", "canonical",
    )
    assert code == 0
    doc = json.loads(out)
    validators["operator"].validate(doc)
    assert doc["canonical"] == [
        {"d": 0, "p": 3, "q": 0, "r": 0, "coeff": {"re": "8", "im": "0"}}
    ]
