import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

import oracle as O
from superleibniz.cli.documents import algebra_from_document, document_from_algebra, dumps
from superleibniz.cli.main import main, run
from superleibniz.fixtures import FIXTURES, PAIR_FIXTURES

ROOT = Path(__file__).resolve().parent.parent


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    report = json.loads(out.getvalue()) if out.getvalue() else None
    return code, report, err.getvalue()


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc), encoding="utf-8")
    return str(p)


def fixture_file(tmp_path, name):
    return write(tmp_path, name + ".json", FIXTURES[name]())


def test_report_shape(tmp_path):
    code, rep, _ = call("validate", fixture_file(tmp_path, "example2"))
    assert code == 0
    assert list(rep) == ["command", "verdicts", "counterexamples", "derived_tables", "discrepancy_log"]
    assert rep["verdicts"]["valid"] and rep["verdicts"]["has form"]


def test_classify_example2(tmp_path):
    code, rep, _ = call("classify", fixture_file(tmp_path, "example2"))
    v = rep["verdicts"]
    assert code == 0
    for k in ("left-leibniz", "right-leibniz", "symmetric-leibniz", "two-step-nilpotent", "invariant"):
        assert v[k] is True
    assert v["lie"] is False


def test_classify_zero_algebra(tmp_path):
    doc = {"name": "zero", "even_basis": ["x"], "odd_basis": ["p"], "products": [], "metadata": {}}
    code, rep, _ = call("classify", write(tmp_path, "z.json", doc))
    assert code == 0 and all(rep["verdicts"].values())


def test_classify_example1(tmp_path):
    code, rep, _ = call("classify", fixture_file(tmp_path, "example1"))
    assert code == 0
    # the printed table is not left Leibniz (see the decisions ledger)
    assert rep["verdicts"]["left-leibniz"] is False
    assert rep["verdicts"]["invariant"] is False


def test_flat_example2():
    code, rep, _ = call("flat", "--fixtures", "example2")
    assert code == 0 and rep["verdicts"]["flat"] is True


def test_flat_not_leibniz_exit_1():
    code, rep, _ = call("flat", "--fixtures", "example1")
    assert code == 1 and rep["counterexamples"]


def test_levi_civita_emit(tmp_path):
    emit = tmp_path / "pair.json"
    code, rep, _ = call("levi-civita", "--fixtures", "example2", "--emit", str(emit))
    assert code == 0
    v = rep["verdicts"]
    assert v["torsion and compatibility"] and v["star = half product"]
    assert v["circ = half super-flipped product"] and not v["star = circ"]
    pair = json.loads(emit.read_text())
    code, rep, _ = call("verify-pair", fixture_file(tmp_path, "example2"), "--pair", str(emit))
    assert code == 0 and rep["verdicts"]["levi-civita"]
    assert pair["star"]


def test_verify_pair_example1_printed():
    code, rep, _ = call("verify-pair", "--fixtures", "example1", "--pair", "example1-printed-pair")
    assert code == 1
    assert rep["verdicts"]["compatibility"] is False
    seen = {(c["equation"], tuple(c["labels"])) for c in rep["counterexamples"]}
    assert ("compatibility", ("e1", "f2", "f2")) in seen


def test_extend_double_even_lambda_on_zero_algebra(tmp_path):
    zero = {"name": "zero", "even_basis": [], "odd_basis": [], "products": [], "metadata": {}}
    src = write(tmp_path, "zero.json", zero)
    data = write(tmp_path, "data.json", {"lambda": "1"})
    emit = tmp_path / "out.json"
    code, rep, _ = call("extend", "double-even", src, "--data", data, "--emit", str(emit))
    assert code == 0 and rep["verdicts"]["constructed"]
    doc = json.loads(emit.read_text())
    assert doc["products"] == [{"left": "d", "right": "d", "value": {"e": "2"}}]
    alg, form = algebra_from_document(doc)
    code, rep, _ = call("flat", str(emit))
    assert code == 0
    code, rep, _ = call("deconstruct", str(emit))
    assert code == 0
    step = rep["derived_tables"]["sequence"]["steps"][0]
    assert step["data"]["lambda"] == "1"


def test_extend_zero_data_file_on_zero_algebra(tmp_path):
    zero = {"name": "zero", "even_basis": [], "odd_basis": [], "products": [], "metadata": {}}
    code, rep, _ = call("extend", "double-even", write(tmp_path, "z.json", zero),
                        "--data", write(tmp_path, "d.json", {}))
    assert code == 0
    doc = rep["derived_tables"]["algebra"]
    assert doc["products"] == [] and sorted(doc["even_basis"]) == ["d", "e"]


def test_extend_rejections_exit_1(tmp_path):
    zero = {"name": "zero", "even_basis": [], "odd_basis": [], "products": [], "metadata": {}}
    src = write(tmp_path, "z.json", zero)
    code, rep, _ = call("extend", "double-odd", src, "--data", write(tmp_path, "d.json", {"lambda": "1"}))
    assert code == 1 and rep["verdicts"]["constructed"] is False
    assert rep["counterexamples"][0]["equation"] == "lambda"


def test_extend_t_star_and_semidirect(tmp_path):
    line = {"name": "line", "even_basis": ["u"], "odd_basis": [], "products": [], "metadata": {}}
    src = write(tmp_path, "line.json", line)
    omega = write(tmp_path, "o.json", {"omega": [{"u": "u", "v": "u", "w": "u", "value": "1"}]})
    code, rep, _ = call("extend", "t-star", src, "--data", omega)
    assert code == 0 and rep["verdicts"]["invariant"]
    assert rep["derived_tables"]["algebra"]["products"] == [
        {"left": "u", "right": "u", "value": {"u*": "1"}}]
    code, rep, _ = call("extend", "semidirect", "--fixtures", "example2")
    assert code == 0 and "d" in rep["derived_tables"]["algebra"]["even_basis"]
    code, rep, _ = call("extend", "central", "--fixtures", "example2")
    assert code == 0


def test_iterate_and_quadratic_report():
    code, rep, _ = call("iterate-to-lie", "--fixtures", "quadratic-odd6")
    assert code == 0 and rep["verdicts"]["reached lie"]
    code, rep, _ = call("quadratic-report", "--fixtures", "quadratic-even6")
    assert code == 0 and rep["verdicts"]["flat"]
    code, rep, _ = call("curvature", "--fixtures", "example2")
    assert code == 0


def test_verify_iso(tmp_path):
    doc = FIXTURES["example2"]()
    ident = {l: {l: "1"} for l in doc["even_basis"] + doc["odd_basis"]}
    data = write(tmp_path, "iso.json", {"target": doc, "map": ident})
    code, rep, _ = call("verify-iso", write(tmp_path, "a.json", doc), "--data", data)
    assert code == 0
    twice = {l: {l: "2"} for l in ident}
    data = write(tmp_path, "iso2.json", {"target": doc, "map": twice})
    code, rep, _ = call("verify-iso", write(tmp_path, "a.json", doc), "--data", data)
    assert code == 1


def test_fixture_listing():
    code, rep, _ = call("validate", "--fixtures")
    assert code == 0
    assert set(rep["derived_tables"]["fixtures"]) == set(FIXTURES)
    assert set(rep["derived_tables"]["pair_fixtures"]) == set(PAIR_FIXTURES)


# ---------------------------------------------------------------------------
# input errors

def _bad(tmp_path, doc, *verb):
    return call(*(verb or ("validate",)), write(tmp_path, "bad.json", doc))


def test_parity_mismatch_rejected(tmp_path):
    doc = {"name": "bad", "even_basis": ["e1", "e2"], "odd_basis": ["f1"],
           "products": [{"left": "e1", "right": "f1", "value": {"e2": "1"}}], "metadata": {}}
    code, rep, err = _bad(tmp_path, doc)
    assert code == 2 and rep is None and err


def test_odd_form_with_even_pairing_rejected(tmp_path):
    doc = {"name": "bad", "even_basis": ["e1"], "odd_basis": ["f1"], "products": [],
           "form": {"parity": "odd", "entries": [{"a": "e1", "b": "e1", "value": "1"}]},
           "metadata": {}}
    assert _bad(tmp_path, doc)[0] == 2


def test_degenerate_form_rejected_with_witness(tmp_path):
    doc = {"name": "bad", "even_basis": ["x", "y"], "odd_basis": [], "products": [],
           "form": {"parity": "even", "entries": [{"a": "x", "b": "x", "value": "1"}]},
           "metadata": {}}
    code, _, err = _bad(tmp_path, doc)
    assert code == 2 and "y" in err


@pytest.mark.parametrize("doc", [
    {"name": "x", "even_basis": ["x"], "odd_basis": [], "products": [], "metadata": {}, "extra": 1},
    {"name": "x", "even_basis": ["x"], "odd_basis": [],
     "products": [{"left": "x", "right": "x", "value": {"x": 0.5}}], "metadata": {}},
    {"name": "x", "even_basis": ["x"], "odd_basis": [],
     "products": [{"left": "x", "right": "z", "value": {"x": "1"}}], "metadata": {}},
])
def test_malformed_documents(tmp_path, doc):
    assert _bad(tmp_path, doc)[0] == 2


def test_parse_error_has_position(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"name": "x",\n  "even_basis": [}', encoding="utf-8")
    code, _, err = call("validate", str(p))
    assert code == 2 and "line 2" in err


def test_missing_inputs(tmp_path):
    assert call("validate", str(tmp_path / "nope.json"))[0] == 2
    assert call("flat", "--fixtures", "nope")[0] == 2
    doc = {"name": "x", "even_basis": ["x"], "odd_basis": [], "products": [], "metadata": {}}
    assert call("flat", write(tmp_path, "x.json", doc))[0] == 2
    assert call("extend", "t-star", write(tmp_path, "x.json", doc),
                "--data", str(tmp_path / "missing.json"))[0] == 2
    assert main(["no-such-verb"]) == 2


# ---------------------------------------------------------------------------
# serialization

@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_load_emit_round_trip(name):
    alg, form = algebra_from_document(FIXTURES[name]())
    doc = document_from_algebra(alg, form, name=name)
    again = document_from_algebra(*algebra_from_document(json.loads(dumps(doc))), name=name)
    assert again == doc


@pytest.mark.parametrize("seed", range(8))
def test_round_trip_random(seed):
    doc = O.random_flatness_instance(O.rng_for(100 + seed))
    alg, form = algebra_from_document(doc)
    emitted = document_from_algebra(alg, form)
    alg2, form2 = algebra_from_document(json.loads(dumps(emitted)))
    assert alg2 == alg and form2 == form


def test_reports_are_byte_identical(tmp_path):
    src = fixture_file(tmp_path, "quadratic-odd6")
    outs = []
    for _ in range(2):
        out = io.StringIO()
        run(["iterate-to-lie", src], out=out, err=io.StringIO())
        outs.append(out.getvalue())
    assert outs[0] == outs[1]


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "superleibniz", "flat", "--fixtures", "example2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdicts"]["flat"] is True


@pytest.mark.parametrize("script", sorted(p.name for p in (ROOT / "demos").glob("*.py")))
def test_demo_runs(script):
    proc = subprocess.run([sys.executable, str(ROOT / "demos" / script)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
