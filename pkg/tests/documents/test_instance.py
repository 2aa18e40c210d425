import json
from pathlib import Path

import pytest

from pyfixpoint.certify import certify_instance
from pyfixpoint.core import FiniteSpace, IntervalSpace, Scalar
from pyfixpoint.documents import (
    FiniteDocument,
    IntervalDocument,
    dump_document,
    export_instance,
    from_document,
    load_instance,
    parse_document,
    to_document,
)
from pyfixpoint.gallery import ENTRIES, lookup
from pyfixpoint.shared.types import InstanceLoadError
from pyfixpoint.solve import picard_solve

FINITE = {
    "kind": "finite",
    "p_table": [[0, 1], [1, 1]],
    "order_table": [[True, False], [True, True]],
    "map_table": [0, 0],
    "x0": 1,
    "psi_expr": "t / 2",
}


def _with(**changes: object) -> str:
    doc = {**FINITE, **changes}
    return json.dumps({k: v for k, v in doc.items() if v is not None})


def test_load_shipped_instance(max_half_file: Path) -> None:
    instance = load_instance(max_half_file)
    assert instance.label == "max-half"
    assert isinstance(instance.space, IntervalSpace)
    assert instance.x0 == Scalar(1.0)
    assert instance.tol == 1e-9
    assert picard_solve(instance).fixed_point == Scalar(2.0**-30)


def test_finite_document() -> None:
    doc = parse_document(_with())
    assert isinstance(doc, FiniteDocument)
    instance = from_document(doc)
    assert isinstance(instance.space, FiniteSpace)
    assert instance.space.size == 2
    assert instance.banach_c is None


@pytest.mark.parametrize(
    "text,needle",
    [
        pytest.param("{", "invalid instance document", id="not_json"),
        pytest.param(_with(kind="torus"), "invalid instance document", id="unknown_kind"),
        pytest.param(_with(psi_expr=None), "give psi_expr, banach_c, or both", id="no_control"),
        pytest.param(_with(map_table=[0, 0, 0]), "p_table must be a 3x3 matrix", id="table_size_mismatch"),
        pytest.param(_with(colour="blue"), "colour", id="unknown_field"),
        pytest.param(_with(banach_c=1.5), "banach_c", id="banach_constant_out_of_range"),
        pytest.param(_with(tol=0), "tol", id="zero_tol"),
    ],
)
def test_invalid_documents(text: str, needle: str) -> None:
    with pytest.raises(InstanceLoadError, match=needle):
        _ = parse_document(text)


@pytest.mark.parametrize(
    "text,needle",
    [
        pytest.param(_with(psi_expr="t +"), "psi_expr", id="bad_expression"),
        pytest.param(_with(psi_expr="t + 1"), "psi_expr: psi\\(0\\) must be 0", id="psi_not_zero_at_origin"),
        pytest.param(_with(p_table=[[0, 1], [2, 1]]), "not symmetric", id="asymmetric_table"),
        pytest.param(_with(order_table=[[False, False], [True, True]]), "not reflexive", id="irreflexive_order"),
        pytest.param(_with(map_table=[0, 2], p_table=[[0, 1], [1, 1]]), "outside", id="map_out_of_range"),
        pytest.param(_with(x0=5), "outside the carrier", id="start_outside"),
    ],
)
def test_documents_that_build_no_instance(text: str, needle: str) -> None:
    doc = parse_document(text)
    with pytest.raises(InstanceLoadError, match=needle):
        _ = from_document(doc)


def test_bad_interval_expression_names_the_field(max_half_file: Path) -> None:
    raw = json.loads(max_half_file.read_text())
    raw["f_expr"] = "sqrt(t)"
    with pytest.raises(InstanceLoadError, match="^f_expr: unknown identifier 'sqrt'"):
        _ = from_document(parse_document(json.dumps(raw)))


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(InstanceLoadError, match="cannot read"):
        _ = load_instance(tmp_path / "missing.json")


def test_banach_document_leaves_psi_out() -> None:
    doc = to_document(lookup("abs-half").instance)
    assert isinstance(doc, IntervalDocument)
    dumped = json.loads(dump_document(doc))
    assert "psi_expr" not in dumped
    assert dumped["banach_c"] == 0.5
    assert dumped["order"]["rel"] == "geq"


@pytest.mark.parametrize("name", [*ENTRIES, "random-9-7"])
def test_export_round_trip(tmp_path: Path, name: str) -> None:
    instance = lookup(name).instance
    loaded = load_instance(export_instance(instance, tmp_path / f"{name}.json"))
    assert loaded.label == instance.label
    assert certify_instance(loaded) == certify_instance(instance)
    assert picard_solve(loaded).fixed_point == picard_solve(instance).fixed_point
