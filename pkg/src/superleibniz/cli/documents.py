"""JSON documents for algebras, product pairs and reports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from ..bilinear import BilinearForm, build_form
from ..errors import SuperLeibnizError
from ..exactla import Parity, SuperSpace, Vector, format_scalar, to_scalar
from ..superalg import DiSuperAlgebra, SuperAlgebra


class DocumentError(SuperLeibnizError, ValueError):
    """Malformed input document."""


ALGEBRA_KEYS = ("name", "even_basis", "odd_basis", "products", "form", "metadata")
PRODUCT_KEYS = ("left", "right", "value")
FORM_KEYS = ("parity", "entries")
ENTRY_KEYS = ("a", "b", "value")
PAIR_KEYS = ("name", "star", "circ", "metadata")


def _check_keys(obj, allowed, required, where):
    if not isinstance(obj, Mapping):
        raise DocumentError(f"{where}: expected an object")
    unknown = sorted(set(obj) - set(allowed))
    if unknown:
        raise DocumentError(f"{where}: unknown field(s) {unknown}")
    missing = [k for k in required if k not in obj]
    if missing:
        raise DocumentError(f"{where}: missing field(s) {missing}")


def _scalar(value, where):
    if isinstance(value, float):
        raise DocumentError(f"{where}: floats are not allowed, write rationals as strings")
    try:
        return to_scalar(value)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"{where}: {exc}") from None


def space_from_document(doc) -> SuperSpace:
    for key in ("even_basis", "odd_basis"):
        if not isinstance(doc.get(key), list) or not all(isinstance(x, str) for x in doc[key]):
            raise DocumentError(f"{key} must be a list of strings")
    try:
        return SuperSpace(tuple(doc["even_basis"]), tuple(doc["odd_basis"]))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def products_from_list(space: SuperSpace, items, where="products") -> SuperAlgebra:
    if not isinstance(items, list):
        raise DocumentError(f"{where} must be a list")
    table = {}
    for n, item in enumerate(items):
        loc = f"{where}[{n}]"
        _check_keys(item, PRODUCT_KEYS, PRODUCT_KEYS, loc)
        key = (item["left"], item["right"])
        for label in key:
            if label not in space.labels:
                raise DocumentError(f"{loc}: unknown label {label!r}")
        if key in table:
            raise DocumentError(f"{loc}: duplicate product {key[0]} * {key[1]}")
        value = item["value"]
        if not isinstance(value, Mapping):
            raise DocumentError(f"{loc}: value must map labels to rationals")
        coords = {}
        for label, c in value.items():
            if label not in space.labels:
                raise DocumentError(f"{loc}: unknown label {label!r}")
            coords[label] = _scalar(c, f"{loc}.value[{label}]")
        table[key] = Vector(space, coords)
    return SuperAlgebra.from_products(space, table)


def form_from_document(space: SuperSpace, form_doc) -> BilinearForm:
    _check_keys(form_doc, FORM_KEYS, FORM_KEYS, "form")
    try:
        parity = Parity.parse(form_doc["parity"])
    except ValueError as exc:
        raise DocumentError(f"form.parity: {exc}") from None
    entries = []
    if not isinstance(form_doc["entries"], list):
        raise DocumentError("form.entries must be a list")
    for n, e in enumerate(form_doc["entries"]):
        loc = f"form.entries[{n}]"
        _check_keys(e, ENTRY_KEYS, ENTRY_KEYS, loc)
        for label in (e["a"], e["b"]):
            if label not in space.labels:
                raise DocumentError(f"{loc}: unknown label {label!r}")
        entries.append((e["a"], e["b"], _scalar(e["value"], loc)))
    return build_form(space, parity, entries)


def algebra_from_document(doc) -> tuple:
    """Validate a document and return ``(algebra, form or None)``."""
    _check_keys(doc, ALGEBRA_KEYS, ("even_basis", "odd_basis"), "document")
    space = space_from_document(doc)
    alg = products_from_list(space, doc.get("products", []))
    form = form_from_document(space, doc["form"]) if doc.get("form") is not None else None
    return alg, form


def pair_from_document(space: SuperSpace, doc) -> DiSuperAlgebra:
    _check_keys(doc, PAIR_KEYS, ("star", "circ"), "pair document")
    return DiSuperAlgebra(products_from_list(space, doc["star"], "star"),
                          products_from_list(space, doc["circ"], "circ"))


def read_json(path) -> object:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: JSON parse error at line {exc.lineno}, column {exc.colno}: "
                            f"{exc.msg}") from None


def load_algebra(path) -> tuple:
    return algebra_from_document(read_json(path))


def products_to_list(alg: SuperAlgebra) -> list:
    out = []
    for (a, b), coeffs in alg.structure_constants().items():
        out.append({"left": a, "right": b,
                    "value": {k: format_scalar(v) for k, v in coeffs.items()}})
    return out


def form_to_document(form: BilinearForm) -> dict:
    lab = form.space.labels
    entries = []
    n = form.space.dim
    for i in range(n):
        for j in range(n):
            v = form.matrix[i][j]
            if v:
                entries.append({"a": lab[i], "b": lab[j], "value": format_scalar(v)})
    return {"parity": str(form.parity), "entries": entries}


def document_from_algebra(alg: SuperAlgebra, form: BilinearForm | None = None,
                          name: str = "", metadata: Mapping | None = None) -> dict:
    doc = {
        "name": name,
        "even_basis": list(alg.space.even_basis),
        "odd_basis": list(alg.space.odd_basis),
        "products": products_to_list(alg),
    }
    if form is not None:
        doc["form"] = form_to_document(form)
    doc["metadata"] = dict(metadata or {})
    return doc


def pair_to_document(star: SuperAlgebra, circ: SuperAlgebra, name: str = "") -> dict:
    return {"name": name, "star": products_to_list(star), "circ": products_to_list(circ)}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
