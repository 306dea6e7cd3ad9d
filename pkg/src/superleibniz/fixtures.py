"""The worked examples as algebra documents.

Each builder returns a plain dict in the document format read by
:func:`superleibniz.cli.documents.algebra_from_document`.  Where a printed
table disagrees with the table rebuilt from its defining data, the rebuilt
table is used and the printed one is kept under ``metadata["printed_products"]``.
"""

from __future__ import annotations

from fractions import Fraction

from .exactla import format_scalar, to_scalar


def _val(coeffs: dict) -> dict:
    return {k: format_scalar(to_scalar(v)) for k, v in coeffs.items() if to_scalar(v)}


def _products(entries) -> list:
    out = []
    for left, right, coeffs in entries:
        value = _val(coeffs)
        if value:
            out.append({"left": left, "right": right, "value": value})
    return out


def _form(parity, entries) -> dict:
    return {"parity": parity,
            "entries": [{"a": a, "b": b, "value": format_scalar(to_scalar(v))} for a, b, v in entries]}


def _doc(name, even, odd, products, form=None, metadata=None) -> dict:
    doc = {"name": name, "even_basis": list(even), "odd_basis": list(odd),
           "products": _products(products)}
    if form is not None:
        doc["form"] = form
    doc["metadata"] = dict(metadata or {})
    return doc


def example_six_dim_left_leibniz() -> dict:
    """Six-dimensional left Leibniz superalgebra whose form is not invariant."""
    products = [
        ("e1", "e1", {"e2": 1, "e3": 1}),
        ("e4", "e4", {"e2": 1}),
        ("f2", "e4", {"f1": 2}),
        ("e4", "f2", {"f1": -2}),
        ("f2", "f2", {"e2": 1, "e3": -2}),
        ("e1", "e4", {"e1": 1, "e3": 1}),
        ("e4", "e1", {"e1": 1, "e3": 1}),
        ("e1", "f2", {"f1": 1}),
        ("f2", "e1", {"f1": 1}),
    ]
    form = _form("even", [("e1", "e2", 1), ("e3", "e4", 1), ("f1", "f2", 1)])
    return _doc("six-dim left Leibniz", ["e1", "e2", "e3", "e4"], ["f1", "f2"], products, form,
                {"source": "six-dimensional left Leibniz example"})


def example_six_dim_printed_pair() -> dict:
    """The (⋆, ∘) tables printed alongside the six-dimensional example."""
    h = Fraction(1, 2)
    star = [
        ("e1", "e1", {"e2": h, "e3": h}),
        ("e4", "e4", {"e2": h}),
        ("f2", "e4", {"f1": 1}),
        ("e4", "f2", {"f1": -1}),
        ("f2", "f2", {"e2": h, "e3": -1}),
        ("e1", "e4", {"e1": h, "e3": h}),
        ("e4", "e1", {"e1": h, "e3": h}),
        ("e1", "f2", {"f1": h}),
        ("f2", "e1", {"f1": h}),
    ]
    circ = [
        ("e1", "e1", {"e2": h, "e3": h}),
        ("e4", "e4", {"e2": -h}),
        ("f2", "e4", {"f1": 1}),
        ("e4", "f2", {"f1": -1}),
        ("f2", "f2", {"e2": -h, "e3": 1}),
        ("e1", "e4", {"e1": h, "e3": h}),
        ("e4", "e1", {"e1": h, "e3": h}),
        ("e1", "f2", {"f1": h}),
        ("f2", "e1", {"f1": h}),
    ]
    return {"star": _products(star), "circ": _products(circ)}


def example_four_dim_odd_form() -> dict:
    """The flat (2|2) algebra with an odd form (e2•e2 = e1, ...)."""
    products = [
        ("e2", "e2", {"e1": 1}),
        ("e2", "f1", {"f2": 1}),
        ("f1", "e2", {"f2": 1}),
        ("f1", "f1", {"e1": 1}),
    ]
    form = _form("odd", [("e1", "f1", 1), ("e2", "f2", 1)])
    return _doc("four-dim flat, odd form", ["e1", "e2"], ["f1", "f2"], products, form,
                {"source": "four-dimensional odd-form example"})


def example_four_dim_printed_pair() -> dict:
    h = Fraction(1, 2)
    table = [
        ("e2", "e2", {"e1": h}),
        ("e2", "f1", {"f2": h}),
        ("f1", "e2", {"f2": h}),
        ("f1", "f1", {"e1": h}),
    ]
    return {"star": _products(table), "circ": _products(table)}


# ---------------------------------------------------------------------------
# quadratic 2-step nilpotent examples, given as (bracket, mu)

def quadratic_even4_data(alpha=1):
    even, odd = ["e1", "e2"], ["e3", "e4"]
    lie = [("e2", "e4", {"e3": 1}), ("e4", "e2", {"e3": -1}), ("e4", "e4", {"e1": 1})]
    mu = [("e2", "e2", {"e1": alpha})]
    form = [("e1", "e2", 1), ("e3", "e4", 1)]
    printed = [
        ("e2", "e2", {"e1": alpha}),
        ("e2", "e4", {"e3": 1}),
        ("e4", "e2", {"e3": -1}),
        ("e4", "e4", {"e1": 1}),
    ]
    return even, odd, lie, mu, ("even", form), printed


def quadratic_even6_data(alpha=1, beta=1):
    even, odd = ["e1", "e2"], ["e3", "e4", "e5", "e6"]
    lie = [
        ("e2", "e5", {"e3": 1}), ("e5", "e2", {"e3": -1}),
        ("e2", "e6", {"e4": 1}), ("e6", "e2", {"e4": -1}),
        ("e5", "e5", {"e1": 1}), ("e6", "e6", {"e1": 1}),
    ]
    # mu is supersymmetric: on the odd pair (e5, e6) it is antisymmetric
    mu = [
        ("e2", "e2", {"e1": alpha}),
        ("e2", "e5", {"e4": beta}), ("e5", "e2", {"e4": beta}),
        ("e2", "e6", {"e3": -beta}), ("e6", "e2", {"e3": -beta}),
        ("e5", "e6", {"e1": beta}), ("e6", "e5", {"e1": -beta}),
    ]
    form = [("e1", "e2", 1), ("e3", "e5", 1), ("e4", "e6", 1)]
    printed = [
        ("e2", "e2", {"e1": alpha}),
        ("e2", "e5", {"e3": 1, "e4": beta}),
        ("e2", "e6", {"e4": 1, "e3": -beta}),
        ("e5", "e2", {"e3": -1, "e4": beta}),
        ("e5", "e5", {"e1": 1}),
        ("e5", "e6", {"e1": beta}),
        ("e6", "e2", {"e4": -1, "e3": -beta}),
        ("e6", "e5", {"e1": beta}),
        ("e6", "e6", {"e1": 1}),
    ]
    return even, odd, lie, mu, ("even", form), printed


def quadratic_odd4_data(alpha=1):
    even, odd = ["e1", "e2"], ["f1", "f2"]
    lie = [("f1", "f1", {"e1": 1})]
    mu = [("e2", "e2", {"e1": alpha}), ("e2", "f1", {"f2": alpha}), ("f1", "e2", {"f2": alpha})]
    form = [("e1", "f1", 1), ("e2", "f2", 1)]
    printed = [
        ("e2", "e2", {"e1": alpha}),
        ("e2", "f1", {"f2": alpha}),
        ("f1", "e2", {"f2": alpha}),
        ("f1", "f1", {"e1": 1}),
    ]
    return even, odd, lie, mu, ("odd", form), printed


def quadratic_odd6_data(alpha=1, beta=1, lam=1):
    even, odd = ["e1", "e2", "e3"], ["f1", "f2", "f3"]
    lie = [
        ("e1", "e2", {"e3": 1}), ("e2", "e1", {"e3": -1}),
        ("e2", "f3", {"f1": 1}), ("f3", "e2", {"f1": -1}),
        ("e1", "f3", {"f2": -1}), ("f3", "e1", {"f2": 1}),
    ]
    mu = [
        ("e1", "e1", {"e3": alpha}),
        ("e1", "e2", {"e3": beta}), ("e2", "e1", {"e3": beta}),
        ("e2", "e2", {"e3": lam}),
        ("e1", "f3", {"f1": alpha, "f2": beta}), ("f3", "e1", {"f1": alpha, "f2": beta}),
        ("e2", "f3", {"f1": beta, "f2": lam}), ("f3", "e2", {"f1": beta, "f2": lam}),
    ]
    form = [("e1", "f1", 1), ("e2", "f2", 1), ("e3", "f3", 1)]
    printed = [
        ("e1", "e1", {"e3": alpha}),
        ("e1", "e2", {"e3": 1 + beta}),
        ("e2", "e1", {"e3": beta - 1}),
        ("e2", "e2", {"e3": lam}),
        ("e1", "f3", {"f1": 1 + alpha, "f2": beta}),
        ("f3", "e1", {"f1": alpha - 1, "f2": beta}),
        ("e2", "f3", {"f1": beta, "f2": lam - 1}),
        ("f3", "e2", {"f1": beta, "f2": lam + 1}),
    ]
    return even, odd, lie, mu, ("odd", form), printed


def _add_tables(*tables):
    acc: dict = {}
    for table in tables:
        for left, right, coeffs in table:
            cell = acc.setdefault((left, right), {})
            for k, v in coeffs.items():
                cell[k] = cell.get(k, 0) + to_scalar(v)
    return [(l, r, c) for (l, r), c in acc.items()]


def _quadratic_doc(name, data, source, params):
    even, odd, lie, mu, (parity, form), printed = data
    products = _add_tables(lie, mu)
    meta = {
        "source": source,
        "parameters": {k: format_scalar(to_scalar(v)) for k, v in params.items()},
        "lie_products": _products(lie),
        "mu_products": _products(mu),
        "printed_products": _products(printed),
    }
    return _doc(name, even, odd, products, _form(parity, form), meta)


def quadratic_even4(alpha=1) -> dict:
    return _quadratic_doc("quadratic even (2|2)", quadratic_even4_data(alpha),
                          "quadratic 2-step nilpotent, even form (2|2)", {"alpha": alpha})


def quadratic_even6(alpha=1, beta=1) -> dict:
    return _quadratic_doc("quadratic even (2|4)", quadratic_even6_data(alpha, beta),
                          "quadratic 2-step nilpotent, even form (2|4)", {"alpha": alpha, "beta": beta})


def quadratic_odd4(alpha=1) -> dict:
    return _quadratic_doc("odd-quadratic (2|2)", quadratic_odd4_data(alpha),
                          "quadratic 2-step nilpotent, odd form (2|2)", {"alpha": alpha})


def quadratic_odd6(alpha=1, beta=1, lam=1) -> dict:
    return _quadratic_doc("odd-quadratic (3|3)", quadratic_odd6_data(alpha, beta, lam),
                          "quadratic 2-step nilpotent, odd form (3|3)", {"alpha": alpha, "beta": beta, "lambda": lam})


FIXTURES = {
    "example1": example_six_dim_left_leibniz,
    "example2": example_four_dim_odd_form,
    "quadratic-even4": quadratic_even4,
    "quadratic-even6": quadratic_even6,
    "quadratic-odd4": quadratic_odd4,
    "quadratic-odd6": quadratic_odd6,
}

PAIR_FIXTURES = {
    "example1-printed-pair": example_six_dim_printed_pair,
    "example2-printed-pair": example_four_dim_printed_pair,
}


def fixture(name: str) -> dict:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
