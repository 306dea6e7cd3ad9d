"""
Rebuilding the 2-step nilpotent quadratic tables
================================================

Each fixture stores a Lie bracket and a symmetric product μ.
Their sum gives the symmetric Leibniz product.  Where the rebuilt table and
the printed table disagree, we list the entries.
"""

from superleibniz import fixture
from superleibniz.cli.documents import algebra_from_document, products_from_list
from superleibniz.exactla import format_scalar
from superleibniz.structure import MuData, leibniz_from_lie_mu, quadratic_flat_report


def show(value):
    return " + ".join(f"{format_scalar(c)} {k}" for k, c in value.items()) or "0"


for name in ("quadratic-even4", "quadratic-even6", "quadratic-odd4", "quadratic-odd6"):
    doc = fixture(name)
    alg, form = algebra_from_document(doc)
    meta = doc["metadata"]
    space = alg.space
    rebuilt = leibniz_from_lie_mu(MuData(products_from_list(space, meta["lie_products"]),
                                         products_from_list(space, meta["mu_products"])))
    report = quadratic_flat_report(alg, form)
    print(f"{name}: sdim={space.sdim} flat={report.verdicts['flat']} "
          f"(A.A)^perp = Ann: {report.verdicts['(A.A)^perp = Ann']}")

    printed = products_from_list(space, meta["printed_products"]).structure_constants()
    ours = rebuilt.structure_constants()
    for key in sorted(set(printed) | set(ours)):
        if printed.get(key, {}) != ours.get(key, {}):
            print(f"    {key[0]}•{key[1]}: printed {show(printed.get(key, {}))}, rebuilt {show(ours.get(key, {}))}")
