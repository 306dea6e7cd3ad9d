"""
Levi-Civita products of a small quadratic superalgebra
======================================================

A (2|2) symmetric Leibniz superalgebra with an odd invariant form.
We solve for the Levi-Civita pair, look at its tables and check flatness.
"""

from superleibniz import fixture, is_flat, levi_civita
from superleibniz.cli.documents import algebra_from_document
from superleibniz.exactla import format_scalar


def show(value):
    return " + ".join(f"{format_scalar(c)} {k}" for k, c in value.items()) or "0"


alg, form = algebra_from_document(fixture("example2"))
print(alg.space.labels, "form parity:", form.parity.name.lower())

# the product itself
for (a, b), value in alg.structure_constants().items():
    print(f"  {a}•{b} =", show(value))

pair = levi_civita(alg, form)

# for a quadratic algebra the left product is half of •
print("star:")
for (a, b), value in pair.star.structure_constants().items():
    print(f"  {a}⋆{b} =", show(value))

# and the right one is half of • with the super flip, so f1∘f1 = -½ e1
print("circ:")
for (a, b), value in pair.circ.structure_constants().items():
    print(f"  {a}∘{b} =", show(value))

print("flat:", is_flat(alg, form).holds)
