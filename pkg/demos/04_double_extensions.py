"""
Double extensions and peeling them off
======================================

Start from the plane with a hyperbolic form, extend twice by a λ-line, then
let iterate_to_lie undo it one step at a time.
"""

from superleibniz import is_flat
from superleibniz.bilinear import build_form
from superleibniz.exactla import SuperSpace
from superleibniz.extensions import DoubleExtensionData, double_extension, iterate_to_lie
from superleibniz.superalg import SuperAlgebra, check_identity

V = SuperSpace(("x", "y"), ())
core = (SuperAlgebra.zero(V), build_form(V, "even", [("x", "y", 1)]))

once = double_extension(core, DoubleExtensionData(lam=1))
twice = double_extension(tuple(once), DoubleExtensionData(lam=3, a0={"x": 1}, b0={"x": 1}),
                         e_label="e2", d_label="d2")
for ext in (once, twice):
    alg, form = ext
    print(alg.space.labels, "flat:", is_flat(alg, form).holds,
          "lie:", check_identity(alg, "lie").holds, "notes:", ext.discrepancies or "none")

steps = iterate_to_lie(*twice)
for k, step in enumerate(steps, 1):
    print(f"step {k}: variant {step.variant}, λ = {step.data.lam}, core {step.core[0].space.labels}")
print("Lie core reached:", check_identity(steps[-1].core[0], "lie").holds)
