"""
T* extensions of a trivial algebra and back
===========================================

Every reduced quadratic 2-step nilpotent algebra is a T* (or Π(T*))
extension of an abelian one.  Build one from a cyclic tensor, then recover
the tensor from the algebra alone.
"""

from superleibniz import is_flat
from superleibniz.exactla import SuperSpace, format_scalar
from superleibniz.extensions import (
    CocycleTensor,
    rebuild_from_reduction,
    reduce_to_t_star,
    t_star_extension,
    trivial_algebra,
)
from superleibniz.structure import verify_isometric_isomorphism


def show(value):
    return " + ".join(f"{format_scalar(c)} {k}" for k, c in value.items()) or "0"


h = SuperSpace(("a",), ("p",))
# cyclic: Ω(u,v,w) = (-1)^{|u|(|v|+|w|)} Ω(v,w,u)
omega = CocycleTensor.from_values(h, {
    ("a", "a", "a"): 1,
    ("a", "p", "p"): 2, ("p", "p", "a"): 2, ("p", "a", "p"): -2,
})
print("cyclic:", omega.is_cyclic() is None, "injective:", omega.injectivity_witness() is None)

ext = t_star_extension(trivial_algebra(h), omega)
alg, form = ext
print(alg.space.labels, ext.verdicts)
for (x, y), value in alg.structure_constants().items():
    print(f"  {x}•{y} =", show(value))
print("flat:", is_flat(alg, form).holds)

red = reduce_to_t_star(alg, form)
print("recovered Ω:", {k: format_scalar(v) for k, v in red.omega.nonzero().items()})
again = rebuild_from_reduction(red)
print("isometric:", verify_isometric_isomorphism((alg, form), tuple(again), red.iso).holds)
