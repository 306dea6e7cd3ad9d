"""Recovering a double extension from a flat non-Lie left Leibniz superalgebra."""

from __future__ import annotations

from dataclasses import dataclass

from ..bilinear import BilinearForm, SubSpace, orthogonal
from ..errors import DeconstructionError, ExtensionError, InternalInconsistency
from ..exactla import (
    ZERO,
    LinearMap,
    Parity,
    SuperSpace,
    Vector,
    particular_solution,
    rank,
    solve_linear,
    to_scalar,
)
from ..levicivita import is_flat, levi_civita
from ..structure import leibniz_ideal, verify_isometric_isomorphism
from ..superalg import IdentityKind, SuperAlgebra, check_identity
from ._common import fresh_label
from .double import SPECS, DoubleExtensionData, double_extension, variant_of


@dataclass(frozen=True)
class DeconstructionResult:
    """``change_of_basis`` maps the rebuilt extension onto the input algebra."""

    e_vector: Vector
    d_vector: Vector
    core: tuple
    data: DoubleExtensionData
    change_of_basis: LinearMap

    @property
    def variant(self) -> str:
        return self.data.variant


def _as_dense(v, space):
    if isinstance(v, Vector):
        return list(v.dense)
    if isinstance(v, dict):
        return list(Vector(space, v).dense)
    return [to_scalar(c) for c in v]


def _all_products_vanish(pair, x) -> bool:
    n = len(x)
    for alg in (pair.star, pair.circ):
        for j in range(n):
            b = [ZERO] * n
            b[j] = 1
            if any(alg.mul(x, b)) or any(alg.mul(b, x)):
                return False
    return True


def _choose_e(alg, form, pair):
    """First echelon vector of Leib ∩ Leib^⊥, even block first, killed by ⋆ and ∘."""
    J = leibniz_ideal(alg)
    if J.dim == 0:
        raise DeconstructionError("algebra is Lie (its Leibniz ideal is zero)", "non-Lie", None)
    K = J.intersection(orthogonal(form, J))
    if K.dim == 0:
        raise InternalInconsistency("Leib ∩ Leib^⊥ is zero for a flat non-Lie algebra")
    for p in (Parity.EVEN, Parity.ODD):
        for row in K.component(p).rows:
            if _all_products_vanish(pair, list(row)):
                return list(row), p
    raise DeconstructionError("no vector of Leib ∩ Leib^⊥ is annihilated by both products",
                              "isotropic ideal", tuple(K.basis_vectors))


def _check_lie_line(pair, form, e, par):
    """I = K e and I^⊥ must both be two-sided ideals of ⋆, with I isotropic."""
    space = form.space
    n = space.dim
    if form.pair_dense(e, e):
        raise DeconstructionError("e is not isotropic", "isotropic ideal", None)
    I = SubSpace(space, [e])
    Iperp = orthogonal(form, I)
    basis = [[1 if k == j else 0 for k in range(n)] for j in range(n)]
    for S, name in ((I, "I"), (Iperp, "I^⊥")):
        for x in S.rows:
            for b in basis:
                for prod in (pair.star.mul(list(x), b), pair.star.mul(b, list(x))):
                    if not S.contains(prod):
                        raise DeconstructionError(f"{name} is not a two-sided ideal of ⋆",
                                                  "ideal", None)


def _choose_d(form, e, epar):
    space = form.space
    n = space.dim
    dpar = Parity((epar + form.parity) % 2)
    par = space.parities
    d = None
    for j in range(n):
        if par[j] != dpar:
            continue
        b = [ZERO] * n
        b[j] = 1
        c = form.pair_dense(e, b)
        if c:
            d = [x / c for x in b]
            break
    if d is None:
        raise InternalInconsistency("nondegenerate form but e pairs to zero with a parity block")
    dd = form.pair_dense(d, d)
    if dd:
        # only reachable when e and d are both even: shift by a multiple of e
        d = [x - dd / 2 * y for x, y in zip(d, e)]
    if form.pair_dense(d, d) or form.pair_dense(e, d) != 1:
        raise InternalInconsistency("failed to normalize d")
    return d, dpar


def deconstruct_double_extension(alg: SuperAlgebra, form: BilinearForm, *, e=None,
                                 lie_mode: bool = False) -> DeconstructionResult:
    """Split off a hyperbolic pair (e, d) and read the extension data off the tables.

    In Leibniz mode ``e`` is chosen in Leib(A) ∩ Leib(A)^⊥.  In ``lie_mode``
    the caller supplies ``e`` spanning a totally isotropic ideal line.
    """
    flat = is_flat(alg, form)
    if not flat.holds:
        raise DeconstructionError("algebra is not flat: " + flat.counterexample.describe(),
                                  "flat", flat.counterexample.labels)
    space = alg.space
    n = space.dim
    par = space.parities
    pair = levi_civita(alg, form).as_disuperalgebra()
    if lie_mode:
        if not check_identity(alg, IdentityKind.LIE).holds:
            raise DeconstructionError("lie_mode needs a Lie superalgebra", "Lie", None)
        if e is None:
            raise DeconstructionError("lie_mode needs the isotropic ideal line e", "e", None)
        ev = _as_dense(e, space)
        ps = {par[k] for k, x in enumerate(ev) if x}
        if len(ps) != 1:
            raise DeconstructionError("e must be a nonzero homogeneous vector", "e", None)
        epar = Parity(ps.pop())
        _check_lie_line(pair, form, ev, par)
    elif e is not None:
        ev = _as_dense(e, space)
        ps = {par[k] for k, x in enumerate(ev) if x}
        if len(ps) != 1 or not _all_products_vanish(pair, ev):
            raise DeconstructionError("supplied e is not homogeneous or not annihilated by ⋆, ∘",
                                      "e", None)
        epar = Parity(ps.pop())
    else:
        ev, epar = _choose_e(alg, form, pair)
    d, dpar = _choose_d(form, ev, epar)
    variant = variant_of(form.parity, dpar)
    spec = SPECS[variant]
    de = form.pair_dense(d, ev)

    def split(x):
        """x = a e + h + b d; returns (a, h, b)."""
        b = form.pair_dense(x, ev) / de
        a = form.pair_dense(x, d)
        return a, [xi - a * ei - b * di for xi, ei, di in zip(x, ev, d)], b

    # basis of H from projections of the original basis
    chosen, hvecs = [], []
    for j in range(n):
        b = [ZERO] * n
        b[j] = 1
        h = split(b)[1]
        if any(h) and rank(hvecs + [h]) > len(hvecs):
            chosen.append(j)
            hvecs.append(h)
    if len(hvecs) != n - 2:
        raise InternalInconsistency("orthogonal complement of (e, d) has the wrong dimension")
    lab = space.labels
    core_space = SuperSpace(tuple(lab[j] for j in chosen if par[j] == 0),
                            tuple(lab[j] for j in chosen if par[j] == 1))
    order = [chosen[[lab[j] for j in chosen].index(l)] for l in core_space.labels]
    H = [hvecs[chosen.index(j)] for j in order]
    k = len(H)
    Hcols = [[H[c][r] for c in range(k)] for r in range(n)]

    def coords(h):
        if k == 0:
            return []
        x = particular_solution(Hcols, h, k)
        if x is None:
            raise InternalInconsistency("vector is not in H")
        return x

    def decompose(x, what):
        a, h, b = split(x)
        return a, coords(h), b

    # core algebra and form
    core_t = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            a, c, b = decompose(alg.mul(H[i], H[j]), "core product")
            if b:
                raise DeconstructionError("e ⊕ H is not closed under the product",
                                          "ideal", (core_space.labels[i], core_space.labels[j]))
            core_t[i][j] = c
    core_alg = SuperAlgebra(core_space, core_t)
    core_form = BilinearForm(core_space, form.parity,
                             [[form.pair_dense(H[i], H[j]) for j in range(k)] for i in range(k)])

    # data read off the Levi-Civita products
    def map_from(fn):
        cols = [decompose(fn(H[j]), "map")[1] for j in range(k)]
        return LinearMap(core_space, core_space,
                         [[cols[j][i] for j in range(k)] for i in range(k)], dpar)

    st, ci = pair.star, pair.circ
    delta = map_from(lambda h: st.mul(d, h))
    D = map_from(lambda h: st.mul(h, d))
    ds = map_from(lambda h: ci.mul(d, h))
    G = map_from(lambda h: ci.mul(h, d))
    ea, a0, alpha = decompose(st.mul(d, d), "d⋆d")
    eb, b0, beta = decompose(ci.mul(d, d), "d∘d")
    lam = ZERO
    if spec.lam_star:
        lam = ea / spec.lam_star
    # ⟨c0, h_j⟩ from the e-component of h_j ⋆ d
    rhs = [decompose(st.mul(H[j], d), "u⋆d")[0] / spec.c_star(core_space.parities[j], 0)
           for j in range(k)]
    if k:
        c0 = list(solve_linear([list(r) for r in zip(*core_form.matrix)], [rhs]).columns[0])
    else:
        c0 = []
    if not lie_mode:
        data = DoubleExtensionData(variant, delta, D, ds, G, Vector.from_dense(core_space, a0),
                                   Vector.from_dense(core_space, b0),
                                   Vector.from_dense(core_space, c0), alpha, lam)
    else:
        data = DoubleExtensionData(variant, delta, D, None, None,
                                   Vector.from_dense(core_space, a0), None,
                                   Vector.from_dense(core_space, c0), alpha, lam, True)
    try:
        ext = double_extension((core_alg, core_form), data)
    except ExtensionError as exc:
        raise InternalInconsistency(f"read-off data does not rebuild the algebra: {exc}") from exc
    big = ext.algebra.space
    e_label = fresh_label(core_space.labels, "e")
    d_label = fresh_label(set(core_space.labels) | {e_label}, "d")
    images = {e_label: Vector.from_dense(space, ev), d_label: Vector.from_dense(space, d)}
    for l, h in zip(core_space.labels, H):
        images[l] = Vector.from_dense(space, h)
    P = LinearMap.from_images(big, space, images, Parity.EVEN)
    check = verify_isometric_isomorphism((ext.algebra, ext.form), (alg, form), P)
    if not check.holds:
        raise InternalInconsistency("rebuilt double extension differs from the input: "
                                    + check.counterexample.describe())
    return DeconstructionResult(Vector.from_dense(space, ev), Vector.from_dense(space, d),
                                (core_alg, core_form), data, P)


def iterate_to_lie(alg: SuperAlgebra, form: BilinearForm) -> list:
    """Deconstruct repeatedly until the core is a Lie superalgebra."""
    out = []
    while not check_identity(alg, IdentityKind.LIE).holds:
        r = deconstruct_double_extension(alg, form)
        out.append(r)
        alg, form = r.core
    return out
