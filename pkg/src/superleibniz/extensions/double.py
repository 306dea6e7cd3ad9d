"""Even and odd double extensions of flat pseudo-Euclidean left Leibniz superalgebras.

The enlarged space is ``K e ⊕ A ⊕ K d``.  ``d`` carries the line parity of
the variant and ``e`` pairs with it (``e`` has parity ``|d| + |form|``).  The
product tables are the printed ones; the only difference between variants
is a handful of signs on the ``e`` components and where α and λ may occur.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..bilinear import BilinearForm, adjoint_matrix
from ..errors import ExtensionError, InternalInconsistency
from ..exactla import ZERO, Parity, sign, to_scalar
from ..levicivita import is_flat, levi_civita, verify_pair
from ..superalg import (
    CheckReport,
    DiSuperAlgebra,
    IdentityKind,
    SuperAlgebra,
    admissible_product,
    check_identity,
)
from ._common import (
    Ctx,
    Extension,
    ExtendedPair,
    check_degree,
    check_even_vector,
    decide,
    dense_of,
    embed_tensor,
    evaluate_lines,
    extended_space,
    fresh_label,
    map_matrix,
)
from .semidirect import SEMIDIRECT_LINES
from .systems import (
    COMPATIBILITY_SYSTEMS,
    EVEN_FORM_EVEN_LINE,
    EVEN_FORM_ODD_LINE,
    LIE_SYSTEMS,
    ODD_FORM_EVEN_LINE,
    ODD_FORM_ODD_LINE,
    VARIANTS,
)


def variant_of(form_parity, line_parity) -> str:
    f, l = int(Parity.parse(form_parity)), int(Parity.parse(line_parity))
    return VARIANTS[2 * f + l]


def variant_parities(variant: str) -> tuple:
    """(form parity, parity of d, parity of e)."""
    if variant not in VARIANTS:
        raise ExtensionError(f"unknown variant {variant!r}; expected one of {VARIANTS}",
                             "variant", (variant,))
    k = VARIANTS.index(variant)
    f, l = Parity(k // 2), Parity(k % 2)
    return f, l, Parity((f + l) % 2)


@dataclass(frozen=True)
class _Spec:
    # signs on the e components, as functions of (|u|, |v|)
    mu: object
    gamma: object
    b: object
    a: object
    c_star: object
    c_circ: object
    # d⋆d = a0 + lam_star λ e + α d, d∘d = b0 + lam_circ λ e - α d
    lam_star: int
    lam_circ: int
    has_alpha: bool
    # d⋆e = -α e and d∘e = α e
    d_on_e: bool


_ONE = lambda pu, pv: 1  # noqa: E731

SPECS = {
    EVEN_FORM_EVEN_LINE: _Spec(_ONE, _ONE, _ONE, _ONE, _ONE, _ONE, 1, 1, True, True),
    EVEN_FORM_ODD_LINE: _Spec(
        mu=lambda pu, pv: sign(pv), gamma=lambda pu, pv: -sign(pu), b=lambda pu, pv: sign(pu),
        a=_ONE, c_star=_ONE, c_circ=lambda pu, pv: -sign(pu),
        lam_star=0, lam_circ=0, has_alpha=False, d_on_e=False),
    ODD_FORM_EVEN_LINE: _Spec(_ONE, _ONE, _ONE, _ONE, _ONE, _ONE, 0, 0, True, True),
    ODD_FORM_ODD_LINE: _Spec(
        mu=lambda pu, pv: sign(pv), gamma=lambda pu, pv: sign(pu), b=lambda pu, pv: sign(pu),
        a=lambda pu, pv: -1, c_star=_ONE, c_circ=lambda pu, pv: sign(pu),
        lam_star=1, lam_circ=-1, has_alpha=False, d_on_e=False),
}


@dataclass(frozen=True)
class DoubleExtensionData:
    """The data (δ, D, δ*, G, a0, b0, c0, α, λ) of a double extension.

    Maps may be :class:`LinearMap` objects or square matrices on the core,
    vectors :class:`Vector` objects, label maps or dense lists; ``None``
    means zero.  When ``delta_star`` is ``None`` it defaults to the graded
    adjoint of ``delta``.  ``lam`` is λ.  In ``lie_mode`` the maps
    δ*, G and b0 are forced to -δ, -D and -a0.
    """

    variant: str = EVEN_FORM_EVEN_LINE
    delta: object = None
    D: object = None
    delta_star: object = None
    G: object = None
    a0: object = None
    b0: object = None
    c0: object = None
    alpha: object = 0
    lam: object = 0
    lie_mode: bool = False

    @classmethod
    def zero(cls, variant: str = EVEN_FORM_EVEN_LINE, lie_mode: bool = False, **kw):
        variant_parities(variant)
        return cls(variant=variant, lie_mode=lie_mode, **kw)

    @classmethod
    def lie(cls, variant: str, delta=None, D=None, a0=None, alpha=0, c0=None, lam=0):
        """Data for the Lie corollaries: only δ, D, a0, α (and c0, λ for odd lines)."""
        return cls(variant=variant, delta=delta, D=D, a0=a0, alpha=alpha, c0=c0, lam=lam,
                   lie_mode=True)

    @property
    def form_parity(self) -> Parity:
        return variant_parities(self.variant)[0]

    @property
    def line_parity(self) -> Parity:
        return variant_parities(self.variant)[1]


@dataclass(frozen=True)
class _Resolved:
    maps: dict          # delta, D, ds, G, Dst, Gst as matrices on the core
    vectors: dict       # a0, b0, c0 as dense lists
    alpha: object
    lam: object


def _neg(m):
    return [[-x for x in row] for row in m]


def _resolve(core_pair: DiSuperAlgebra, form: BilinearForm, data: DoubleExtensionData) -> _Resolved:
    space = form.space
    _, line, _ = variant_parities(data.variant)
    spec = SPECS[data.variant]
    alpha, lam = to_scalar(data.alpha), to_scalar(data.lam)
    if alpha and not spec.has_alpha:
        raise ExtensionError(f"α must vanish in the {data.variant} variant", "alpha",
                             (str(alpha),))
    if lam and not (spec.lam_star or spec.lam_circ):
        raise ExtensionError(
            f"λ has no slot in the {data.variant} table (e is odd, d⋆d is even)",
            "lambda", (str(lam),))
    delta = map_matrix(data.delta, space)
    D = map_matrix(data.D, space)
    a0 = dense_of(data.a0, space)
    c0 = dense_of(data.c0, space)
    if data.lie_mode:
        forced = {"delta_star": _neg(delta), "G": _neg(D), "b0": [-x for x in a0]}
        given = {"delta_star": data.delta_star, "G": data.G, "b0": data.b0}
        for k, v in given.items():
            if v is None:
                continue
            got = dense_of(v, space) if k == "b0" else map_matrix(v, space)
            if got != forced[k]:
                raise ExtensionError(f"{k} must equal its Lie specialization in lie_mode",
                                     "lie specialization", (k,))
        ds, G, b0 = forced["delta_star"], forced["G"], forced["b0"]
        if data.variant in (EVEN_FORM_EVEN_LINE, ODD_FORM_EVEN_LINE):
            if any(c0):
                raise ExtensionError("c0 must vanish for an even Lie double extension",
                                     "c0 = 0", ("c0",))
            if lam:
                raise ExtensionError("λ must vanish for an even Lie double extension",
                                     "λ = 0", (str(lam),))
    else:
        G = map_matrix(data.G, space)
        b0 = dense_of(data.b0, space)
        ds = (adjoint_matrix(form, delta, line) if data.delta_star is None
              else map_matrix(data.delta_star, space))
    maps = {"delta": delta, "D": D, "ds": ds, "G": G}
    for k, m in maps.items():
        check_degree(m, space, line, k)
    for k, v in (("a0", a0), ("b0", b0), ("c0", c0)):
        check_even_vector(v, space, k)
    maps["Dst"] = adjoint_matrix(form, D, line)
    maps["Gst"] = adjoint_matrix(form, G, line)
    return _Resolved(maps, {"a0": a0, "b0": b0, "c0": c0}, alpha, lam)


def _col(m, j):
    return [row[j] for row in m]


def double_extension_tables(core_pair: DiSuperAlgebra, form: BilinearForm,
                            data: DoubleExtensionData, e_label="e", d_label="d"):
    """Build (⋆̄, ∘̄, form) on K e ⊕ A ⊕ K d without validating anything."""
    res = _resolve(core_pair, form, data)
    return _tables(core_pair, form, data.variant, res, e_label, d_label)


def _tables(core_pair, form, variant, res: _Resolved, e_label, d_label):
    fpar, line, epar = variant_parities(variant)
    spec = SPECS[variant]
    space = form.space
    n = space.dim
    par = space.parities
    e_label = fresh_label(space.labels, e_label)
    d_label = fresh_label(set(space.labels) | {e_label}, d_label)
    big = extended_space(space, before=[(e_label, epar)], after=[(d_label, line)])
    ie, idd = big.index(e_label), big.index(d_label)
    idx = [big.index(l) for l in space.labels]
    M = form.matrix
    m = res.maps
    v = res.vectors
    alpha, lam = res.alpha, res.lam

    def ip_col(x, j):
        # ⟨x, b_j⟩
        return sum((x[k] * M[k][j] for k in range(n) if x[k]), ZERO)

    st = embed_tensor(core_pair.star, big)
    ci = embed_tensor(core_pair.circ, big)
    for i in range(n):
        Gi, Di = _col(m["G"], i), _col(m["D"], i)
        for j in range(n):
            st[idx[i]][idx[j]][ie] += spec.mu(par[i], par[j]) * ip_col(Gi, j)
            ci[idx[i]][idx[j]][ie] += spec.gamma(par[i], par[j]) * ip_col(Di, j)
    for j in range(n):
        pu = par[j]
        for k in range(n):
            st[idd][idx[j]][idx[k]] += m["delta"][k][j]
            st[idx[j]][idd][idx[k]] += m["D"][k][j]
            ci[idd][idx[j]][idx[k]] += m["ds"][k][j]
            ci[idx[j]][idd][idx[k]] += m["G"][k][j]
        st[idd][idx[j]][ie] += spec.b(pu, 0) * ip_col(v["b0"], j)
        st[idx[j]][idd][ie] += spec.c_star(pu, 0) * ip_col(v["c0"], j)
        ci[idd][idx[j]][ie] += spec.a(pu, 0) * ip_col(v["a0"], j)
        ci[idx[j]][idd][ie] += spec.c_circ(pu, 0) * ip_col(v["c0"], j)
    for k in range(n):
        st[idd][idd][idx[k]] += v["a0"][k]
        ci[idd][idd][idx[k]] += v["b0"][k]
    st[idd][idd][ie] += spec.lam_star * lam
    ci[idd][idd][ie] += spec.lam_circ * lam
    if spec.has_alpha:
        st[idd][idd][idd] += alpha
        ci[idd][idd][idd] -= alpha
    if spec.d_on_e:
        st[idd][ie][ie] -= alpha
        ci[idd][ie][ie] += alpha
    G = [[ZERO] * big.dim for _ in range(big.dim)]
    for i in range(n):
        for j in range(n):
            G[idx[i]][idx[j]] = M[i][j]
    # ⟨e, d⟩ = 1 and ⟨d, e⟩ follows by supersymmetry
    G[ie][idd] = 1
    G[idd][ie] = sign(epar * line)
    return SuperAlgebra(big, st), SuperAlgebra(big, ci), BilinearForm(big, fpar, G)


def _both(*reports) -> CheckReport:
    for r in reports:
        if not r.holds:
            return r
    return reports[-1]


def double_extension(core, data: DoubleExtensionData, *, e_label: str = "e",
                     d_label: str = "d") -> Extension:
    """Double extension of a flat pseudo-Euclidean left Leibniz superalgebra.

    ``core`` is an ``(algebra, form)`` pair.  The built products are
    accepted when they form a pre-left-Leibniz pair that is the Levi-Civita
    pair of the new form (this is exactly flatness).  The admissibility and
    compatibility lines are evaluated alongside and either explain a
    rejection or are reported as discrepancies.
    """
    alg, form = core
    fpar, line, _ = variant_parities(data.variant)
    if form.parity != fpar:
        raise ExtensionError(f"variant {data.variant} needs a {fpar} form, core form is "
                             f"{form.parity}", "variant", (data.variant,))
    flat = is_flat(alg, form)
    if not flat.holds:
        raise ExtensionError("core is not flat: " + flat.counterexample.describe(),
                             "flat core", flat.counterexample.labels)
    if data.lie_mode:
        lie = check_identity(alg, IdentityKind.LIE)
        if not lie.holds:
            raise ExtensionError("lie_mode needs a Lie core: " + lie.counterexample.describe(),
                                 "Lie core", lie.counterexample.labels)
    pair = levi_civita(alg, form).as_disuperalgebra()
    res = _resolve(pair, form, data)
    star, circ, big_form = _tables(pair, form, data.variant, res, e_label, d_label)

    ctx = Ctx(pair, form, res.maps, res.vectors, {"alpha": res.alpha, "lam": res.lam}, line)
    adm_ctx = Ctx(pair, form, {"delta": res.maps["delta"], "D": res.maps["D"],
                               "xi": res.maps["ds"], "G": res.maps["G"]},
                  {"a0": res.vectors["a0"], "b0": res.vectors["b0"]},
                  {"alpha": res.alpha, "beta": -res.alpha}, line)
    system = LIE_SYSTEMS[data.variant] if data.lie_mode else COMPATIBILITY_SYSTEMS[data.variant]
    lines = evaluate_lines(adm_ctx, SEMIDIRECT_LINES) + evaluate_lines(ctx, system)

    new_pair = DiSuperAlgebra(star, circ)
    bullet = admissible_product(new_pair)
    reports = [check_identity(new_pair, IdentityKind.PRE_LEFT_LEIBNIZ),
               verify_pair(bullet, big_form, star, circ)]
    if data.lie_mode:
        reports.append(check_identity(bullet, IdentityKind.LIE))
    ground = _both(*reports)
    what = f"{data.variant} double extension"
    disc = decide(ground, lines, what)
    out_flat = is_flat(bullet, big_form)
    if not out_flat.holds:
        raise InternalInconsistency(f"{what} passed its checks but is not flat: "
                                    + out_flat.counterexample.describe())
    verdicts = {"pre-left-leibniz": True, "levi-civita": True, "flat": True}
    if data.lie_mode:
        verdicts["lie"] = True
    return Extension(bullet, big_form, ExtendedPair(star, circ, lines, disc), verdicts,
                     tuple(lines), disc)


def composed_tables(core, data: DoubleExtensionData, e_label="e", d_label="d") -> DiSuperAlgebra:
    """The same tables obtained as a central extension followed by a semidirect product.

    Follows the two-step construction for the even-form variants with an
    even or odd line: first adjoin the central line e with
    μ, γ read off the table, then adjoin d with the primed tuple on A ⊕ K e.
    """
    from .central import CentralExtensionData, central_extension
    from .semidirect import AdmissibleTuple, semidirect_tables

    alg, form = core
    if data.variant not in (EVEN_FORM_EVEN_LINE, EVEN_FORM_ODD_LINE):
        raise ExtensionError("composition is only spelled out for even forms", "variant",
                             (data.variant,))
    fpar, line, epar = variant_parities(data.variant)
    spec = SPECS[data.variant]
    pair = levi_civita(alg, form).as_disuperalgebra()
    res = _resolve(pair, form, data)
    space = form.space
    n = space.dim
    par = space.parities
    M = form.matrix
    m, v = res.maps, res.vectors

    def ip_col(x, j):
        return sum((x[k] * M[k][j] for k in range(n) if x[k]), ZERO)

    mu = [[spec.mu(par[i], par[j]) * ip_col(_col(m["G"], i), j) for j in range(n)]
          for i in range(n)]
    ga = [[spec.gamma(par[i], par[j]) * ip_col(_col(m["D"], i), j) for j in range(n)]
          for i in range(n)]
    e_label = fresh_label(space.labels, e_label)
    tilde = central_extension(pair, CentralExtensionData.from_tables(mu, ga), epar, e_label)
    tsp = tilde.space
    N = tsp.dim
    ie = tsp.index(e_label)
    idx = [tsp.index(l) for l in space.labels]

    def primed(core_map, vec, vsign, e_to_e):
        out = [[ZERO] * N for _ in range(N)]
        for j in range(n):
            for k in range(n):
                out[idx[k]][idx[j]] = core_map[k][j]
            out[ie][idx[j]] = vsign(par[j], 0) * ip_col(vec, j)
        out[ie][ie] = e_to_e
        return out

    alpha = res.alpha if spec.d_on_e else ZERO
    t = AdmissibleTuple(
        delta=primed(m["delta"], v["b0"], spec.b, -alpha),
        D=primed(m["D"], v["c0"], spec.c_star, ZERO),
        xi=primed(m["ds"], v["a0"], spec.a, alpha),
        G=primed(m["G"], v["c0"], spec.c_circ, ZERO),
        a0=embed_vec(v["a0"], idx, N, ie, spec.lam_star * res.lam),
        b0=embed_vec(v["b0"], idx, N, ie, spec.lam_circ * res.lam),
        alpha=res.alpha if spec.has_alpha else 0,
        beta=-res.alpha if spec.has_alpha else 0,
    )
    d_label = fresh_label(set(tsp.labels), d_label)
    star, circ = semidirect_tables(tilde, t, line, d_label)
    return DiSuperAlgebra(star, circ)


def embed_vec(x, idx, N, ie, e_coef):
    out = [ZERO] * N
    for k, c in enumerate(x):
        out[idx[k]] = c
    out[ie] += e_coef
    return out
