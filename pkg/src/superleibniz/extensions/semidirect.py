"""Semidirect products of a pre-left-Leibniz pair by a line K d."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ExtensionError, NotLeibniz
from ..exactla import Parity, sign, to_scalar
from ..superalg import DiSuperAlgebra, IdentityKind, SuperAlgebra, check_identity
from ._common import (
    Ctx,
    ExtendedPair,
    Line,
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


@dataclass(frozen=True)
class AdmissibleTuple:
    """Data (δ, D, ξ, G, a0, b0, α, β) for adjoining d.

    Maps may be :class:`LinearMap` objects or square matrices on the base;
    vectors may be :class:`Vector` objects, label maps or dense lists.
    """

    delta: object = None
    D: object = None
    xi: object = None
    G: object = None
    a0: object = None
    b0: object = None
    alpha: object = 0
    beta: object = 0

    @classmethod
    def zero(cls) -> "AdmissibleTuple":
        return cls()


def _s(ctx, i):
    """(-1)^{|u||d|} for u = b_i."""
    return sign(ctx.p(i) * ctx.degree)


def _uv(ctx, i, j):
    return ctx.basis(i), ctx.basis(j), sign(ctx.p(i) * ctx.p(j))


def semidirect_lines() -> list:
    """The identity list for admissible tuples, one :class:`Line` per printed equation."""
    L = []

    def add(name, arity):
        def deco(fn):
            L.append(Line(name, arity, fn))
            return fn
        return deco

    @add("D(u•v) = u⋆D(v) - (-1)^{|u||v|} v⋆D(u)", 2)
    def _(c, i, j):
        u, v, s = _uv(c, i, j)
        return c.D(c.bullet(u, v)), c.star(u, c.D(v)) - s * c.star(v, c.D(u))

    @add("D(u)⋆v - u⋆δ(v) = -(-1)^{|u||d|}(ξ(u)⋆v + δ(u⋆v))", 2)
    def _(c, i, j):
        u, v, _s2 = _uv(c, i, j)
        return (c.star(c.D(u), v) - c.star(u, c.delta(v)),
                -_s(c, i) * (c.star(c.xi(u), v) + c.delta(c.star(u, v))))

    @add("D²(u) - u⋆a0 - αD(u) = -(-1)^{|u||d|}(D(ξ(u)) + δ(D(u)))", 1)
    def _(c, i):
        u = c.basis(i)
        return (c.D(c.D(u)) - c.star(u, c.a0) - c.alpha * c.D(u),
                -_s(c, i) * (c.D(c.xi(u)) + c.delta(c.D(u))))

    @add("δ(u)⋆v - δ(u⋆v) = -(-1)^{|u||d|}(G(u)⋆v + u⋆δ(v))", 2)
    def _(c, i, j):
        u, v, _s2 = _uv(c, i, j)
        return (c.star(c.delta(u), v) - c.delta(c.star(u, v)),
                -_s(c, i) * (c.star(c.G(u), v) + c.star(u, c.delta(v))))

    @add("D(δ(u)) - δ(D(u)) = -(-1)^{|d||u|}(D(G(u)) + u⋆a0 + αD(u))", 1)
    def _(c, i):
        u = c.basis(i)
        return (c.D(c.delta(u)) - c.delta(c.D(u)),
                -_s(c, i) * (c.D(c.G(u)) + c.star(u, c.a0) + c.alpha * c.D(u)))

    @add("(1-(-1)^{|d|})δ²(u) - δ(u)(α+(-1)^{|d|}β) = a0⋆u + (-1)^{|d|} b0⋆u", 1)
    def _(c, i):
        u = c.basis(i)
        sd = sign(c.degree)
        return ((1 - sd) * c.delta(c.delta(u)) - (c.alpha + sd * c.beta) * c.delta(u),
                c.star(c.a0, u) + sd * c.star(c.b0, u))

    @add("D(a0+(-1)^{|d|}b0) - (1-(-1)^{|d|})δ(a0) = -(-1)^{|d|}(α+β)a0", 0)
    def _(c):
        sd = sign(c.degree)
        return (c.D(c.a0 + sd * c.b0) - (1 - sd) * c.delta(c.a0),
                -sd * (c.alpha + c.beta) * c.a0)

    @add("G(u•v) = u⋆G(v) + (-1)^{|u||v|} v∘G(u)", 2)
    def _(c, i, j):
        u, v, s = _uv(c, i, j)
        return c.G(c.bullet(u, v)), c.star(u, c.G(v)) + s * c.circ(v, c.G(u))

    @add("D(u)∘v - u⋆ξ(v) = -(-1)^{|u||d|}(ξ(u)∘v - ξ(u∘v))", 2)
    def _(c, i, j):
        u, v, _s2 = _uv(c, i, j)
        return (c.circ(c.D(u), v) - c.star(u, c.xi(v)),
                -_s(c, i) * (c.circ(c.xi(u), v) - c.xi(c.circ(u, v))))

    @add("G(D(u)) - u⋆b0 - βD(u) = -(-1)^{|u||d|}(G(ξ(u)) - ξ(G(u)))", 1)
    def _(c, i):
        u = c.basis(i)
        return (c.G(c.D(u)) - c.star(u, c.b0) - c.beta * c.D(u),
                -_s(c, i) * (c.G(c.xi(u)) - c.xi(c.G(u))))

    @add("δ(u)∘v - δ(u∘v) = -(-1)^{|u||d|}(G(u)∘v - u∘ξ(v))", 2)
    def _(c, i, j):
        u, v, _s2 = _uv(c, i, j)
        return (c.circ(c.delta(u), v) - c.delta(c.circ(u, v)),
                -_s(c, i) * (c.circ(c.G(u), v) - c.circ(u, c.xi(v))))

    @add("G(δ(u)) - δ(G(u)) = -(-1)^{|u||d|}(G²(u) - u∘b0 - βG(u))", 1)
    def _(c, i):
        u = c.basis(i)
        return (c.G(c.delta(u)) - c.delta(c.G(u)),
                -_s(c, i) * (c.G(c.G(u)) - c.circ(u, c.b0) - c.beta * c.G(u)))

    @add("a0∘u + αξ(u) - δ(ξ(u)) = -(-1)^{|d|}(b0∘u + βξ(u) - ξ²(u))", 1)
    def _(c, i):
        u = c.basis(i)
        sd = sign(c.degree)
        return (c.circ(c.a0, u) + c.alpha * c.xi(u) - c.delta(c.xi(u)),
                -sd * (c.circ(c.b0, u) + c.beta * c.xi(u) - c.xi(c.xi(u))))

    @add("G(a0) - δ(b0) + αb0 - βa0 = -(-1)^{|d|}(G(b0) - ξ(b0))", 0)
    def _(c):
        sd = sign(c.degree)
        return (c.G(c.a0) - c.delta(c.b0) + c.alpha * c.b0 - c.beta * c.a0,
                -sd * (c.G(c.b0) - c.xi(c.b0)))

    @add("u∘G(v) = -u∘D(v)", 2)
    def _(c, i, j):
        u, v, _s2 = _uv(c, i, j)
        return c.circ(u, c.G(v)), -c.circ(u, c.D(v))

    @add("u∘ξ(v) = -u∘δ(v)", 2)
    def _(c, i, j):
        u, v, _s2 = _uv(c, i, j)
        return c.circ(u, c.xi(v)), -c.circ(u, c.delta(v))

    @add("u∘a0 + u∘b0 = -(α+β)G(u)", 1)
    def _(c, i):
        u = c.basis(i)
        return c.circ(u, c.a0) + c.circ(u, c.b0), -(c.alpha + c.beta) * c.G(u)

    @add("ξ(u∘v) = -ξ(u⋆v)", 2)
    def _(c, i, j):
        u, v, _s2 = _uv(c, i, j)
        return c.xi(c.circ(u, v)), -c.xi(c.star(u, v))

    @add("ξ(G(u)) = -ξ(D(u))", 1)
    def _(c, i):
        u = c.basis(i)
        return c.xi(c.G(u)), -c.xi(c.D(u))

    @add("ξ²(u) = -ξ(δ(u))", 1)
    def _(c, i):
        u = c.basis(i)
        return c.xi(c.xi(u)), -c.xi(c.delta(u))

    @add("ξ(b0 + a0) = -(α+β)b0", 0)
    def _(c):
        return c.xi(c.b0 + c.a0), -(c.alpha + c.beta) * c.b0

    @add("α² = β²", 0)
    def _(c):
        return c.alpha ** 2, c.beta ** 2

    @add("β² = -αβ", 0)
    def _(c):
        return c.beta ** 2, -c.alpha * c.beta

    return L


SEMIDIRECT_LINES = semidirect_lines()


def _context(base: DiSuperAlgebra, t: AdmissibleTuple, degree) -> Ctx:
    space = base.space
    maps = {k: map_matrix(getattr(t, k), space) for k in ("delta", "D", "xi", "G")}
    vectors = {"a0": dense_of(t.a0, space), "b0": dense_of(t.b0, space)}
    for k, m in maps.items():
        check_degree(m, space, degree, k)
    for k, v in vectors.items():
        check_even_vector(v, space, k)
    return Ctx(base, None, maps, vectors, {"alpha": t.alpha, "beta": t.beta}, degree)


def semidirect_equations(base: DiSuperAlgebra, t: AdmissibleTuple, line_parity=Parity.EVEN) -> list:
    ctx = _context(base, t, Parity.parse(line_parity))
    return evaluate_lines(ctx, SEMIDIRECT_LINES)


def semidirect_tables(base: DiSuperAlgebra, t: AdmissibleTuple, line_parity, label="d") -> tuple:
    """The (⋆, ∘) tables on A ⊕ K d, without validation."""
    degree = Parity.parse(line_parity)
    space = base.space
    ctx = _context(base, t, degree)
    alpha, beta = to_scalar(t.alpha), to_scalar(t.beta)
    if degree and (alpha or beta):
        raise ExtensionError("α and β must vanish for an odd line (d•d is even)", "degree",
                             (label, label))
    label = fresh_label(space.labels, label)
    big = extended_space(space, after=[(label, degree)])
    idd = big.index(label)
    idx = [big.index(l) for l in space.labels]
    n = space.dim
    tables = []
    for alg, dd_vec, dd_coef, left, right in (
        (base.star, ctx.a0, alpha, ctx._maps["delta"], ctx._maps["D"]),
        (base.circ, ctx.b0, beta, ctx._maps["xi"], ctx._maps["G"]),
    ):
        tt = embed_tensor(alg, big)
        for k, c in enumerate(dd_vec.c):
            tt[idd][idd][idx[k]] += c
        tt[idd][idd][idd] += dd_coef
        for j in range(n):
            for k in range(n):
                tt[idd][idx[j]][idx[k]] += left[k][j]
                tt[idx[j]][idd][idx[k]] += right[k][j]
        tables.append(SuperAlgebra(big, tt))
    return tables[0], tables[1]


def semidirect_product(base: DiSuperAlgebra, t: AdmissibleTuple, line_parity=Parity.EVEN,
                       label: str = "d") -> ExtendedPair:
    """Adjoin d with d⋆d = a0 + αd, d⋆u = δ(u), u⋆d = D(u) and the ∘ analogues."""
    pre = check_identity(base, IdentityKind.PRE_LEFT_LEIBNIZ)
    if not pre.holds:
        raise NotLeibniz("base is not pre-left-Leibniz: " + pre.counterexample.describe(),
                         pre.counterexample.equation, pre.counterexample.labels)
    if to_scalar(t.beta) != -to_scalar(t.alpha):
        raise ExtensionError(f"β = {t.beta} but admissible tuples need β = -α",
                             "α = -β", (str(t.alpha), str(t.beta)))
    star, circ = semidirect_tables(base, t, line_parity, label)
    lines = semidirect_equations(base, t, line_parity)
    ground = check_identity(DiSuperAlgebra(star, circ), IdentityKind.PRE_LEFT_LEIBNIZ)
    disc = decide(ground, lines, "semidirect product")
    return ExtendedPair(star, circ, lines, disc)
