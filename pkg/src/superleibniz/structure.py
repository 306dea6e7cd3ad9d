"""Structural invariants and the quadratic characterizations."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bilinear import (
    BilinearForm,
    SubSpace,
    is_invariant,
    is_totally_isotropic,
    orthogonal,
)
from .errors import (
    InternalInconsistency,
    MuDataError,
    NotHomogeneous,
    NotIsomorphism,
    NotLeibniz,
    SpaceMismatch,
    TrilinearError,
)
from .exactla import ZERO, LinearMap, Parity, Vector, nullspace, sign
from .levicivita import is_flat
from .superalg import (
    CheckReport,
    Counterexample,
    IdentityKind,
    SuperAlgebra,
    check_identity,
    is_associative,
    polarization,
)


def leibniz_ideal(alg: SuperAlgebra) -> SubSpace:
    """Span of u•v + (-1)^{|u||v|} v•u over basis pairs."""
    n = alg.space.dim
    par = alg.space.parities
    t = alg.tensor
    gens = []
    for i in range(n):
        for j in range(i, n):
            s = sign(par[i] * par[j])
            g = [a + s * b for a, b in zip(t[i][j], t[j][i])]
            if any(g):
                gens.append(g)
    return SubSpace(alg.space, gens)


def product_space(alg: SuperAlgebra) -> SubSpace:
    """A • A."""
    n = alg.space.dim
    return SubSpace(alg.space, [alg.tensor[i][j] for i in range(n) for j in range(n)
                                if any(alg.tensor[i][j])])


def _kernel_of_products(alg: SuperAlgebra, left: bool, right: bool) -> SubSpace:
    n = alg.space.dim
    t = alg.tensor
    # x is in the kernel iff Σ_i x_i c[i][j][k] = 0 (left) and Σ_i x_i c[j][i][k] = 0 (right)
    rows = []
    for j in range(n):
        for k in range(n):
            if left:
                rows.append([t[i][j][k] for i in range(n)])
            if right:
                rows.append([t[j][i][k] for i in range(n)])
    rows = [r for r in rows if any(r)]
    if not rows:
        return SubSpace.full(alg.space)
    return SubSpace(alg.space, nullspace(rows, n))


def annihilator(alg: SuperAlgebra) -> SubSpace:
    """{u : u•A = A•u = 0}."""
    return _kernel_of_products(alg, True, True)


def center(alg: SuperAlgebra) -> SubSpace:
    """{u : u•A = 0} for super-anticommutative products, else the annihilator."""
    if check_identity(alg, IdentityKind.SUPER_ANTICOMMUTATIVE).holds:
        return _kernel_of_products(alg, True, False)
    return annihilator(alg)


def is_two_step_nilpotent(alg: SuperAlgebra) -> bool:
    return check_identity(alg, IdentityKind.TWO_STEP_NILPOTENT).holds


# ---------------------------------------------------------------------------
# quadratic case

@dataclass(frozen=True)
class QuadraticFlatReport:
    verdicts: dict
    consistent: bool
    details: dict = field(default_factory=dict)


def quadratic_flat_report(alg: SuperAlgebra, form: BilinearForm) -> QuadraticFlatReport:
    """Check the flat / 2-step nilpotent symmetric Leibniz equivalence on one instance.

    Raises if the form is not invariant, and raises
    :class:`InternalInconsistency` if the equivalences disagree.
    """
    inv = is_invariant(alg, form)
    if not inv.holds:
        raise NotLeibniz("form is not invariant: " + inv.counterexample.describe(),
                         "invariance", inv.counterexample.labels)
    v = {}
    v["left-leibniz"] = check_identity(alg, IdentityKind.LEFT_LEIBNIZ).holds
    v["symmetric-leibniz"] = check_identity(alg, IdentityKind.SYMMETRIC_LEIBNIZ).holds
    v["two-step-nilpotent"] = is_two_step_nilpotent(alg)
    v["flat"] = is_flat(alg, form).holds if v["left-leibniz"] else False
    v["flat <=> symmetric and 2-step"] = v["flat"] == (v["symmetric-leibniz"] and v["two-step-nilpotent"])
    details = {}
    if v["symmetric-leibniz"]:
        perp = orthogonal(form, product_space(alg))
        ann = annihilator(alg)
        v["(A.A)^perp = Ann"] = perp == ann
        details["(A.A)^perp"] = perp
        details["Ann"] = ann
        minus, plus = polarization(alg)
        split = {
            "A- lie": check_identity(minus, IdentityKind.LIE).holds,
            "A- 2-step": is_two_step_nilpotent(minus),
            "A- invariant": is_invariant(minus, form).holds,
            "A+ associative": is_associative(plus).holds,
            "A+ 2-step": is_two_step_nilpotent(plus),
            "A+ invariant": is_invariant(plus, form).holds,
        }
        v.update(split)
        v["flat <=> split"] = v["flat"] == all(split.values())
    checks = [k for k in v if "<=>" in k or k == "(A.A)^perp = Ann"]
    consistent = all(v[k] for k in checks)
    if not consistent:
        bad = [k for k in checks if not v[k]]
        raise InternalInconsistency(f"quadratic equivalences disagree: {bad}")
    return QuadraticFlatReport(v, consistent, details)


# ---------------------------------------------------------------------------
# Lie superalgebra plus symmetric product

@dataclass(frozen=True)
class MuData:
    """A Lie superalgebra and a supersymmetric product μ on the same space."""

    lie: SuperAlgebra
    mu: SuperAlgebra

    def __post_init__(self):
        if self.lie.space != self.mu.space:
            raise SpaceMismatch("lie and mu live on different spaces")


def validate_mu_data(data: MuData) -> None:
    lie, mu = data.lie, data.mu
    for kind in (IdentityKind.LIE, IdentityKind.TWO_STEP_NILPOTENT):
        rep = check_identity(lie, kind)
        if not rep.holds:
            raise MuDataError(f"bracket fails {kind.value}: " + rep.counterexample.describe(),
                              kind.value, rep.counterexample.labels)
    rep = check_identity(mu, IdentityKind.SUPER_COMMUTATIVE)
    if not rep.holds:
        raise MuDataError("mu is not supersymmetric: " + rep.counterexample.describe(),
                          "mu supersymmetric", rep.counterexample.labels)
    space = lie.space
    n = space.dim
    lab = space.labels
    z = center(lie)
    for i in range(n):
        for j in range(n):
            if not z.contains(mu.tensor[i][j]):
                raise MuDataError(f"mu({lab[i]}, {lab[j]}) is not central",
                                  "mu central", (lab[i], lab[j]))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if any(mu.right_mul_basis(lie.tensor[i][j], k)):
                    raise MuDataError(f"mu([{lab[i]},{lab[j]}], {lab[k]}) != 0",
                                      "mu([u,v],w) = 0", (lab[i], lab[j], lab[k]))
                if any(mu.right_mul_basis(mu.tensor[i][j], k)):
                    raise MuDataError(f"mu(mu({lab[i]},{lab[j]}), {lab[k]}) != 0",
                                      "mu(mu(u,v),w) = 0", (lab[i], lab[j], lab[k]))


def leibniz_from_lie_mu(data: MuData) -> SuperAlgebra:
    """u•v = [u,v] + μ(u,v), after validating the data."""
    validate_mu_data(data)
    return data.lie + data.mu


@dataclass(frozen=True)
class TrilinearData:
    T: tuple
    J: SubSpace
    parity: Parity

    def value(self, u: str, v: str, w: str):
        sp = self.J.space
        return self.T[sp.index(u)][sp.index(v)][sp.index(w)]

    def nonzero(self) -> dict:
        lab = self.J.space.labels
        n = len(lab)
        return {(lab[i], lab[j], lab[k]): self.T[i][j][k]
                for i in range(n) for j in range(n) for k in range(n) if self.T[i][j][k]}


def trilinear_data(alg: SuperAlgebra, form: BilinearForm, J: SubSpace) -> TrilinearData:
    """T(u,v,w) = ⟨μ(u,v), w⟩ with μ the anti-bracket part of •, validated against J."""
    if not (alg.space == form.space == J.space):
        raise SpaceMismatch("algebra, form and J must share one space")
    space = alg.space
    n = space.dim
    par = space.parities
    lab = space.labels
    lie, mu = polarization(alg)
    inv = is_invariant(lie, form)
    if not inv.holds:
        raise TrilinearError("form is not invariant on the bracket: " + inv.counterexample.describe(),
                             "invariance", inv.counterexample.labels)
    if not is_totally_isotropic(form, J):
        raise TrilinearError("J is not totally isotropic", "J isotropic", None)
    if not center(lie).contains_subspace(J):
        raise TrilinearError("J is not contained in the center", "J central", None)
    G = form.matrix
    T = [[[sum((c * G[m][k] for m, c in enumerate(mu.tensor[i][j]) if c), ZERO)
           for k in range(n)] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                a = T[i][j][k]
                b = sign(par[i] * (par[j] + par[k])) * T[j][k][i]
                if a != b:
                    raise TrilinearError(
                        f"T is not cyclic at ({lab[i]}, {lab[j]}, {lab[k]}): {a} vs {b}",
                        "cyclic", (lab[i], lab[j], lab[k]))
    jperp = orthogonal(form, J)
    for x in jperp.rows:
        for j in range(n):
            for k in range(n):
                val = sum((x[i] * T[i][j][k] for i in range(n) if x[i]), ZERO)
                if val:
                    raise TrilinearError(
                        f"T(J^perp, {lab[j]}, {lab[k]}) != 0 at {Vector.from_dense(space, x)!r}",
                        "T(J^perp,.,.) = 0", (repr(Vector.from_dense(space, x)), lab[j], lab[k]))
    return TrilinearData(tuple(tuple(tuple(c) for c in row) for row in T), J, form.parity)


# ---------------------------------------------------------------------------
# isometric isomorphisms

def verify_isometric_isomorphism(a, b, phi: LinearMap) -> CheckReport:
    """Check φ(u•v) = φ(u)•φ(v) and ⟨φu, φv⟩ = ⟨u, v⟩ on basis pairs.

    ``a`` and ``b`` are ``(algebra, form)`` pairs.
    """
    alg_a, form_a = a
    alg_b, form_b = b
    if phi.domain != alg_a.space or phi.codomain != alg_b.space:
        raise SpaceMismatch("phi does not map between the given algebras")
    deg = phi.homogeneous_degree()
    if deg is None or deg != Parity.EVEN:
        raise NotHomogeneous("phi must be an even map")
    if not phi.is_invertible():
        raise NotIsomorphism("phi is not bijective")
    n = alg_a.space.dim
    lab = alg_a.space.labels
    cols = [[phi.matrix[r][j] for r in range(alg_b.space.dim)] for j in range(n)]
    violations = []
    for i in range(n):
        for j in range(n):
            lhs = phi.apply_dense(alg_a.tensor[i][j])
            rhs = alg_b.mul(cols[i], cols[j])
            if lhs != rhs:
                violations.append(Counterexample((lab[i], lab[j]),
                                                 Vector.from_dense(alg_b.space, lhs),
                                                 Vector.from_dense(alg_b.space, rhs),
                                                 "homomorphism"))
    for i in range(n):
        for j in range(n):
            lhs = form_b.pair_dense(cols[i], cols[j])
            rhs = form_a.matrix[i][j]
            if lhs != rhs:
                violations.append(Counterexample((lab[i], lab[j]), lhs, rhs, "isometry"))
    return CheckReport.from_violations(violations, "isometric isomorphism")
