"""Central extensions of pre-left-Leibniz pairs by a line K e."""

from __future__ import annotations

from dataclasses import dataclass

from ..bilinear import BilinearForm
from ..errors import ExtensionError, NotLeibniz
from ..exactla import ZERO, Parity, mat_vec, nullspace, sign, to_scalar
from ..levicivita import ConditionReport
from ..superalg import (
    CheckReport,
    Counterexample,
    DiSuperAlgebra,
    IdentityKind,
    SuperAlgebra,
    check_identity,
)
from ._common import ExtendedPair, LineResult, decide, embed_tensor, extended_space, fresh_label


def _table(x, n):
    return tuple(tuple(to_scalar(c) for c in row) for row in x) if x is not None else \
        tuple(tuple(ZERO for _ in range(n)) for _ in range(n))


@dataclass(frozen=True)
class CentralExtensionData:
    """Scalar tables ``mu[i][j] = μ(b_i, b_j)`` and ``gamma[i][j] = γ(b_i, b_j)``."""

    mu: tuple
    gamma: tuple

    @classmethod
    def zero(cls, n: int) -> "CentralExtensionData":
        return cls(_table(None, n), _table(None, n))

    @classmethod
    def from_tables(cls, mu, gamma) -> "CentralExtensionData":
        n = len(mu)
        return cls(_table(mu, n), _table(gamma, n))

    @classmethod
    def from_maps(cls, form: BilinearForm, G, D) -> "CentralExtensionData":
        """μ(u, v) = ⟨G(u), v⟩ and γ(u, v) = ⟨D(u), v⟩."""
        Gm = G.matrix if hasattr(G, "matrix") else G
        Dm = D.matrix if hasattr(D, "matrix") else D
        n = form.space.dim

        def induced(F):
            cols = [[F[r][i] for r in range(n)] for i in range(n)]
            return [[form.pair_dense(cols[i], [ZERO] * j + [1] + [ZERO] * (n - j - 1))
                     for j in range(n)] for i in range(n)]

        return cls(_table(induced(Gm), n), _table(induced(Dm), n))


def _bil(table, x, y):
    return sum((a * table[i][j] * b for i, a in enumerate(x) if a
                for j, b in enumerate(y) if b), ZERO)


def _check_table_degree(table, space, degree, name):
    par = space.parities
    for i, row in enumerate(table):
        for j, c in enumerate(row):
            if c and (par[i] + par[j]) % 2 != degree:
                raise ExtensionError(
                    f"{name}({space.labels[i]}, {space.labels[j]}) is nonzero but the line has "
                    f"parity {Parity(degree)}", "degree", (space.labels[i], space.labels[j]))


def central_equations(base: DiSuperAlgebra, data: CentralExtensionData) -> list:
    """Evaluate the three central-extension identities on basis triples."""
    space = base.space
    n = space.dim
    par = space.parities
    lab = space.labels
    st, ci = base.star.tensor, base.circ.tensor
    mu, ga = data.mu, data.gamma
    e = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def E1(i, j, k):
        s = sign(par[i] * par[j])
        lhs = _bil(mu, st[i][j], e[k]) - _bil(mu, e[i], st[j][k])
        rhs = -s * (_bil(mu, ci[j][i], e[k]) + _bil(mu, e[j], st[i][k]))
        return lhs, rhs

    def E2(i, j, k):
        s = sign(par[i] * par[j])
        lhs = _bil(ga, st[i][j], e[k]) - _bil(mu, e[i], ci[j][k])
        rhs = -s * (_bil(ga, ci[j][i], e[k]) - _bil(ga, e[j], ci[i][k]))
        return lhs, rhs

    def E3(i, j, k):
        return _bil(ga, e[i], ci[j][k]), -_bil(ga, e[i], st[j][k])

    out = []
    for name, fn in (("E1", E1), ("E2", E2), ("E3", E3)):
        res = LineResult(name, True)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs, rhs = fn(i, j, k)
                    if lhs != rhs and res.holds:
                        res = LineResult(name, False, (lab[i], lab[j], lab[k]), lhs, rhs)
        out.append(res)
    return out


def central_extension(base: DiSuperAlgebra, data: CentralExtensionData, line_parity=Parity.EVEN,
                      label: str = "e") -> ExtendedPair:
    """Adjoin a central line with u⋆v += μ(u,v)e and u∘v += γ(u,v)e."""
    line_parity = Parity.parse(line_parity)
    pre = check_identity(base, IdentityKind.PRE_LEFT_LEIBNIZ)
    if not pre.holds:
        raise NotLeibniz("base is not pre-left-Leibniz: " + pre.counterexample.describe(),
                         pre.counterexample.equation, pre.counterexample.labels)
    space = base.space
    n = space.dim
    if len(data.mu) != n or len(data.gamma) != n:
        raise ExtensionError("mu and gamma must be square tables on the base", "data", None)
    _check_table_degree(data.mu, space, line_parity, "mu")
    _check_table_degree(data.gamma, space, line_parity, "gamma")
    label = fresh_label(space.labels, label)
    big = extended_space(space, before=[(label, line_parity)])
    ie = big.index(label)
    idx = [big.index(l) for l in space.labels]
    st = embed_tensor(base.star, big)
    ci = embed_tensor(base.circ, big)
    for i in range(n):
        for j in range(n):
            st[idx[i]][idx[j]][ie] += data.mu[i][j]
            ci[idx[i]][idx[j]][ie] += data.gamma[i][j]
    star, circ = SuperAlgebra(big, st), SuperAlgebra(big, ci)
    lines = central_equations(base, data)
    ground = check_identity(DiSuperAlgebra(star, circ), IdentityKind.PRE_LEFT_LEIBNIZ)
    disc = decide(ground, lines, "central extension")
    return ExtendedPair(star, circ, lines, disc)


def central_cocycle_space(base: DiSuperAlgebra, line_parity=Parity.EVEN) -> list:
    """Basis of all (μ, γ) of the given degree solving the three identities.

    The identities are linear in the table entries, so the solutions form a
    subspace; each basis element is returned as :class:`CentralExtensionData`.
    """
    line_parity = Parity.parse(line_parity)
    space = base.space
    n = space.dim
    par = space.parities
    slots = [(i, j) for i in range(n) for j in range(n) if (par[i] + par[j]) % 2 == line_parity]
    m = len(slots)
    nvars = 2 * m
    rows = []
    for a in range(nvars):
        mu = [[ZERO] * n for _ in range(n)]
        ga = [[ZERO] * n for _ in range(n)]
        i, j = slots[a % m]
        (mu if a < m else ga)[i][j] = 1
        data = CentralExtensionData.from_tables(mu, ga)
        rows.append(_residuals(base, data))
    # rows[a] is the residual vector of unknown a; the system is its transpose
    if not rows:
        return []
    eqs = [[rows[a][r] for a in range(nvars)] for r in range(len(rows[0]))]
    eqs = [e for e in eqs if any(e)]
    sols = nullspace(eqs, nvars) if eqs else [[1 if a == b else 0 for b in range(nvars)]
                                                for a in range(nvars)]
    out = []
    for s in sols:
        mu = [[ZERO] * n for _ in range(n)]
        ga = [[ZERO] * n for _ in range(n)]
        for a, c in enumerate(s):
            i, j = slots[a % m]
            (mu if a < m else ga)[i][j] += c
        out.append(CentralExtensionData.from_tables(mu, ga))
    return out


def _residuals(base, data) -> list:
    space = base.space
    n = space.dim
    par = space.parities
    st, ci = base.star.tensor, base.circ.tensor
    mu, ga = data.mu, data.gamma
    e = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    out = []
    for i in range(n):
        for j in range(n):
            s = sign(par[i] * par[j])
            for k in range(n):
                out.append(_bil(mu, st[i][j], e[k]) - _bil(mu, e[i], st[j][k])
                           + s * (_bil(mu, ci[j][i], e[k]) + _bil(mu, e[j], st[i][k])))
                out.append(_bil(ga, st[i][j], e[k]) - _bil(mu, e[i], ci[j][k])
                           + s * (_bil(ga, ci[j][i], e[k]) - _bil(ga, e[j], ci[i][k])))
                out.append(_bil(ga, e[i], ci[j][k]) + _bil(ga, e[i], st[j][k]))
    return out


def induced_maps(form: BilinearForm, data: CentralExtensionData) -> tuple:
    """The (G, D) matrices with μ(u,v) = ⟨G u, v⟩ and γ(u,v) = ⟨D u, v⟩."""
    from ..exactla import mat_mul, transpose
    # ⟨G b_i, b_j⟩ = (G e_i)ᵀ M e_j, so Gᵀ M = mu and G = (mu M⁻¹)ᵀ
    Minv = form.inverse_matrix
    G = transpose(mat_mul(data.mu, Minv))
    D = transpose(mat_mul(data.gamma, Minv))
    return G, D


def map_conditions(pair: DiSuperAlgebra, G, D, degree=0) -> ConditionReport:
    """The operator conditions (i)-(iii) on (G, D), with (i) in both printed forms.

    ``(i) stated`` is the usual form of the condition and ``(i) derived`` the
    one with its two signs exchanged.  Only the stated form decides the verdict.
    """
    space = pair.space
    n = space.dim
    par = space.parities
    lab = space.labels
    a = b = int(degree)
    st, ci = pair.star, pair.circ
    from ..superalg import admissible_product
    bullet = admissible_product(pair)

    def col(F, i):
        return [F[r][i] for r in range(n)]

    def app(F, x):
        return mat_vec(F, x)

    def check(name, fn, arity=2):
        for i in range(n):
            for j in range(n):
                lhs, rhs = fn(i, j)
                if lhs != rhs:
                    ce = Counterexample((lab[i], lab[j]), lhs, rhs, name)
                    return CheckReport(False, ce, (ce,), name)
        return CheckReport(True, name=name)

    def i_stated(i, j):
        lhs = app(G, bullet.tensor[i][j])
        t1 = ci.left_mul_basis(i, col(G, j))
        t2 = ci.left_mul_basis(j, col(G, i))
        s1 = -sign(par[i] * a)
        s2 = sign(par[j] * (a + par[i]))
        return lhs, [s1 * x + s2 * y for x, y in zip(t1, t2)]

    def i_derived(i, j):
        lhs = app(G, bullet.tensor[i][j])
        t1 = ci.left_mul_basis(i, col(G, j))
        t2 = ci.left_mul_basis(j, col(G, i))
        s1 = -sign(par[j] * (a + par[i]))
        s2 = sign(par[i] * a)
        return lhs, [s1 * x + s2 * y for x, y in zip(t1, t2)]

    def ii(i, j):
        lhs = app(D, bullet.tensor[i][j])
        t1 = st.left_mul_basis(i, col(D, j))
        t2 = st.left_mul_basis(j, col(G, i))
        s1 = sign(par[i] * b)
        s2 = sign(par[j] * (a + par[i]))
        return lhs, [s1 * x + s2 * y for x, y in zip(t1, t2)]

    def iii(i, j):
        # v ⋆ D(u) = -v ∘ D(u) with v = b_i, u = b_j
        return st.left_mul_basis(i, col(D, j)), [-x for x in ci.left_mul_basis(i, col(D, j))]

    checks = {
        "(i) stated": check("(i) stated", i_stated),
        "(i) derived": check("(i) derived", i_derived),
        "(ii)": check("(ii)", ii),
        "(iii)": check("(iii)", iii),
    }
    ok = checks["(i) stated"].holds and checks["(ii)"].holds and checks["(iii)"].holds
    return ConditionReport(checks, ok)
