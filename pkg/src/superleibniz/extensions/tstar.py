"""T*- and Π(T*)-extensions and the reduction of quadratic 2-step nilpotent algebras.

The dual space is realized as a second copy of the basis: ``φ^i`` pairs to
1 with ``b_i``.  For T* the dual vector ``φ^i`` has the parity of ``b_i``;
for Π(T*) the opposite one.  Writing ``c[i][j][k]`` for the structure
constants of the base and ``q_i`` for the parity of ``φ^i``:

* ``φ^i • b_j = Σ_k c[j][k][i] φ^k``
* ``b_j • φ^i = Σ_k (-1)^{|b_j|(q_i + |b_k|)} c[k][j][i] φ^k``
* ``b_i • b_j`` gains ``Σ_k Ω̃(b_i, b_j, b_k) φ^k``
* ``B(φ^i, b_j) = δ_ij`` and ``B(b_j, φ^i) = (-1)^{|b_j| q_i} δ_ij``

These are the coadjoint actions with the signs forced by invariance of B.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..bilinear import BilinearForm, SubSpace, is_invariant, orthogonal
from ..errors import CocycleError, ExtensionError, NotLeibniz, ParityError, SpaceMismatch
from ..exactla import (
    ZERO,
    LinearMap,
    Parity,
    SuperSpace,
    Vector,
    inverse,
    mat_mul,
    particular_solution,
    sign,
    to_scalar,
)
from ..levicivita import is_flat
from ..structure import annihilator, product_space
from ..superalg import IdentityKind, SuperAlgebra, check_identity
from ._common import Extension


@dataclass(frozen=True)
class CocycleTensor:
    """``T[i][j][k] = Ω̃(b_i, b_j, b_k) = Ω(b_i, b_j)(b_k)`` on the base space.

    ``target_parity`` is even for T* and odd for Π(T*).
    """

    space: SuperSpace
    T: tuple
    target_parity: Parity = Parity.EVEN

    def __post_init__(self):
        n = self.space.dim
        T = tuple(tuple(tuple(to_scalar(c) for c in cell) for cell in row) for row in self.T)
        if len(T) != n or any(len(r) != n or any(len(c) != n for c in r) for r in T):
            raise ExtensionError(f"cocycle tensor must be {n}x{n}x{n}", "shape", None)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "target_parity", Parity.parse(self.target_parity))
        par = self.space.parities
        lab = self.space.labels
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if T[i][j][k] and (par[i] + par[j] + par[k]) % 2 != self.target_parity:
                        raise ParityError(
                            f"Ω({lab[i]}, {lab[j]})({lab[k]}) is nonzero but breaks the grading")

    @classmethod
    def zero(cls, space: SuperSpace, target_parity=Parity.EVEN) -> "CocycleTensor":
        n = space.dim
        return cls(space, tuple(tuple(tuple(ZERO for _ in range(n)) for _ in range(n))
                                for _ in range(n)), target_parity)

    @classmethod
    def from_values(cls, space: SuperSpace, values: dict, target_parity=Parity.EVEN):
        """Build from ``{(u, v, w): value}`` keyed by labels."""
        n = space.dim
        T = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (a, b, c), val in values.items():
            T[space.index(a)][space.index(b)][space.index(c)] = to_scalar(val)
        return cls(space, T, target_parity)

    def value(self, u: str, v: str, w: str):
        sp = self.space
        return self.T[sp.index(u)][sp.index(v)][sp.index(w)]

    def nonzero(self) -> dict:
        lab = self.space.labels
        n = self.space.dim
        return {(lab[i], lab[j], lab[k]): self.T[i][j][k]
                for i in range(n) for j in range(n) for k in range(n) if self.T[i][j][k]}

    def is_cyclic(self):
        """Return None or the first triple breaking Ω̃(u,v,w) = (-1)^{|u|(|v|+|w|)} Ω̃(v,w,u)."""
        n = self.space.dim
        par = self.space.parities
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.T[i][j][k] != sign(par[i] * (par[j] + par[k])) * self.T[j][k][i]:
                        return tuple(self.space.labels[x] for x in (i, j, k))
        return None

    def injectivity_witness(self):
        """A nonzero u with Ω(u, ·) = 0, or None when u ↦ Ω(u, ·) is injective."""
        n = self.space.dim
        rows = [[self.T[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
        rows = [r for r in rows if any(r)]
        from ..exactla import nullspace
        ker = nullspace(rows, n) if rows else [[1 if a == b else 0 for b in range(n)]
                                                 for a in range(n)]
        return Vector.from_dense(self.space, ker[0]) if ker else None


def dual_label(label: str) -> str:
    return label + "*"


def pi_dual_label(label: str) -> str:
    return f"Π({label}*)"


def _extension_space(base: SuperSpace, shifted: bool) -> tuple:
    par = base.parities
    lab = base.labels
    duals = [(pi_dual_label(l) if shifted else dual_label(l), (p + shifted) % 2)
             for l, p in zip(lab, par)]
    taken = set(lab)
    for name, _ in duals:
        if name in taken:
            raise ExtensionError(f"dual label {name!r} collides with a base label", "labels", None)
    even = list(base.even_basis) + [d for d, p in duals if p == 0]
    odd = list(base.odd_basis) + [d for d, p in duals if p == 1]
    return SuperSpace(tuple(even), tuple(odd)), [d for d, _ in duals]


def _build(base: SuperAlgebra, omega: CocycleTensor, shifted: bool) -> tuple:
    space = base.space
    if omega.space != space:
        raise SpaceMismatch("cocycle and base live on different spaces")
    if omega.target_parity != Parity(int(shifted)):
        raise ExtensionError(
            f"a {'Π(T*)' if shifted else 'T*'}-extension needs a cocycle with "
            f"{'odd' if shifted else 'even'} target", "target parity", None)
    big, duals = _extension_space(space, shifted)
    n = space.dim
    N = big.dim
    par = space.parities
    q = [(p + shifted) % 2 for p in par]
    bi = [big.index(l) for l in space.labels]
    fi = [big.index(d) for d in duals]
    c = base.tensor
    t = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if c[i][j][k]:
                    t[bi[i]][bi[j]][bi[k]] += c[i][j][k]
                w = omega.T[i][j][k]
                if w:
                    t[bi[i]][bi[j]][fi[k]] += w
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x = c[j][k][i]
                if x:
                    t[fi[i]][bi[j]][fi[k]] += x
                y = c[k][j][i]
                if y:
                    t[bi[j]][fi[i]][fi[k]] += sign(par[j] * (q[i] + par[k])) * y
    alg = SuperAlgebra(big, t)
    G = [[ZERO] * N for _ in range(N)]
    for i in range(n):
        G[fi[i]][bi[i]] = ZERO + 1
        G[bi[i]][fi[i]] = ZERO + sign(par[i] * q[i])
    form = BilinearForm(big, Parity(int(shifted)), G)
    return alg, form


def _extend(base: SuperAlgebra, omega: CocycleTensor, shifted: bool) -> Extension:
    rep = check_identity(base, IdentityKind.SYMMETRIC_LEIBNIZ)
    if not rep.holds:
        raise NotLeibniz("base is not symmetric Leibniz: " + rep.counterexample.describe(),
                         rep.counterexample.equation, rep.counterexample.labels)
    alg, form = _build(base, omega, shifted)
    sym = check_identity(alg, IdentityKind.SYMMETRIC_LEIBNIZ)
    if not sym.holds:
        ce = sym.counterexample
        raise CocycleError("Ω is not a 2-cocycle: the extension breaks "
                           + ce.describe(), ce.equation, ce.labels)
    cyc = omega.is_cyclic()
    inv = is_invariant(alg, form)
    verdicts = {
        "symmetric-leibniz": True,
        "cyclic": cyc is None,
        "invariant": inv.holds,
    }
    if verdicts["cyclic"] != verdicts["invariant"]:
        from ..errors import InternalInconsistency
        raise InternalInconsistency(
            f"cyclicity ({verdicts['cyclic']}) and invariance ({verdicts['invariant']}) disagree")
    notes = ()
    if cyc is not None:
        notes = (f"Ω is not cyclic at {cyc}; the form is not invariant",)
    return Extension(alg, form, None, verdicts, (), notes)


def t_star_extension(base: SuperAlgebra, omega: CocycleTensor) -> Extension:
    """A ⊕ A* with the coadjoint actions twisted by Ω and the hyperbolic form."""
    return _extend(base, omega, False)


def pi_t_star_extension(base: SuperAlgebra, omega: CocycleTensor) -> Extension:
    """A ⊕ Π(A*) with the shifted coadjoint actions and the odd hyperbolic form."""
    return _extend(base, omega, True)


# ---------------------------------------------------------------------------
# reduction

@dataclass(frozen=True)
class TStarReduction:
    h: SuperSpace
    omega: CocycleTensor
    iso: LinearMap
    complement: tuple

    def __iter__(self):
        yield self.h
        yield self.omega
        yield self.iso


def _isotropic_complement(form: BilinearForm, N: SubSpace) -> list:
    """Greedy homogeneous vectors h_1..h_k spanning an isotropic complement of N."""
    space = form.space
    n = space.dim
    par = space.parities
    chosen, labels = [], []
    span_rows = list(N.rows)
    for b in range(n):
        e = [ZERO] * n
        e[b] = ZERO + 1
        if SubSpace(space, span_rows + [e]).dim == len(SubSpace(space, span_rows).rows):
            continue
        p = par[b]
        Np = [r for r in N.component(p).rows]
        # unknown coefficients x over Np: u = e + Σ x_m n_m
        eqs, rhs = [], []
        for h in chosen:
            eqs.append([form.pair_dense(nm, h) for nm in Np])
            rhs.append(-form.pair_dense(e, h))
        eqs.append([form.pair_dense(e, nm) + form.pair_dense(nm, e) for nm in Np])
        rhs.append(-form.pair_dense(e, e))
        x = particular_solution(eqs, rhs, len(Np)) if Np else ([] if not any(rhs) else None)
        if x is None:
            raise ExtensionError("no isotropic complement exists", "complement", None)
        u = list(e)
        for xm, nm in zip(x, Np):
            if xm:
                u = [a + xm * bb for a, bb in zip(u, nm)]
        chosen.append(u)
        labels.append(space.labels[b])
        span_rows.append(u)
    return chosen, labels


def reduce_to_t_star(alg: SuperAlgebra, form: BilinearForm) -> TStarReduction:
    """Exhibit a reduced quadratic 2-step nilpotent algebra as (Π)T* of a trivial algebra."""
    if alg.space != form.space:
        raise SpaceMismatch("algebra and form live on different spaces")
    for kind in (IdentityKind.SYMMETRIC_LEIBNIZ, IdentityKind.TWO_STEP_NILPOTENT):
        rep = check_identity(alg, kind)
        if not rep.holds:
            raise ExtensionError(f"algebra is not {kind.value}: " + rep.counterexample.describe(),
                                 kind.value, rep.counterexample.labels)
    inv = is_invariant(alg, form)
    if not inv.holds:
        raise ExtensionError("form is not invariant: " + inv.counterexample.describe(),
                             "invariance", inv.counterexample.labels)
    space = alg.space
    n = space.dim
    ann = annihilator(alg)
    if not all(form.pair_dense(x, y) == 0 for x in ann.rows for y in ann.rows):
        raise ExtensionError("not reduced: the annihilator is not totally isotropic",
                             "Ann totally isotropic", None)
    AA = product_space(alg)
    perp = orthogonal(form, AA)
    if not (AA == ann == perp):
        raise ExtensionError("A•A, Ann(A) and (A•A)^perp do not coincide",
                             "A•A = Ann = (A•A)^perp", None)
    shifted = bool(form.parity)
    hs, hl = _isotropic_complement(form, ann)
    k = len(hs)
    par = space.parities
    hpar = [par[space.index(l)] for l in hl]
    h_space = SuperSpace(tuple(l for l, p in zip(hl, hpar) if p == 0),
                         tuple(l for l, p in zip(hl, hpar) if p == 1))
    order = [hl.index(l) for l in h_space.labels]
    hs = [hs[o] for o in order]
    T = [[[form.pair_dense(alg.mul(hs[a], hs[b]), hs[c]) for c in range(k)]
          for b in range(k)] for a in range(k)]
    omega = CocycleTensor(h_space, T, Parity(int(shifted)))
    target, _ = _extension_space(h_space, shifted)
    duals = [pi_dual_label(l) if shifted else dual_label(l) for l in h_space.labels]
    # columns of M: h vectors then the N basis; images: h labels then Σ_c ⟨n, h_c⟩ φ^c
    M_cols = list(hs) + [list(r) for r in ann.rows]
    img_cols = []
    for a in range(k):
        col = [ZERO] * target.dim
        col[target.index(h_space.labels[a])] = ZERO + 1
        img_cols.append(col)
    for r in ann.rows:
        col = [ZERO] * target.dim
        for c in range(k):
            col[target.index(duals[c])] = form.pair_dense(r, hs[c])
        img_cols.append(col)
    if len(M_cols) != n:
        raise ExtensionError("complement and annihilator do not span the space", "complement", None)
    M = [[M_cols[j][i] for j in range(n)] for i in range(n)]
    Img = [[img_cols[j][i] for j in range(n)] for i in range(target.dim)]
    phi = LinearMap(space, target, mat_mul(Img, inverse(M)), Parity.EVEN)
    return TStarReduction(h_space, omega, phi, tuple(Vector.from_dense(space, h) for h in hs))


def trivial_algebra(space: SuperSpace) -> SuperAlgebra:
    return SuperAlgebra.zero(space)


def rebuild_from_reduction(red: TStarReduction) -> Extension:
    base = trivial_algebra(red.h)
    if red.omega.target_parity:
        return pi_t_star_extension(base, red.omega)
    return t_star_extension(base, red.omega)


def flat_check(ext: Extension) -> bool:
    return is_flat(ext.algebra, ext.form).holds
