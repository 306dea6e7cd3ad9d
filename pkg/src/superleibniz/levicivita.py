"""Levi-Civita products, curvature and flatness."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bilinear import BilinearForm, adjoint_matrix
from .errors import InternalInconsistency, NotLeibniz, SpaceMismatch
from .exactla import (
    HALF,
    ZERO,
    LinearMap,
    Parity,
    Vector,
    mat_mul,
    mat_vec,
    sign,
    transpose,
)
from .superalg import (
    CheckReport,
    Counterexample,
    DiSuperAlgebra,
    IdentityKind,
    SuperAlgebra,
    check_identity,
    left_matrix,
    polarization,
)


@dataclass(frozen=True)
class LeviCivitaPair:
    """The products ⋆ and ∘ of a pseudo-Euclidean superalgebra."""

    star: SuperAlgebra
    circ: SuperAlgebra
    algebra: SuperAlgebra
    form: BilinearForm

    @property
    def space(self):
        return self.star.space

    def as_disuperalgebra(self) -> DiSuperAlgebra:
        return DiSuperAlgebra(self.star, self.circ)


def _pair_table(alg: SuperAlgebra, form: BilinearForm) -> list:
    """P[i][j][k] = ⟨b_i • b_j, b_k⟩."""
    n = alg.space.dim
    G = form.matrix
    t = alg.tensor
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            uv = t[i][j]
            row.append([sum((c * G[m][k] for m, c in enumerate(uv) if c), ZERO) for k in range(n)])
        out.append(row)
    return out


def _circ_from_star(star_tensor, form: BilinearForm) -> list:
    """∘ with L∘_u = adjoint of L⋆_u."""
    n = form.space.dim
    par = form.space.parities
    circ = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        L = [[star_tensor[i][j][k] for j in range(n)] for k in range(n)]
        A = adjoint_matrix(form, L, par[i])
        for j in range(n):
            for k in range(n):
                circ[i][j][k] = A[k][j]
    return circ


def levi_civita(alg: SuperAlgebra, form: BilinearForm) -> LeviCivitaPair:
    """Solve for the unique torsion-free compatible pair (⋆, ∘)."""
    if alg.space != form.space:
        raise SpaceMismatch("algebra and form live on different spaces")
    n = alg.space.dim
    par = alg.space.parities
    P = _pair_table(alg, form)
    # ⟨x, b_k⟩ = (Gᵀ x)_k, so x = (Gᵀ)⁻¹ r = (G⁻¹)ᵀ r
    ginv_t = transpose(form.inverse_matrix)
    star = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            r = []
            for k in range(n):
                val = (
                    P[i][j][k]
                    - sign(par[i] * par[j] + par[k] * par[i]) * P[j][k][i]
                    + sign(par[j] * par[k] + par[i] * par[k]) * P[k][i][j]
                )
                r.append(HALF * val)
            star[i][j] = mat_vec(ginv_t, r)
    circ = _circ_from_star(star, form)
    pair = LeviCivitaPair(SuperAlgebra(alg.space, star), SuperAlgebra(alg.space, circ), alg, form)
    report = verify_pair(alg, form, pair.star, pair.circ)
    if not report.holds:
        raise InternalInconsistency(
            "solved Levi-Civita pair violates its defining identities: "
            + report.counterexample.describe()
        )
    return pair


def verify_pair(alg: SuperAlgebra, form: BilinearForm, star, circ=None) -> CheckReport:
    """Check torsion on all basis pairs and compatibility on all triples.

    Every violation is collected, torsion pairs first, in canonical order.
    ``star`` may also be a :class:`DiSuperAlgebra` (then ``circ`` is omitted).
    """
    if isinstance(star, DiSuperAlgebra):
        star, circ = star.star, star.circ
    if not (alg.space == form.space == star.space == circ.space):
        raise SpaceMismatch("all tables must share one space")
    space = alg.space
    n = space.dim
    par = space.parities
    lab = space.labels
    t, st, ci = alg.tensor, star.tensor, circ.tensor
    G = form.matrix
    violations = []
    for i in range(n):
        for j in range(n):
            s = sign(par[i] * par[j])
            rhs = [a + s * b for a, b in zip(st[i][j], ci[j][i])]
            if list(t[i][j]) != rhs:
                violations.append(Counterexample(
                    (lab[i], lab[j]), Vector.from_dense(space, t[i][j]),
                    Vector.from_dense(space, rhs), "torsion"))
    for i in range(n):
        for j in range(n):
            s = sign(par[i] * par[j])
            uv = st[i][j]
            for k in range(n):
                lhs = sum((c * G[m][k] for m, c in enumerate(uv) if c), ZERO)
                rhs = s * sum((G[j][m] * c for m, c in enumerate(ci[i][k]) if c), ZERO)
                if lhs != rhs:
                    violations.append(Counterexample(
                        (lab[i], lab[j], lab[k]), lhs, rhs, "compatibility"))
    return CheckReport.from_violations(violations, "levi-civita pair")


# ---------------------------------------------------------------------------
# curvature

def _lincomb_mats(mats, coeffs, n):
    out = [[ZERO] * n for _ in range(n)]
    for c, m in zip(coeffs, mats):
        if c:
            for r in range(n):
                row, mr = out[r], m[r]
                for s in range(n):
                    if mr[s]:
                        row[s] += c * mr[s]
    return out


def _sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _add(a, b, c=1):
    return [[x + c * y for x, y in zip(r, s)] for r, s in zip(a, b)]


class CurvatureTensors:
    """K1, K2, K3 evaluated lazily per basis pair (u, v)."""

    NAMES = ("K1", "K2", "K3")

    def __init__(self, pair: LeviCivitaPair, alg: SuperAlgebra):
        if pair.space != alg.space:
            raise SpaceMismatch("pair and algebra live on different spaces")
        self.pair = pair
        self.alg = alg
        self.space = alg.space
        n = self.space.dim
        self._Ls = [left_matrix(pair.star, i) for i in range(n)]
        self._Lc = [left_matrix(pair.circ, i) for i in range(n)]
        self._cache = {}

    def _L_of(self, mats, x):
        return _lincomb_mats(mats, x, self.space.dim)

    def _compute(self, i, j):
        par = self.space.parities
        s = sign(par[i] * par[j])
        uv = self.alg.tensor[i][j]
        Ls, Lc = self._Ls, self._Lc
        Ls_uv = self._L_of(Ls, uv)
        Lc_uv = self._L_of(Lc, uv)
        k1 = _sub(Ls_uv, _add(mat_mul(Ls[i], Ls[j]), mat_mul(Ls[j], Ls[i]), -s))
        k2 = _add(_add([[-x for x in r] for r in Lc_uv], mat_mul(Ls[i], Lc[j])),
                  mat_mul(Lc[j], Lc[i]), s)
        k3 = _sub(Lc_uv, _add(mat_mul(Ls[i], Lc[j]), mat_mul(Lc[j], Ls[i]), -s))
        return k1, k2, k3

    def matrices(self, i: int, j: int) -> tuple:
        key = (i, j)
        if key not in self._cache:
            self._cache[key] = self._compute(i, j)
        return self._cache[key]

    def _map(self, which, u, v) -> LinearMap:
        sp = self.space
        i = u if isinstance(u, int) else sp.index(u)
        j = v if isinstance(v, int) else sp.index(v)
        deg = Parity((sp.parities[i] + sp.parities[j]) % 2)
        return LinearMap(sp, sp, self.matrices(i, j)[which], deg)

    def K1(self, u, v) -> LinearMap:
        return self._map(0, u, v)

    def K2(self, u, v) -> LinearMap:
        return self._map(1, u, v)

    def K3(self, u, v) -> LinearMap:
        return self._map(2, u, v)

    def first_nonzero(self):
        """First (name, u, v, w, value) with K(u,v)w ≠ 0, or None."""
        n = self.space.dim
        lab = self.space.labels
        for i in range(n):
            for j in range(n):
                for name, m in zip(self.NAMES, self.matrices(i, j)):
                    for k in range(n):
                        col = [m[r][k] for r in range(n)]
                        if any(col):
                            return name, lab[i], lab[j], lab[k], Vector.from_dense(self.space, col)
        return None

    def is_zero(self) -> bool:
        return self.first_nonzero() is None


def curvature(pair: LeviCivitaPair, alg: SuperAlgebra | None = None) -> CurvatureTensors:
    return CurvatureTensors(pair, pair.algebra if alg is None else alg)


def _require_left_leibniz(alg: SuperAlgebra):
    rep = check_identity(alg, IdentityKind.LEFT_LEIBNIZ)
    if not rep.holds:
        raise NotLeibniz("algebra is not left Leibniz: " + rep.counterexample.describe(),
                         "left-leibniz", rep.counterexample.labels)


def curvature_report(pair: LeviCivitaPair) -> CheckReport:
    hit = CurvatureTensors(pair, pair.algebra).first_nonzero()
    if hit is None:
        return CheckReport(True, name="flat")
    name, u, v, w, val = hit
    ce = Counterexample((name, u, v, w), val, pair.space.zero(), name)
    return CheckReport(False, ce, (ce,), "flat")


def is_flat(alg: SuperAlgebra, form: BilinearForm, pair: LeviCivitaPair | None = None) -> CheckReport:
    """Decide K1 = K2 = K3 = 0, cross-checked against the pre-left-Leibniz identities."""
    _require_left_leibniz(alg)
    if pair is None:
        pair = levi_civita(alg, form)
    report = curvature_report(pair)
    other = check_identity(pair.as_disuperalgebra(), IdentityKind.PRE_LEFT_LEIBNIZ)
    if report.holds != other.holds:
        raise InternalInconsistency(
            f"curvature says flat={report.holds} but the Levi-Civita pair has "
            f"pre-left-Leibniz={other.holds}"
        )
    return report


# ---------------------------------------------------------------------------
# operator identity families

def _first_matrix_difference(space, labels_ij, a, b, name):
    n = space.dim
    for k in range(n):
        ca = [a[r][k] for r in range(n)]
        cb = [b[r][k] for r in range(n)]
        if ca != cb:
            return Counterexample(labels_ij + (space.labels[k],),
                                  Vector.from_dense(space, ca), Vector.from_dense(space, cb), name)
    return None


@dataclass(frozen=True)
class ConditionReport:
    """Named CheckReports plus an overall verdict."""

    checks: dict
    holds: bool
    extra: dict = field(default_factory=dict)

    def first_failure(self):
        for name, rep in self.checks.items():
            if not rep.holds:
                return name, rep
        return None

    def __bool__(self):
        return self.holds


FLAT_FAMILIES = (
    "L*_{u.v} = [L*_u, L*_v]",
    "L*_u L*_v = -L*_u Lo_v",
    "L*_u L*_v = -Lo_u L*_v",
    "L*_u L*_v = Lo_u Lo_v",
)


def flatness_conditions(pair: LeviCivitaPair) -> ConditionReport:
    """The four operator families characterizing flatness."""
    space = pair.space
    n = space.dim
    par = space.parities
    lab = space.labels
    Ls = [left_matrix(pair.star, i) for i in range(n)]
    Lc = [left_matrix(pair.circ, i) for i in range(n)]
    t = pair.algebra.tensor
    found = {name: None for name in FLAT_FAMILIES}
    for i in range(n):
        for j in range(n):
            ij = (lab[i], lab[j])
            s = sign(par[i] * par[j])
            ss = mat_mul(Ls[i], Ls[j])
            checks = (
                (_lincomb_mats(Ls, t[i][j], n), _add(ss, mat_mul(Ls[j], Ls[i]), -s)),
                (ss, [[-x for x in r] for r in mat_mul(Ls[i], Lc[j])]),
                (ss, [[-x for x in r] for r in mat_mul(Lc[i], Ls[j])]),
                (ss, mat_mul(Lc[i], Lc[j])),
            )
            for name, (a, b) in zip(FLAT_FAMILIES, checks):
                if found[name] is None:
                    found[name] = _first_matrix_difference(space, ij, a, b, name)
    reports = {
        name: CheckReport(ce is None, ce, (ce,) if ce else (), name)
        for name, ce in found.items()
    }
    return ConditionReport(reports, all(r.holds for r in reports.values()))


BIANCHI_VARIANTS = ("derived", "stated", "proof")


def bianchi_check(pair: LeviCivitaPair, variant: str = "derived") -> CheckReport:
    """Compare (u•v)•w − u•(v•w) + s v•(u•w) with the curvature combination.

    The last term is (-1)^{|v||w|} K3(u,w)v for ``derived``, which follows from
    torsion alone and so holds for every pair. ``stated`` uses
    (-1)^{|v||w|} K3(w,u)v and ``proof`` uses (-1)^{|u||w|} K3(u,w)v.
    """
    if variant not in BIANCHI_VARIANTS:
        raise ValueError(f"unknown Bianchi variant {variant!r}")
    alg = pair.algebra
    space = alg.space
    n = space.dim
    par = space.parities
    lab = space.labels
    K = CurvatureTensors(pair, alg)
    t = alg.tensor
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = [
                    a - b + sign(par[i] * par[j]) * c
                    for a, b, c in zip(
                        alg.right_mul_basis(t[i][j], k),
                        alg.left_mul_basis(i, t[j][k]),
                        alg.left_mul_basis(j, t[i][k]),
                    )
                ]
                k1 = [row[k] for row in K.matrices(i, j)[0]]
                k2 = [row[i] for row in K.matrices(j, k)[1]]
                if variant == "stated":
                    k3 = [row[j] for row in K.matrices(k, i)[2]]
                    s3 = sign(par[j] * par[k])
                elif variant == "derived":
                    k3 = [row[j] for row in K.matrices(i, k)[2]]
                    s3 = sign(par[j] * par[k])
                else:
                    k3 = [row[j] for row in K.matrices(i, k)[2]]
                    s3 = sign(par[i] * par[k])
                s2 = sign(par[i] * par[j] + par[i] * par[k])
                rhs = [a + s2 * b + s3 * c for a, b, c in zip(k1, k2, k3)]
                if lhs != rhs:
                    ce = Counterexample((lab[i], lab[j], lab[k]), Vector.from_dense(space, lhs),
                                        Vector.from_dense(space, rhs), f"bianchi-{variant}")
                    return CheckReport(False, ce, (ce,), f"bianchi-{variant}")
    return CheckReport(True, name=f"bianchi-{variant}")


CHARA_NAMES = (
    "Lq_u Lq_v = 0",
    "Lq_u Lp_v = 0",
    "Lp_u Lq_v = 0",
    "Lp_{u,v}+ = 0",
    "Lq_{u,v}+ = 0",
    "Lq_[u,v] = 0",
)


def chara_conditions(alg: SuperAlgebra, form: BilinearForm) -> ConditionReport:
    """Flatness through the bracket/anti-bracket split.

    ``p`` (▷) is the Levi-Civita product of A⁻ and ``q`` (◁) that of A⁺.
    The verdict also requires A⁻ to be a flat Lie superalgebra; ``extra``
    records the direct flatness verdict for comparison.
    """
    _require_left_leibniz(alg)
    space = alg.space
    n = space.dim
    lab = space.labels
    minus, plus = polarization(alg)
    lc_minus = levi_civita(minus, form)
    lc_plus = levi_civita(plus, form)
    Lp = [left_matrix(lc_minus.star, i) for i in range(n)]
    Lq = [left_matrix(lc_plus.star, i) for i in range(n)]
    zero = [[ZERO] * n for _ in range(n)]
    found = {name: None for name in CHARA_NAMES}
    for i in range(n):
        for j in range(n):
            ij = (lab[i], lab[j])
            mats = (
                mat_mul(Lq[i], Lq[j]),
                mat_mul(Lq[i], Lp[j]),
                mat_mul(Lp[i], Lq[j]),
                _lincomb_mats(Lp, plus.tensor[i][j], n),
                _lincomb_mats(Lq, plus.tensor[i][j], n),
                _lincomb_mats(Lq, minus.tensor[i][j], n),
            )
            for name, m in zip(CHARA_NAMES, mats):
                if found[name] is None:
                    found[name] = _first_matrix_difference(space, ij, m, zero, name)
    checks = {
        name: CheckReport(ce is None, ce, (ce,) if ce else (), name) for name, ce in found.items()
    }
    checks["A- is Lie"] = check_identity(minus, IdentityKind.LIE)
    checks["A- flat"] = curvature_report(lc_minus)
    verdict = all(r.holds for r in checks.values())
    direct = is_flat(alg, form).holds
    return ConditionReport(checks, verdict, {"is_flat": direct, "agrees": verdict == direct})
