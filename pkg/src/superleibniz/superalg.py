"""Superalgebras as structure-constant tensors and graded identity checking."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

from .errors import DimensionMismatch, InapplicableIdentity, ParityError, SpaceMismatch
from .exactla import (
    HALF,
    ZERO,
    LinearMap,
    SuperSpace,
    Vector,
    require_homogeneous,
    sign,
    to_scalar,
)


class SuperAlgebra:
    """One bilinear product on a super space.

    ``tensor[i][j][k]`` is the coefficient of ``b_k`` in ``b_i • b_j``.
    """

    __slots__ = ("space", "tensor", "_sparse")

    def __init__(self, space: SuperSpace, tensor):
        n = space.dim
        rows = tuple(
            tuple(tuple(to_scalar(c) for c in cell) for cell in row) for row in tensor
        )
        if len(rows) != n or any(len(r) != n for r in rows) or any(
            len(c) != n for r in rows for c in r
        ):
            raise DimensionMismatch(f"structure tensor must be {n}x{n}x{n}")
        par = space.parities
        sparse = []
        for i in range(n):
            srow = []
            for j in range(n):
                cell = []
                for k, c in enumerate(rows[i][j]):
                    if c:
                        if (par[i] + par[j]) % 2 != par[k]:
                            lab = space.labels
                            raise ParityError(
                                f"{lab[i]} * {lab[j]} has a {lab[k]} component, "
                                "which breaks the grading"
                            )
                        cell.append((k, c))
                srow.append(tuple(cell))
            sparse.append(tuple(srow))
        self.space = space
        self.tensor = rows
        self._sparse = tuple(sparse)

    @classmethod
    def zero(cls, space: SuperSpace) -> "SuperAlgebra":
        n = space.dim
        return cls(space, [[[ZERO] * n for _ in range(n)] for _ in range(n)])

    @classmethod
    def from_products(cls, space: SuperSpace, products: Mapping) -> "SuperAlgebra":
        """Build from ``{(left, right): value}`` with Vector or ``{label: scalar}`` values."""
        n = space.dim
        t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (a, b), value in products.items():
            i, j = space.index(a), space.index(b)
            vec = value if isinstance(value, Vector) else Vector(space, value)
            if vec.space != space:
                raise SpaceMismatch("product value in another space")
            t[i][j] = list(vec.dense)
        return cls(space, t)

    def structure_constants(self) -> dict:
        """Sparse view ``{(left, right): {label: coefficient}}`` of the nonzero products."""
        lab = self.space.labels
        out = {}
        n = self.space.dim
        for i in range(n):
            for j in range(n):
                cell = self._sparse[i][j]
                if cell:
                    out[(lab[i], lab[j])] = {lab[k]: c for k, c in cell}
        return out

    def basis_product(self, i: int, j: int) -> tuple:
        return self.tensor[i][j]

    def mul(self, x: Sequence, y: Sequence) -> list:
        """Product of two coordinate lists."""
        n = self.space.dim
        out = [ZERO] * n
        sp = self._sparse
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = sp[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, v in row[j]:
                    out[k] += c * v
        return out

    def left_mul_basis(self, i: int, y: Sequence) -> list:
        out = [ZERO] * self.space.dim
        row = self._sparse[i]
        for j, yj in enumerate(y):
            if yj:
                for k, v in row[j]:
                    out[k] += yj * v
        return out

    def right_mul_basis(self, x: Sequence, j: int) -> list:
        out = [ZERO] * self.space.dim
        sp = self._sparse
        for i, xi in enumerate(x):
            if xi:
                for k, v in sp[i][j]:
                    out[k] += xi * v
        return out

    def is_zero(self) -> bool:
        return not any(any(cell) for row in self._sparse for cell in row)

    def __eq__(self, other):
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return self.space == other.space and self.tensor == other.tensor

    def __hash__(self):
        return hash((self.space, self.tensor))

    def __add__(self, other: "SuperAlgebra") -> "SuperAlgebra":
        if other.space != self.space:
            raise SpaceMismatch("algebras over different spaces")
        return SuperAlgebra(self.space, _tensor_lincomb(self.tensor, other.tensor, 1, 1))

    def __sub__(self, other: "SuperAlgebra") -> "SuperAlgebra":
        if other.space != self.space:
            raise SpaceMismatch("algebras over different spaces")
        return SuperAlgebra(self.space, _tensor_lincomb(self.tensor, other.tensor, 1, -1))

    def scaled(self, c) -> "SuperAlgebra":
        c = to_scalar(c)
        return SuperAlgebra(self.space, [[[c * x for x in cell] for cell in row] for row in self.tensor])

    def __repr__(self):
        sc = self.structure_constants()
        parts = [f"{a}*{b}={Vector(self.space, v)!r}" for (a, b), v in sc.items()]
        return f"SuperAlgebra({self.space!r}; " + (", ".join(parts) or "abelian") + ")"


def _tensor_lincomb(t1, t2, a, b):
    return [
        [[a * x + b * y for x, y in zip(c1, c2)] for c1, c2 in zip(r1, r2)]
        for r1, r2 in zip(t1, t2)
    ]


@dataclass(frozen=True)
class DiSuperAlgebra:
    """Two products ⋆ and ∘ on the same super space."""

    star: SuperAlgebra
    circ: SuperAlgebra

    def __post_init__(self):
        if self.star.space != self.circ.space:
            raise SpaceMismatch("star and circ live on different spaces")

    @property
    def space(self) -> SuperSpace:
        return self.star.space


class IdentityKind(str, Enum):
    LEFT_LEIBNIZ = "left-leibniz"
    RIGHT_LEIBNIZ = "right-leibniz"
    SYMMETRIC_LEIBNIZ = "symmetric-leibniz"
    SUPER_ANTICOMMUTATIVE = "super-anticommutative"
    SUPER_COMMUTATIVE = "super-commutative"
    LIE = "lie"
    LEFT_SYMMETRIC = "left-symmetric"
    PRE_LEFT_LEIBNIZ = "pre-left-leibniz"
    PRE_RIGHT_LEIBNIZ = "pre-right-leibniz"
    TWO_STEP_NILPOTENT = "two-step-nilpotent"


DI_KINDS = frozenset({IdentityKind.PRE_LEFT_LEIBNIZ, IdentityKind.PRE_RIGHT_LEIBNIZ})


@dataclass(frozen=True)
class Counterexample:
    """Where an identity fails: basis labels and the two unequal sides.

    Sides are Vectors for product identities and Fractions for scalar ones
    (invariance, compatibility).
    """

    labels: tuple
    lhs: object
    rhs: object
    equation: str | None = None

    def describe(self) -> str:
        where = ", ".join(self.labels)
        name = f"{self.equation} " if self.equation else ""
        return f"{name}fails at ({where}): lhs={self.lhs!r}, rhs={self.rhs!r}"


@dataclass(frozen=True)
class CheckReport:
    holds: bool
    counterexample: Counterexample | None = None
    violations: tuple = field(default=())
    name: str | None = None

    def __post_init__(self):
        if self.holds != (self.counterexample is None):
            raise ValueError("holds must be true exactly when no counterexample is given")

    def __bool__(self):
        return self.holds

    @classmethod
    def from_violations(cls, violations, name=None) -> "CheckReport":
        violations = tuple(violations)
        return cls(not violations, violations[0] if violations else None, violations, name)


def evaluate_product(alg: SuperAlgebra, x: Vector, y: Vector) -> Vector:
    if x.space != alg.space or y.space != alg.space:
        raise SpaceMismatch("arguments are not in the algebra's space")
    return Vector.from_dense(alg.space, alg.mul(x.dense, y.dense))


def left_matrix(alg: SuperAlgebra, i: int) -> list:
    """Matrix of v ↦ b_i • v."""
    n = alg.space.dim
    m = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        for k, c in alg._sparse[i][j]:
            m[k][j] = c
    return m


def right_matrix(alg: SuperAlgebra, i: int) -> list:
    """Matrix of v ↦ (-1)^{|b_i||v|} v • b_i."""
    n = alg.space.dim
    par = alg.space.parities
    m = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        s = sign(par[i] * par[j])
        for k, c in alg._sparse[j][i]:
            m[k][j] = s * c
    return m


def multiplication_operator(alg: SuperAlgebra, side: str, u: Vector) -> LinearMap:
    """Left (v ↦ u•v) or right (v ↦ (-1)^{|u||v|} v•u) multiplication by ``u``."""
    if u.space != alg.space:
        raise SpaceMismatch("u is not in the algebra's space")
    deg = require_homogeneous(u)
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    n = alg.space.dim
    total = [[ZERO] * n for _ in range(n)]
    build = left_matrix if side == "left" else right_matrix
    for i, c in enumerate(u.dense):
        if c:
            m = build(alg, i)
            for r in range(n):
                for s in range(n):
                    if m[r][s]:
                        total[r][s] += c * m[r][s]
    return LinearMap(alg.space, alg.space, total, deg)


# ---------------------------------------------------------------------------
# identity checking

class _Products:
    """Cached basis products with helpers for evaluating nested terms."""

    def __init__(self, alg: SuperAlgebra):
        self.alg = alg
        n = alg.space.dim
        self.basis = [[list(alg.tensor[i][j]) for j in range(n)] for i in range(n)]

    def lm(self, i, y):
        return self.alg.left_mul_basis(i, y)

    def rm(self, x, j):
        return self.alg.right_mul_basis(x, j)


def _lin(*terms):
    """Sum of ``coefficient * vector`` pairs."""
    out = None
    for c, vec in terms:
        if out is None:
            out = [ZERO] * len(vec)
        if c == 1:
            for k, v in enumerate(vec):
                if v:
                    out[k] += v
        elif c == -1:
            for k, v in enumerate(vec):
                if v:
                    out[k] -= v
        elif c:
            for k, v in enumerate(vec):
                if v:
                    out[k] += c * v
    return out


def _triples(n):
    for i in range(n):
        for j in range(n):
            for k in range(n):
                yield i, j, k


def _pairs(n):
    for i in range(n):
        for j in range(n):
            yield i, j


def _single_alg_equations(kind, alg: SuperAlgebra):
    """Return (arity, [(name, fn)]) where fn(indices) -> (lhs, rhs) dense lists."""
    P = _Products(alg)
    par = alg.space.parities
    b = P.basis

    def left(i, j, k):
        lhs = P.lm(i, b[j][k])
        rhs = _lin((1, P.rm(b[i][j], k)), (sign(par[i] * par[j]), P.lm(j, b[i][k])))
        return lhs, rhs

    def right(i, j, k):
        lhs = P.lm(i, b[j][k])
        rhs = _lin((1, P.rm(b[i][j], k)), (-sign(par[j] * par[k]), P.rm(b[i][k], j)))
        return lhs, rhs

    def anti(i, j):
        return b[i][j], [-sign(par[i] * par[j]) * x for x in b[j][i]]

    def comm(i, j):
        return b[i][j], [sign(par[i] * par[j]) * x for x in b[j][i]]

    def left_sym(i, j, k):
        a1 = _lin((1, P.rm(b[i][j], k)), (-1, P.lm(i, b[j][k])))
        a2 = _lin((1, P.rm(b[j][i], k)), (-1, P.lm(j, b[i][k])))
        return a1, [sign(par[i] * par[j]) * x for x in a2]

    def nil_left(i, j, k):
        lhs = P.rm(b[i][j], k)
        return lhs, [ZERO] * len(lhs)

    def nil_right(i, j, k):
        lhs = P.lm(i, b[j][k])
        return lhs, [ZERO] * len(lhs)

    table = {
        IdentityKind.LEFT_LEIBNIZ: [(3, [("left-leibniz", left)])],
        IdentityKind.RIGHT_LEIBNIZ: [(3, [("right-leibniz", right)])],
        IdentityKind.SYMMETRIC_LEIBNIZ: [(3, [("left-leibniz", left), ("right-leibniz", right)])],
        IdentityKind.SUPER_ANTICOMMUTATIVE: [(2, [("super-anticommutative", anti)])],
        IdentityKind.SUPER_COMMUTATIVE: [(2, [("super-commutative", comm)])],
        IdentityKind.LIE: [(2, [("super-anticommutative", anti)]), (3, [("left-leibniz", left)])],
        IdentityKind.LEFT_SYMMETRIC: [(3, [("left-symmetric", left_sym)])],
        IdentityKind.TWO_STEP_NILPOTENT: [
            (3, [("(u*v)*w = 0", nil_left), ("u*(v*w) = 0", nil_right)])
        ],
    }
    return table[kind]


def _di_equations(kind, d: DiSuperAlgebra):
    S, C = _Products(d.star), _Products(d.circ)
    par = d.space.parities
    s_ = S.basis
    c_ = C.basis

    def id1(i, j, k):
        e = sign(par[i] * par[j])
        lhs = _lin((1, S.rm(s_[i][j], k)), (-1, S.lm(i, s_[j][k])))
        rhs = _lin((-e, S.rm(c_[j][i], k)), (-e, S.lm(j, s_[i][k])))
        return lhs, rhs

    def id2(i, j, k):
        e = sign(par[i] * par[j])
        lhs = _lin((1, C.rm(s_[i][j], k)), (-1, S.lm(i, c_[j][k])))
        rhs = _lin((-e, C.rm(c_[j][i], k)), (e, C.lm(j, c_[i][k])))
        return lhs, rhs

    def id3(i, j, k):
        return C.lm(i, c_[j][k]), [-x for x in C.lm(i, s_[j][k])]

    def id4(i, j, k):
        e = sign(par[i] * par[j])
        lhs = _lin((1, C.rm(s_[i][j], k)), (1, C.lm(i, c_[j][k])))
        rhs = _lin((-e, C.rm(c_[j][i], k)), (e, C.lm(j, c_[i][k])))
        return lhs, rhs

    def id5(i, j, k):
        e = sign(par[i] * par[j])
        lhs = _lin((1, S.rm(s_[i][j], k)), (-1, S.lm(i, s_[j][k])))
        rhs = _lin((-e, S.rm(c_[j][i], k)), (e, C.lm(j, s_[i][k])))
        return lhs, rhs

    def id6(i, j, k):
        return S.lm(i, s_[j][k]), [-x for x in S.lm(i, c_[j][k])]

    if kind == IdentityKind.PRE_LEFT_LEIBNIZ:
        return [(3, [("id1", id1), ("id2", id2), ("id3", id3)])]
    return [(3, [("id4", id4), ("id5", id5), ("id6", id6)])]


def _run(groups, space: SuperSpace, first_only: bool, name: str):
    n = space.dim
    lab = space.labels
    violations = []
    for arity, eqs in groups:
        idx = _triples(n) if arity == 3 else _pairs(n)
        for t in idx:
            for eq_name, fn in eqs:
                lhs, rhs = fn(*t)
                if lhs != rhs:
                    violations.append(
                        Counterexample(
                            tuple(lab[i] for i in t),
                            Vector.from_dense(space, lhs),
                            Vector.from_dense(space, rhs),
                            eq_name,
                        )
                    )
                    if first_only:
                        return CheckReport.from_violations(violations, name)
    return CheckReport.from_violations(violations, name)


def check_identity(subject, kind, *, all_violations: bool = False) -> CheckReport:
    """Exhaustively test ``kind`` on basis tuples of ``subject``.

    The first violation in lexicographic basis order is reported; with
    ``all_violations`` every violating tuple is collected.
    """
    kind = IdentityKind(kind)
    if kind in DI_KINDS:
        if not isinstance(subject, DiSuperAlgebra):
            raise InapplicableIdentity(f"{kind.value} needs a di-superalgebra")
        groups = _di_equations(kind, subject)
    else:
        if not isinstance(subject, SuperAlgebra):
            raise InapplicableIdentity(f"{kind.value} needs a single-product superalgebra")
        groups = _single_alg_equations(kind, subject)
    return _run(groups, subject.space, not all_violations, kind.value)


def holds(subject, kind) -> bool:
    return check_identity(subject, kind).holds


# ---------------------------------------------------------------------------
# derived products

def admissible_product(d: DiSuperAlgebra) -> SuperAlgebra:
    """The mixed product u • v = u⋆v + (-1)^{|u||v|} v∘u."""
    n = d.space.dim
    par = d.space.parities
    st, ci = d.star.tensor, d.circ.tensor
    t = [
        [[a + sign(par[i] * par[j]) * b for a, b in zip(st[i][j], ci[j][i])] for j in range(n)]
        for i in range(n)
    ]
    return SuperAlgebra(d.space, t)


def polarization(alg: SuperAlgebra) -> tuple:
    """Split • into the bracket (minus) and anti-bracket (plus) parts."""
    n = alg.space.dim
    par = alg.space.parities
    t = alg.tensor
    minus, plus = [], []
    for i in range(n):
        mrow, prow = [], []
        for j in range(n):
            s = sign(par[i] * par[j])
            mrow.append([HALF * (a - s * b) for a, b in zip(t[i][j], t[j][i])])
            prow.append([HALF * (a + s * b) for a, b in zip(t[i][j], t[j][i])])
        minus.append(mrow)
        plus.append(prow)
    return SuperAlgebra(alg.space, minus), SuperAlgebra(alg.space, plus)


def opposite(alg: SuperAlgebra) -> SuperAlgebra:
    """u •_opp v = (-1)^{|u||v|} v • u."""
    n = alg.space.dim
    par = alg.space.parities
    t = alg.tensor
    return SuperAlgebra(
        alg.space,
        [[[sign(par[i] * par[j]) * x for x in t[j][i]] for j in range(n)] for i in range(n)],
    )


def swap_products(d: DiSuperAlgebra) -> DiSuperAlgebra:
    """The pair u ⋆⁰ v = (-1)^{|u||v|} u∘v, u ∘⁰ v = (-1)^{|u||v|} u⋆v."""
    n = d.space.dim
    par = d.space.parities

    def signed(t):
        return [[[sign(par[i] * par[j]) * x for x in t[i][j]] for j in range(n)] for i in range(n)]

    return DiSuperAlgebra(SuperAlgebra(d.space, signed(d.circ.tensor)),
                          SuperAlgebra(d.space, signed(d.star.tensor)))


def flip(alg: SuperAlgebra) -> SuperAlgebra:
    """u ↦ v • u without a Koszul sign."""
    n = alg.space.dim
    t = alg.tensor
    return SuperAlgebra(alg.space, [[t[j][i] for j in range(n)] for i in range(n)])


def is_associative(alg: SuperAlgebra) -> CheckReport:
    """(u•v)•w = u•(v•w) on all basis triples."""
    P = _Products(alg)
    b = P.basis

    def assoc(i, j, k):
        return P.rm(b[i][j], k), P.lm(i, b[j][k])

    return _run([(3, [("associative", assoc)])], alg.space, True, "associative")
