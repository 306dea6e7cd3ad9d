"""Shared plumbing: result types, label bookkeeping and equation lists.

Transcribed equation lists are written against a small evaluation context
(:class:`Ctx`) so each line reads close to its printed form.  Every line is
quantified over basis vectors of the base algebra; a line fails at the first
basis tuple where its two sides differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ..bilinear import BilinearForm, adjoint_matrix
from ..errors import ExtensionError, InternalInconsistency
from ..exactla import ZERO, LinearMap, Parity, SuperSpace, Vector, mat_vec, to_scalar
from ..superalg import CheckReport, DiSuperAlgebra, SuperAlgebra, admissible_product


def fresh_label(taken, stem: str) -> str:
    label = stem
    while label in taken:
        label += "'"
    return label


def extended_space(base: SuperSpace, before=(), after=()) -> SuperSpace:
    """Base labels with extra ``(label, parity)`` entries placed around them.

    Within each parity block the order is: ``before`` labels, base labels,
    ``after`` labels.
    """
    even, odd = [], []
    for label, p in before:
        (odd if p else even).append(label)
    even += list(base.even_basis)
    odd += list(base.odd_basis)
    for label, p in after:
        (odd if p else even).append(label)
    return SuperSpace(tuple(even), tuple(odd))


def embed_tensor(base: SuperAlgebra, space: SuperSpace) -> list:
    """Copy a product table into a larger space that contains every base label."""
    n = space.dim
    t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    idx = [space.index(l) for l in base.space.labels]
    for i, row in enumerate(base.tensor):
        for j, cell in enumerate(row):
            for k, c in enumerate(cell):
                if c:
                    t[idx[i]][idx[j]][idx[k]] = c
    return t


def embed_dense(x: Sequence, base: SuperSpace, space: SuperSpace) -> list:
    out = [ZERO] * space.dim
    for l, c in zip(base.labels, x):
        if c:
            out[space.index(l)] = c
    return out


def dense_of(v, space: SuperSpace) -> list:
    if v is None:
        return [ZERO] * space.dim
    if isinstance(v, Vector):
        if v.space != space:
            raise ExtensionError("vector lives in another space", "data", None)
        return list(v.dense)
    if isinstance(v, dict):
        return list(Vector(space, v).dense)
    return [to_scalar(c) for c in v]


def map_matrix(f, space: SuperSpace) -> list:
    if f is None:
        return [[ZERO] * space.dim for _ in range(space.dim)]
    if isinstance(f, LinearMap):
        if f.domain != space or f.codomain != space:
            raise ExtensionError("map is not an endomorphism of the base", "data", None)
        return [list(r) for r in f.matrix]
    return [[to_scalar(c) for c in r] for r in f]


def check_degree(matrix, space: SuperSpace, degree, name: str):
    par = space.parities
    for i, row in enumerate(matrix):
        for j, c in enumerate(row):
            if c and (par[j] + degree) % 2 != par[i]:
                raise ExtensionError(
                    f"{name} does not have degree {Parity(degree)}: "
                    f"{space.labels[j]} -> {space.labels[i]}",
                    "degree", (name, space.labels[j]))


def check_even_vector(x, space: SuperSpace, name: str):
    par = space.parities
    for k, c in enumerate(x):
        if c and par[k]:
            raise ExtensionError(f"{name} must be even, has a {space.labels[k]} component",
                                 "degree", (name,))


# ---------------------------------------------------------------------------
# equation lists

class Vec:
    """Dense coordinates with vector-space arithmetic, used inside equation lines."""

    __slots__ = ("c",)

    def __init__(self, coords):
        self.c = tuple(coords)

    def __add__(self, o):
        return Vec(a + b for a, b in zip(self.c, o.c))

    def __sub__(self, o):
        return Vec(a - b for a, b in zip(self.c, o.c))

    def __neg__(self):
        return Vec(-a for a in self.c)

    def __mul__(self, s):
        return Vec(s * a for a in self.c)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, Vec) and self.c == o.c

    def __hash__(self):
        return hash(self.c)


class Op:
    """A linear map acting on :class:`Vec`."""

    __slots__ = ("m",)

    def __init__(self, matrix):
        self.m = matrix

    def __call__(self, x: Vec) -> Vec:
        return Vec(mat_vec(self.m, x.c))


class Ctx:
    """Evaluation context for one base pair, form and set of data."""

    def __init__(self, pair: DiSuperAlgebra, form: BilinearForm | None, maps=None,
                 vectors=None, scalars=None, degree=0):
        self.pair = pair
        self.space = pair.space
        self.form = form
        self.n = pair.space.dim
        self.degree = int(degree)
        self.bullet_alg = admissible_product(pair)
        self._maps = {k: map_matrix(v, self.space) for k, v in (maps or {}).items()}
        for k, m in self._maps.items():
            setattr(self, k, Op(m))
        for k, v in (vectors or {}).items():
            setattr(self, k, Vec(v))
        for k, v in (scalars or {}).items():
            setattr(self, k, to_scalar(v))
        self.zero = Vec([ZERO] * self.n)

    # products
    def star(self, x: Vec, y: Vec) -> Vec:
        return Vec(self.pair.star.mul(x.c, y.c))

    def circ(self, x: Vec, y: Vec) -> Vec:
        return Vec(self.pair.circ.mul(x.c, y.c))

    def bullet(self, x: Vec, y: Vec) -> Vec:
        return Vec(self.bullet_alg.mul(x.c, y.c))

    def ip(self, x: Vec, y: Vec) -> Fraction:
        return self.form.pair_dense(x.c, y.c)

    def adj(self, name: str, degree=None) -> Op:
        """Graded adjoint of a stored map."""
        deg = self.degree if degree is None else degree
        return Op(adjoint_matrix(self.form, self._maps[name], deg))

    def right_op(self, which: str, x: Vec) -> list:
        """Matrix of u ↦ u ⋆ x (or ∘)."""
        alg = self.pair.star if which == "star" else self.pair.circ
        cols = [alg.mul(self.basis(j).c, x.c) for j in range(self.n)]
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]

    def adj_right(self, which: str, x: Vec) -> Op:
        """(R_x)* for an even vector x."""
        return Op(adjoint_matrix(self.form, self.right_op(which, x), 0))

    def basis(self, i: int) -> Vec:
        v = [ZERO] * self.n
        v[i] = Fraction(1)
        return Vec(v)

    def p(self, i: int) -> int:
        return int(self.space.parities[i])


@dataclass(frozen=True)
class Line:
    """One transcribed equation: ``fn(ctx, *basis indices) -> (lhs, rhs)``."""

    name: str
    arity: int
    fn: Callable


@dataclass(frozen=True)
class LineResult:
    name: str
    holds: bool
    witness: tuple | None = None
    lhs: object = None
    rhs: object = None

    def describe(self) -> str:
        if self.holds:
            return f"{self.name}: holds"
        return f"{self.name}: fails at {self.witness}: lhs={self.lhs}, rhs={self.rhs}"


def _show(x, space):
    if isinstance(x, Vec):
        return repr(Vector.from_dense(space, x.c))
    return str(x)


def _tuples(n, arity):
    if arity == 0:
        yield ()
    elif arity == 1:
        for i in range(n):
            yield (i,)
    else:
        for i in range(n):
            for j in range(n):
                if arity == 2:
                    yield (i, j)
                else:
                    for k in range(n):
                        yield (i, j, k)


def evaluate_lines(ctx: Ctx, lines: Sequence[Line]) -> list:
    """Evaluate every line; failing lines carry their first witness."""
    out = []
    lab = ctx.space.labels
    for line in lines:
        result = LineResult(line.name, True)
        for t in _tuples(ctx.n, line.arity):
            lhs, rhs = line.fn(ctx, *t)
            if lhs != rhs:
                result = LineResult(line.name, False, tuple(lab[i] for i in t),
                                    _show(lhs, ctx.space), _show(rhs, ctx.space))
                break
        out.append(result)
    return out


# ---------------------------------------------------------------------------
# results and acceptance policy

class ExtendedPair(DiSuperAlgebra):
    """A (⋆, ∘) pair returned by a construction, with its diagnostics."""

    def __init__(self, star, circ, lines=(), discrepancies=()):
        super().__init__(star, circ)
        object.__setattr__(self, "lines", tuple(lines))
        object.__setattr__(self, "discrepancies", tuple(discrepancies))


@dataclass(frozen=True)
class Extension:
    """A constructed algebra with its form; unpacks as ``(algebra, form)``."""

    algebra: SuperAlgebra
    form: BilinearForm
    pair: DiSuperAlgebra | None = None
    verdicts: dict = field(default_factory=dict)
    lines: tuple = ()
    discrepancies: tuple = ()

    def __iter__(self):
        yield self.algebra
        yield self.form


def decide(ground: CheckReport, lines: Sequence[LineResult], what: str) -> tuple:
    """Accept or reject a construction.

    ``ground`` is the identity check on the built object.  Transcribed lines
    only explain a failure; when the construction is valid but some
    transcribed lines fail, those lines are returned as discrepancies.
    """
    failing = [r for r in lines if not r.holds]
    if not ground.holds:
        ce = ground.counterexample
        if failing:
            first = failing[0]
            raise ExtensionError(
                f"{what} rejected: '{first.name}' fails at {first.witness} "
                f"(lhs={first.lhs}, rhs={first.rhs}); built tables break {ce.describe()}",
                first.name, first.witness)
        raise ExtensionError(f"{what} rejected: built tables break {ce.describe()}",
                             ce.equation, ce.labels)
    return tuple(f"{what}: transcribed line '{r.name}' fails at {r.witness} "
                 f"(lhs={r.lhs}, rhs={r.rhs}) although the construction is valid"
                 for r in failing)


def require(report: CheckReport, what: str):
    if not report.holds:
        raise InternalInconsistency(f"{what}: {report.counterexample.describe()}")
