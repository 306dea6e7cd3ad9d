"""Supersymmetric bilinear forms, adjoints and subspace bookkeeping.

The Gram table holds raw values B(b_i, b_j).  Supersymmetry is the rule
B(u, v) = (-1)^{|u||v|} B(v, u) on homogeneous elements.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegenerateForm,
    NotHomogeneous,
    ParityError,
    SpaceMismatch,
    SupersymmetryConflict,
)
from .exactla import (
    ZERO,
    LinearMap,
    Parity,
    SuperSpace,
    Vector,
    as_dense,
    inverse,
    mat_mul,
    mat_vec,
    nullspace,
    rref,
    sign,
    solve_linear,
    to_scalar,
    transpose,
)
from .superalg import CheckReport, Counterexample, SuperAlgebra


class BilinearForm:
    """A homogeneous supersymmetric bilinear form with its Gram table."""

    __slots__ = ("space", "parity", "matrix", "__dict__")

    def __init__(self, space: SuperSpace, parity, matrix, *, check_nondegenerate=True):
        parity = Parity.parse(parity)
        n = space.dim
        rows = tuple(tuple(to_scalar(x) for x in row) for row in matrix)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"Gram table must be {n}x{n}")
        par = space.parities
        lab = space.labels
        for i in range(n):
            for j in range(n):
                x = rows[i][j]
                if x and (par[i] + par[j]) % 2 != parity:
                    raise ParityError(
                        f"<{lab[i]}, {lab[j]}> = {x} is not allowed in a {parity} form"
                    )
                if x != sign(par[i] * par[j]) * rows[j][i]:
                    raise SupersymmetryConflict(
                        f"<{lab[i]}, {lab[j]}> and <{lab[j]}, {lab[i]}> are not supersymmetric"
                    )
        self.space = space
        self.parity = parity
        self.matrix = rows
        if check_nondegenerate:
            self.inverse_matrix  # noqa: B018  (raises on a degenerate table)

    @cached_property
    def inverse_matrix(self) -> list:
        sol = solve_linear(self.matrix, [[ZERO] * self.space.dim]) if self.space.dim else None
        if sol is not None and sol.kernel is not None:
            witness = Vector.from_dense(self.space, sol.kernel)
            raise DegenerateForm(f"form is degenerate; {witness!r} pairs to zero with everything",
                                 witness)
        return inverse(self.matrix)

    @property
    def gram(self) -> dict:
        lab = self.space.labels
        return {
            (lab[i], lab[j]): x
            for i, row in enumerate(self.matrix)
            for j, x in enumerate(row)
            if x
        }

    def entry(self, a: str, b: str) -> Fraction:
        return self.matrix[self.space.index(a)][self.space.index(b)]

    def pair_dense(self, x: Sequence, y: Sequence) -> Fraction:
        gy = mat_vec(self.matrix, y)
        return sum((a * b for a, b in zip(x, gy) if a and b), ZERO)

    def pair(self, x: Vector, y: Vector) -> Fraction:
        if x.space != self.space or y.space != self.space:
            raise SpaceMismatch("vectors are not in the form's space")
        return self.pair_dense(x.dense, y.dense)

    def __eq__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return (self.space == other.space and self.parity == other.parity
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.space, self.parity, self.matrix))

    def __repr__(self):
        items = ", ".join(f"<{a},{b}>={v}" for (a, b), v in self.gram.items())
        return f"BilinearForm({self.parity}; {items})"


def _iter_entries(entries) -> Iterable:
    if isinstance(entries, Mapping):
        for (a, b), v in entries.items():
            yield a, b, v
        return
    for item in entries:
        if isinstance(item, Mapping):
            yield item["a"], item["b"], item["value"]
        else:
            a, b, v = item
            yield a, b, v


def build_form(space: SuperSpace, parity, entries=()) -> BilinearForm:
    """Build a nondegenerate form from sparse entries, completing mirrors.

    ``entries`` is a mapping ``{(a, b): value}`` or an iterable of ``(a, b,
    value)`` triples (or ``{"a", "b", "value"}`` dicts).
    """
    parity = Parity.parse(parity)
    n = space.dim
    par = space.parities
    table: dict = {}
    for a, b, v in _iter_entries(entries):
        i, j = space.index(a), space.index(b)
        v = to_scalar(v)
        if (par[i] + par[j]) % 2 != parity and v:
            raise ParityError(f"<{a}, {b}> cannot be nonzero in a {parity} form")
        for key, val in (((i, j), v), ((j, i), sign(par[i] * par[j]) * v)):
            if key in table and table[key] != val:
                raise SupersymmetryConflict(
                    f"conflicting values for <{space.labels[key[0]]}, {space.labels[key[1]]}>"
                )
            table[key] = val
    m = [[ZERO] * n for _ in range(n)]
    for (i, j), v in table.items():
        m[i][j] = v
    return BilinearForm(space, parity, m)


def is_invariant(alg: SuperAlgebra, form: BilinearForm) -> CheckReport:
    """⟨u•v, w⟩ = ⟨u, v•w⟩ on every basis triple."""
    if alg.space != form.space:
        raise SpaceMismatch("algebra and form live on different spaces")
    n = alg.space.dim
    G = form.matrix
    lab = alg.space.labels
    t = alg.tensor
    for i in range(n):
        for j in range(n):
            uv = t[i][j]
            for k in range(n):
                lhs = sum((c * G[m][k] for m, c in enumerate(uv) if c), ZERO)
                rhs = sum((G[i][m] * c for m, c in enumerate(t[j][k]) if c), ZERO)
                if lhs != rhs:
                    ce = Counterexample((lab[i], lab[j], lab[k]), lhs, rhs, "invariance")
                    return CheckReport(False, ce, (ce,), "invariant")
    return CheckReport(True, name="invariant")


def adjoint_matrix(form: BilinearForm, f_matrix, degree) -> list:
    """Matrix of the adjoint of a degree-``degree`` endomorphism."""
    par = form.space.parities
    ft_g = mat_mul(transpose(f_matrix), form.matrix)
    signed = [[sign(int(degree) * par[j]) * x for x in row] for j, row in enumerate(ft_g)]
    return mat_mul(form.inverse_matrix, signed)


def adjoint(form: BilinearForm, f: LinearMap) -> LinearMap:
    """The g with ⟨f(u), v⟩ = (-1)^{|f||u|} ⟨u, g(v)⟩."""
    if f.domain != form.space or f.codomain != form.space:
        raise SpaceMismatch("adjoint needs an endomorphism of the form's space")
    deg = f.homogeneous_degree()
    if deg is None:
        raise NotHomogeneous("adjoint of a non-homogeneous map")
    return LinearMap(form.space, form.space, adjoint_matrix(form, f.matrix, deg), deg)


# ---------------------------------------------------------------------------
# subspaces

class SubSpace:
    """A subspace stored by its reduced row echelon basis."""

    __slots__ = ("space", "rows", "pivots")

    def __init__(self, space: SuperSpace, vectors: Iterable = ()):
        dense = [as_dense(v, space.dim) for v in vectors]
        for v in vectors:
            if isinstance(v, Vector) and v.space != space:
                raise SpaceMismatch("spanning vector from another space")
        rows, pivots = rref(dense) if dense else ([], [])
        self.space = space
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def full(cls, space: SuperSpace) -> "SubSpace":
        return cls(space, [v.dense for v in space.basis()])

    @classmethod
    def zero(cls, space: SuperSpace) -> "SubSpace":
        return cls(space, [])

    @classmethod
    def of_labels(cls, space: SuperSpace, labels: Iterable[str]) -> "SubSpace":
        return cls(space, [space.basis_vector(l) for l in labels])

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis_vectors(self) -> list:
        return [Vector.from_dense(self.space, r) for r in self.rows]

    def contains(self, v) -> bool:
        x = as_dense(v, self.space.dim)
        return SubSpace(self.space, list(self.rows) + [x]).dim == self.dim

    def contains_subspace(self, other: "SubSpace") -> bool:
        return (self + other).dim == self.dim

    def is_graded(self) -> bool:
        par = self.space.parities
        return all(len({par[k] for k, x in enumerate(r) if x}) <= 1 for r in self.rows)

    def component(self, parity) -> "SubSpace":
        """Vectors of the given parity (the subspace must be graded)."""
        parity = Parity.parse(parity)
        if not self.is_graded():
            raise NotHomogeneous("subspace is not graded")
        par = self.space.parities
        keep = [r for r in self.rows if any(x for k, x in enumerate(r) if par[k] == parity)]
        return SubSpace(self.space, keep)

    def annihilator_equations(self) -> list:
        """Rows y with y·x = 0 exactly for x in the subspace."""
        return nullspace(list(self.rows), self.space.dim) if self.rows else [
            list(v.dense) for v in self.space.basis()
        ]

    def intersection(self, other: "SubSpace") -> "SubSpace":
        if other.space != self.space:
            raise SpaceMismatch("subspaces of different spaces")
        if not self.rows or not other.rows:
            return SubSpace.zero(self.space)
        eqs = other.annihilator_equations()
        if not eqs:
            return self
        # coefficient matrix: eqs · rowsᵀ
        coeff = [[sum((a * b for a, b in zip(y, r)), ZERO) for r in self.rows] for y in eqs]
        combos = nullspace(coeff, self.dim)
        n = self.space.dim
        vecs = []
        for c in combos:
            v = [ZERO] * n
            for ci, r in zip(c, self.rows):
                if ci:
                    for k, x in enumerate(r):
                        v[k] += ci * x
            vecs.append(v)
        return SubSpace(self.space, vecs)

    def __add__(self, other: "SubSpace") -> "SubSpace":
        if other.space != self.space:
            raise SpaceMismatch("subspaces of different spaces")
        return SubSpace(self.space, list(self.rows) + list(other.rows))

    def __eq__(self, other):
        if not isinstance(other, SubSpace):
            return NotImplemented
        return self.space == other.space and self.rows == other.rows

    def __hash__(self):
        return hash((self.space, self.rows))

    def __repr__(self):
        return f"SubSpace(dim={self.dim}, basis={self.basis_vectors!r})"


def span(space: SuperSpace, vectors: Iterable) -> SubSpace:
    return SubSpace(space, list(vectors))


def orthogonal(form: BilinearForm, s: SubSpace) -> SubSpace:
    """{x : ⟨x, y⟩ = 0 for every y in s}."""
    if s.space != form.space:
        raise SpaceMismatch("subspace and form live on different spaces")
    n = form.space.dim
    constraints = [mat_vec(form.matrix, r) for r in s.rows]
    if not constraints:
        return SubSpace.full(form.space)
    return SubSpace(form.space, nullspace(constraints, n))


def is_totally_isotropic(form: BilinearForm, s: SubSpace) -> bool:
    return all(form.pair_dense(x, y) == 0 for x in s.rows for y in s.rows)
