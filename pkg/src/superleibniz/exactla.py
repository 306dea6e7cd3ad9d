"""Exact graded linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` values; floats are refused at every
entry point.  Matrices are plain lists (or tuples) of rows and use the
canonical basis order of a :class:`SuperSpace`: even labels first, then odd.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    InconsistentSystem,
    NotHomogeneous,
    ParityError,
    SingularMatrix,
    SpaceMismatch,
)

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_scalar(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ``int``, ``Fraction`` and strings of the form ``"p"`` or ``"p/q"``.
    Floats, decimals and booleans are rejected.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if not m:
            raise ValueError(f"not an exact rational: {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    raise TypeError(f"exact scalar expected, got {type(value).__name__}")


def format_scalar(value: Fraction) -> str:
    value = to_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(exponent: int) -> int:
    """(-1) ** exponent for an integer exponent."""
    return -1 if exponent & 1 else 1


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def __str__(self):
        return self.name.lower()

    @classmethod
    def parse(cls, value) -> "Parity":
        if isinstance(value, Parity):
            return value
        if isinstance(value, str):
            key = value.strip().lower()
            if key in ("even", "0"):
                return cls.EVEN
            if key in ("odd", "1"):
                return cls.ODD
            raise ValueError(f"unknown parity {value!r}")
        if isinstance(value, int) and not isinstance(value, bool) and value in (0, 1):
            return cls(value)
        raise ValueError(f"unknown parity {value!r}")


@dataclass(frozen=True)
class SuperSpace:
    """A Z2-graded space given by ordered even and odd basis labels."""

    even_basis: tuple = ()
    odd_basis: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "even_basis", tuple(self.even_basis))
        object.__setattr__(self, "odd_basis", tuple(self.odd_basis))
        labels = self.even_basis + self.odd_basis
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ValueError(f"basis labels must be non-empty strings, got {label!r}")
        if len(set(labels)) != len(labels):
            seen, dup = set(), []
            for label in labels:
                if label in seen:
                    dup.append(label)
                seen.add(label)
            raise ValueError(f"duplicate basis labels: {dup}")

    @cached_property
    def labels(self) -> tuple:
        return self.even_basis + self.odd_basis

    @cached_property
    def parities(self) -> tuple:
        return (0,) * len(self.even_basis) + (1,) * len(self.odd_basis)

    @cached_property
    def _index(self) -> dict:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return len(self.even_basis) + len(self.odd_basis)

    @property
    def sdim(self) -> tuple:
        return (len(self.even_basis), len(self.odd_basis))

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def parity(self, key) -> Parity:
        i = key if isinstance(key, int) else self.index(key)
        return Parity(self.parities[i])

    def basis_vector(self, label) -> "Vector":
        i = label if isinstance(label, int) else self.index(label)
        dense = [ZERO] * self.dim
        dense[i] = ONE
        return Vector.from_dense(self, dense)

    def basis(self) -> list:
        return [self.basis_vector(i) for i in range(self.dim)]

    def zero(self) -> "Vector":
        return Vector.from_dense(self, [ZERO] * self.dim)

    def vector(self, coords: Mapping) -> "Vector":
        return Vector(self, coords)

    def __repr__(self):
        return f"SuperSpace(even={list(self.even_basis)}, odd={list(self.odd_basis)})"


_PI_PREFIX = "Π("


def _shift_label(label: str) -> str:
    if label.startswith(_PI_PREFIX) and label.endswith(")"):
        return label[len(_PI_PREFIX):-1]
    return f"{_PI_PREFIX}{label})"


def parity_shift(space: SuperSpace) -> SuperSpace:
    """The change of parity functor: swap the blocks and mark every label.

    Labels already carrying the marker are unwrapped, so shifting twice gives
    back the original labels.
    """
    return SuperSpace(
        even_basis=tuple(_shift_label(l) for l in space.odd_basis),
        odd_basis=tuple(_shift_label(l) for l in space.even_basis),
    )


class Vector:
    """An element of a :class:`SuperSpace` with exact coordinates."""

    __slots__ = ("space", "_dense")

    def __init__(self, space: SuperSpace, coords: Mapping | None = None):
        dense = [ZERO] * space.dim
        for label, value in (coords or {}).items():
            dense[space.index(label)] += to_scalar(value)
        self.space = space
        self._dense = tuple(dense)

    @classmethod
    def from_dense(cls, space: SuperSpace, values: Sequence) -> "Vector":
        if len(values) != space.dim:
            raise DimensionMismatch(f"expected {space.dim} coordinates, got {len(values)}")
        obj = cls.__new__(cls)
        obj.space = space
        obj._dense = tuple(to_scalar(v) for v in values)
        return obj

    @property
    def dense(self) -> tuple:
        return self._dense

    @property
    def coords(self) -> dict:
        return {l: c for l, c in zip(self.space.labels, self._dense) if c}

    def __getitem__(self, label: str) -> Fraction:
        return self._dense[self.space.index(label)]

    def is_zero(self) -> bool:
        return not any(self._dense)

    @property
    def support_parities(self) -> set:
        return {p for p, c in zip(self.space.parities, self._dense) if c}

    def is_homogeneous(self) -> bool:
        return len(self.support_parities) <= 1

    @property
    def parity(self) -> Parity | None:
        """Parity of a nonzero homogeneous vector, else ``None``."""
        ps = self.support_parities
        return Parity(ps.pop()) if len(ps) == 1 else None

    def _check(self, other: "Vector"):
        if not isinstance(other, Vector):
            return NotImplemented
        if other.space != self.space:
            raise SpaceMismatch("vectors live in different spaces")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Vector.from_dense(self.space, [a + b for a, b in zip(self._dense, other._dense)])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Vector.from_dense(self.space, [a - b for a, b in zip(self._dense, other._dense)])

    def __neg__(self):
        return Vector.from_dense(self.space, [-a for a in self._dense])

    def __mul__(self, scalar):
        c = to_scalar(scalar)
        return Vector.from_dense(self.space, [c * a for a in self._dense])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.space == other.space and self._dense == other._dense

    def __hash__(self):
        return hash((self.space, self._dense))

    def __repr__(self):
        if self.is_zero():
            return "Vector(0)"
        terms = []
        for label, c in self.coords.items():
            terms.append(label if c == 1 else f"{format_scalar(c)}*{label}")
        return "Vector(" + " + ".join(terms) + ")"


def as_dense(x, dim: int | None = None) -> list:
    """Coordinates of a Vector or a plain sequence as a list of Fractions."""
    values = list(x.dense) if isinstance(x, Vector) else [to_scalar(v) for v in x]
    if dim is not None and len(values) != dim:
        raise DimensionMismatch(f"expected length {dim}, got {len(values)}")
    return values


# ---------------------------------------------------------------------------
# dense matrix helpers

def zero_matrix(rows: int, cols: int) -> list:
    return [[ZERO] * cols for _ in range(rows)]


def identity_matrix(n: int) -> list:
    m = zero_matrix(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def transpose(m: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    if not a:
        return []
    inner = len(b)
    if len(a[0]) != inner:
        raise DimensionMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {inner}x?")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * cols
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def mat_vec(a: Sequence[Sequence], x: Sequence) -> list:
    out = []
    for row in a:
        acc = ZERO
        for r, v in zip(row, x):
            if r and v:
                acc += r * v
        out.append(acc)
    return out


def rref(m: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns ``(rows, pivots)`` where ``rows`` keeps only the nonzero rows.
    """
    rows = [[to_scalar(x) for x in row] for row in m]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list:
    """Basis of {x : m x = 0}, one vector per free column in column order."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    rows, pivots = rref(m) if m else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, pc in zip(rows, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return basis


def _normalize_witness(x: list) -> tuple:
    lead = next(v for v in x if v)
    return tuple(v / lead for v in x)


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of :func:`solve_linear`: solution columns or a kernel witness."""

    columns: tuple | None
    kernel: tuple | None

    @property
    def unique(self) -> bool:
        return self.kernel is None


def solve_linear(coeff: Sequence[Sequence], rhs: Iterable) -> LinearSolution:
    """Solve ``coeff @ x = b`` for every column ``b`` of ``rhs``.

    If ``coeff`` has a nontrivial kernel the system has no unique solution and
    a kernel vector (first nonzero entry scaled to 1) is returned instead.
    """
    rows_in = [as_dense(r) for r in coeff]
    m = len(rows_in)
    n = len(rows_in[0]) if m else 0
    if any(len(r) != n for r in rows_in):
        raise DimensionMismatch("ragged coefficient matrix")
    columns = [as_dense(b) for b in rhs]
    for b in columns:
        if len(b) != m:
            raise DimensionMismatch(f"rhs column of length {len(b)} against {m} rows")
    kernel = nullspace(rows_in, n) if n else []
    if kernel:
        return LinearSolution(None, _normalize_witness(kernel[0]))
    augmented = [row + [b[i] for b in columns] for i, row in enumerate(rows_in)]
    red, pivots = rref(augmented)
    if any(p >= n for p in pivots):
        raise InconsistentSystem("right-hand side is not in the column space")
    sols = []
    for k in range(len(columns)):
        x = [ZERO] * n
        for row, pc in zip(red, pivots):
            x[pc] = row[n + k]
        sols.append(tuple(x))
    return LinearSolution(tuple(sols), None)


def particular_solution(coeff: Sequence[Sequence], b: Sequence, ncols: int | None = None):
    """One solution of ``coeff @ x = b`` (free variables set to 0), or ``None``."""
    rows_in = [as_dense(r) for r in coeff]
    if ncols is None:
        ncols = len(rows_in[0]) if rows_in else 0
    if not rows_in:
        return [ZERO] * ncols
    b = as_dense(b, len(rows_in))
    red, pivots = rref([row + [bi] for row, bi in zip(rows_in, b)])
    if any(p >= ncols for p in pivots):
        return None
    x = [ZERO] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def inverse(m: Sequence[Sequence]) -> list:
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("inverse of a non-square matrix")
    if n == 0:
        return []
    sol = solve_linear(m, identity_matrix(n))
    if sol.kernel is not None:
        raise SingularMatrix("matrix is singular", witness=sol.kernel)
    return transpose(sol.columns)


def matrices_equal(a, b) -> bool:
    return len(a) == len(b) and all(tuple(x) == tuple(y) for x, y in zip(a, b))


class LinearMap:
    """A linear map between super spaces with an optional parity degree.

    ``matrix[i][j]`` is the coefficient of codomain vector ``i`` in the image
    of domain vector ``j``.
    """

    __slots__ = ("domain", "codomain", "matrix", "degree")

    def __init__(self, domain: SuperSpace, codomain: SuperSpace, matrix, degree=None):
        rows = tuple(tuple(to_scalar(x) for x in row) for row in matrix)
        if len(rows) != codomain.dim or any(len(r) != domain.dim for r in rows):
            raise DimensionMismatch(
                f"matrix shape does not match {codomain.dim}x{domain.dim}"
            )
        if degree is not None:
            degree = Parity.parse(degree)
            for i, row in enumerate(rows):
                for j, x in enumerate(row):
                    if x and (domain.parities[j] + degree) % 2 != codomain.parities[i]:
                        raise ParityError(
                            f"entry ({codomain.labels[i]}, {domain.labels[j]}) breaks degree {degree}"
                        )
        self.domain = domain
        self.codomain = codomain
        self.matrix = rows
        self.degree = degree

    @classmethod
    def identity(cls, space: SuperSpace) -> "LinearMap":
        return cls(space, space, identity_matrix(space.dim), Parity.EVEN)

    @classmethod
    def zero(cls, domain: SuperSpace, codomain: SuperSpace | None = None, degree=Parity.EVEN):
        codomain = domain if codomain is None else codomain
        return cls(domain, codomain, zero_matrix(codomain.dim, domain.dim), degree)

    @classmethod
    def from_images(cls, domain, codomain, images: Mapping, degree=None) -> "LinearMap":
        """Build from ``{domain label: image}``; images are Vectors or coord maps."""
        m = zero_matrix(codomain.dim, domain.dim)
        for label, img in images.items():
            j = domain.index(label)
            vec = img if isinstance(img, Vector) else Vector(codomain, img)
            if vec.space != codomain:
                raise SpaceMismatch("image outside the codomain")
            for i, c in enumerate(vec.dense):
                m[i][j] = c
        return cls(domain, codomain, m, degree)

    def homogeneous_degree(self) -> Parity | None:
        """The degree implied by the entries; ``None`` if mixed.  Zero maps are even."""
        if self.degree is not None:
            return self.degree
        found = set()
        for i, row in enumerate(self.matrix):
            for j, x in enumerate(row):
                if x:
                    found.add((self.codomain.parities[i] - self.domain.parities[j]) % 2)
        if len(found) > 1:
            return None
        return Parity(found.pop()) if found else Parity.EVEN

    def with_degree(self, degree) -> "LinearMap":
        return LinearMap(self.domain, self.codomain, self.matrix, degree)

    def apply_dense(self, x: Sequence) -> list:
        return mat_vec(self.matrix, x)

    def __call__(self, v: Vector) -> Vector:
        if v.space != self.domain:
            raise SpaceMismatch("vector not in the domain")
        return Vector.from_dense(self.codomain, self.apply_dense(v.dense))

    def image(self, label) -> Vector:
        return self(self.domain.basis_vector(label))

    def _deg_sum(self, other):
        if self.degree is None or other.degree is None:
            return None
        return self.degree + other.degree

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.codomain != self.domain:
            raise SpaceMismatch("composition of incompatible maps")
        return LinearMap(other.domain, self.codomain, mat_mul(self.matrix, other.matrix),
                         self._deg_sum(other))

    def _same_shape(self, other):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise SpaceMismatch("maps between different spaces")
        if self.degree is None or other.degree is None:
            return None
        return self.degree if self.degree == other.degree else None

    def __add__(self, other: "LinearMap") -> "LinearMap":
        deg = self._same_shape(other)
        rows = [[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)]
        return LinearMap(self.domain, self.codomain, rows, deg)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        deg = self._same_shape(other)
        rows = [[a - b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)]
        return LinearMap(self.domain, self.codomain, rows, deg)

    def __neg__(self):
        return LinearMap(self.domain, self.codomain,
                         [[-a for a in r] for r in self.matrix], self.degree)

    def __mul__(self, scalar):
        c = to_scalar(scalar)
        return LinearMap(self.domain, self.codomain,
                         [[c * a for a in r] for r in self.matrix], self.degree)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def is_invertible(self) -> bool:
        return self.domain.dim == self.codomain.dim and rank(self.matrix) == self.domain.dim

    def inverse(self) -> "LinearMap":
        return LinearMap(self.codomain, self.domain, inverse(self.matrix), self.degree)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.domain, self.codomain, self.matrix))

    def __repr__(self):
        images = []
        for j, label in enumerate(self.domain.labels):
            col = [self.matrix[i][j] for i in range(self.codomain.dim)]
            if any(col):
                images.append(f"{label} -> {Vector.from_dense(self.codomain, col)!r}")
        body = ", ".join(images) if images else "0"
        return f"LinearMap(degree={self.degree}, {body})"


def require_homogeneous(v: Vector) -> Parity:
    """Parity of a homogeneous vector; zero counts as even."""
    if not v.is_homogeneous():
        raise NotHomogeneous(f"{v!r} is not homogeneous")
    return v.parity if v.parity is not None else Parity.EVEN
