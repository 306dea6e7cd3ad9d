from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from superleibniz.errors import (
    DimensionMismatch,
    InconsistentSystem,
    ParityError,
    SingularMatrix,
)
from superleibniz.exactla import (
    LinearMap,
    Parity,
    SuperSpace,
    Vector,
    format_scalar,
    inverse,
    mat_mul,
    nullspace,
    parity_shift,
    particular_solution,
    rank,
    rref,
    solve_linear,
    to_scalar,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def matrices(rows, cols):
    return st.lists(st.lists(fractions, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def S(m):
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in m])


class TestScalars:
    def test_parse(self):
        assert to_scalar("3/6") == Fraction(1, 2)
        assert to_scalar(" -7 ") == -7
        assert to_scalar(Fraction(2, 3)) == Fraction(2, 3)

    @pytest.mark.parametrize("bad", [0.5, "0.5", "1e3", "1/0", True, None, "x"])
    def test_rejects_inexact(self, bad):
        with pytest.raises((TypeError, ValueError)):
            to_scalar(bad)

    @given(fractions)
    def test_format_round_trip(self, x):
        assert to_scalar(format_scalar(x)) == x

    def test_parity_parse(self):
        assert Parity.parse("odd") is Parity.ODD
        assert Parity.parse(0) is Parity.EVEN
        assert Parity.ODD + Parity.ODD is Parity.EVEN
        with pytest.raises(ValueError):
            Parity.parse(2)


class TestSpaces:
    def test_order_and_parity(self):
        V = SuperSpace(("x", "y"), ("z",))
        assert V.labels == ("x", "y", "z")
        assert V.parities == (0, 0, 1)
        assert V.parity("z") is Parity.ODD
        assert V.sdim == (2, 1)

    def test_duplicate_labels(self):
        with pytest.raises(ValueError):
            SuperSpace(("a",), ("a",))

    def test_parity_shift_involution(self):
        V = SuperSpace(("x",), ("y", "z"))
        W = parity_shift(V)
        assert W.sdim == (2, 1)
        assert parity_shift(W) == V

    def test_vector_arithmetic(self):
        V = SuperSpace(("x",), ("y",))
        v = Vector(V, {"x": "1/2", "y": 3})
        w = V.basis_vector("y")
        assert (v - 3 * w).coords == {"x": Fraction(1, 2)}
        assert (v + w).parity is None
        assert w.parity is Parity.ODD
        with pytest.raises(DimensionMismatch):
            Vector.from_dense(V, [1])


class TestEliminationAgainstSympy:
    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4), st.integers(1, 4), st.data())
    def test_rref_and_rank(self, r, c, data):
        m = data.draw(matrices(r, c))
        rows, piv = rref(m)
        ref, ref_piv = S(m).rref()
        assert tuple(piv) == tuple(ref_piv)
        assert S(rows) == ref[: len(rows), :] if rows else ref.is_zero_matrix
        assert rank(m) == S(m).rank()

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4), st.integers(1, 4), st.data())
    def test_nullspace(self, r, c, data):
        m = data.draw(matrices(r, c))
        ker = nullspace(m, c)
        assert len(ker) == c - S(m).rank()
        for x in ker:
            assert all(v == 0 for v in mat_mul(m, [[t] for t in x]) for v in v)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4), st.data())
    def test_inverse(self, n, data):
        m = data.draw(matrices(n, n))
        if S(m).det() == 0:
            with pytest.raises(SingularMatrix) as exc:
                inverse(m)
            w = exc.value.witness
            assert all(v == 0 for v in (sum(a * b for a, b in zip(row, w)) for row in m))
        else:
            assert S(inverse(m)) == S(m).inv()

    def test_solve_linear_unique_and_inconsistent(self):
        m = [[1, 2], [3, 4]]
        sol = solve_linear(m, [[5, 6]])
        assert sol.unique and sol.columns[0] == (Fraction(-4), Fraction(9, 2))
        sing = solve_linear([[1, 2], [2, 4]], [[1, 2]])
        assert sing.kernel == (Fraction(1), Fraction(-1, 2))
        with pytest.raises(InconsistentSystem):
            solve_linear([[1, 0], [0, 1], [1, 1]], [[1, 1, 0]])

    def test_particular_solution(self):
        assert particular_solution([[1, 1]], [2], 2) == [2, 0]
        assert particular_solution([[1, 1], [1, 1]], [1, 2], 2) is None


class TestLinearMaps:
    def test_degree_inferred_and_checked(self):
        V = SuperSpace(("x",), ("y",))
        swap = LinearMap(V, V, [[0, 1], [1, 0]])
        assert swap.homogeneous_degree() is Parity.ODD
        with pytest.raises(ParityError):
            LinearMap(V, V, [[1, 1], [0, 1]], Parity.EVEN)

    def test_composition_and_inverse(self):
        V = SuperSpace(("x", "z"), ())
        f = LinearMap(V, V, [[1, 2], [0, 1]])
        g = f.inverse()
        assert (f @ g) == LinearMap.identity(V)
        assert f(V.basis_vector("z")).coords == {"x": 2, "z": 1}

    def test_from_images(self):
        V = SuperSpace(("x",), ("y",))
        f = LinearMap.from_images(V, V, {"x": V.basis_vector("x") * 2, "y": V.zero()})
        assert f.image("x").coords == {"x": 2}
