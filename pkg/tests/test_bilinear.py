from fractions import Fraction

import pytest
import sympy as sp

import oracle as O
from superleibniz.bilinear import (
    SubSpace,
    adjoint,
    build_form,
    is_invariant,
    is_totally_isotropic,
    orthogonal,
    span,
)
from superleibniz.cli.documents import algebra_from_document, form_from_document
from superleibniz.errors import DegenerateForm, NotHomogeneous, ParityError, SupersymmetryConflict
from superleibniz.exactla import LinearMap, Parity, SuperSpace, Vector
from superleibniz.fixtures import FIXTURES

V = SuperSpace(("x", "y"), ("p", "q"))


def test_mirror_entries_are_filled():
    B = build_form(V, "even", [("x", "y", 1), ("p", "q", 2)])
    assert B.entry("y", "x") == 1
    assert B.entry("q", "p") == -2


def test_parity_and_supersymmetry_violations():
    with pytest.raises(ParityError):
        build_form(V, "odd", [("x", "y", 1)])
    with pytest.raises(ParityError):
        build_form(V, "even", [("x", "p", 1)])
    with pytest.raises(SupersymmetryConflict):
        build_form(V, "even", [("p", "q", 1), ("q", "p", 1)])


def test_degenerate_form_reports_witness():
    with pytest.raises(DegenerateForm) as exc:
        build_form(V, "even", [("x", "x", 1), ("p", "q", 1)])
    w = exc.value.witness
    assert w.coords == {"y": 1}


def test_odd_form_pairs_opposite_parities():
    W = SuperSpace(("x",), ("p",))
    B = build_form(W, Parity.ODD, [("x", "p", 1)])
    assert B.entry("p", "x") == 1
    assert B.pair(W.basis_vector("x"), W.basis_vector("p")) == 1


@pytest.mark.parametrize("seed", range(12))
def test_adjoint_identity(seed):
    rng = O.rng_for(seed)
    fp = rng.randint(0, 1)
    even, odd = O.formable_space(rng, fp, 2, 2)
    space = SuperSpace(tuple(even), tuple(odd))
    B = form_from_document(space, O.form_document(fp, O.random_form(rng, even, odd, fp)))
    deg = rng.randint(0, 1)
    n = space.dim
    par = space.parities
    m = [[Fraction(rng.randint(-2, 2)) if (par[i] + par[j]) % 2 == deg else Fraction(0)
          for j in range(n)] for i in range(n)]
    f = LinearMap(space, space, m, deg)
    fs = adjoint(B, f)
    for i, u in enumerate(space.basis()):
        for v in space.basis():
            s = -1 if deg * par[i] else 1
            assert B.pair(f(u), v) == s * B.pair(u, fs(v))


def test_adjoint_rejects_inhomogeneous():
    B = build_form(V, "even", [("x", "y", 1), ("p", "q", 1)])
    with pytest.raises(NotHomogeneous):
        adjoint(B, LinearMap(V, V, [[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))


def test_orthogonal_and_isotropy():
    B = build_form(V, "even", [("x", "y", 1), ("p", "q", 1)])
    L = SubSpace.of_labels(V, ["x", "p"])
    assert is_totally_isotropic(B, L)
    assert orthogonal(B, L) == L
    assert orthogonal(B, SubSpace.full(V)).dim == 0
    S = span(V, [Vector(V, {"x": 1, "y": 1})])
    assert orthogonal(B, S).dim == 3
    assert not is_totally_isotropic(B, S)


def test_subspace_intersection_and_components():
    A = SubSpace.of_labels(V, ["x", "y", "p"])
    C = span(V, [Vector(V, {"y": 1, "q": 1}), Vector(V, {"p": 1})])
    I = A.intersection(C)
    assert I.dim == 1 and I.contains(Vector(V, {"p": 1}))
    assert A.component(Parity.ODD).dim == 1
    assert (A + C).dim == 4


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_invariance_matches_oracle(name):
    doc = FIXTURES[name]()
    alg, form = algebra_from_document(doc)
    assert is_invariant(alg, form).holds == O.is_invariant(O.OAlg.from_document(doc))


def test_example1_not_invariant_witness():
    alg, form = algebra_from_document(FIXTURES["example1"]())
    assert not is_invariant(alg, form).holds
    sp_ = alg.space

    def prod(a, b):
        return Vector.from_dense(sp_, alg.tensor[sp_.index(a)][sp_.index(b)])

    def sides(u, v, w):
        return (form.pair(prod(u, v), sp_.basis_vector(w)),
                form.pair(sp_.basis_vector(u), prod(v, w)))

    # first witness in basis order, checked by hand: <e2+e3, e4> = 1, <e1, e1+e3> = 0
    assert is_invariant(alg, form).counterexample.labels == ("e1", "e1", "e4")
    assert sides("e1", "e1", "e4") == (1, 0)
    # (f2, e4, f1) does not separate: f1 is isotropic and e4•f1 = 0
    assert sides("f2", "e4", "f1") == (0, 0)


def test_gram_inverse_exact():
    B = build_form(V, "even", [("x", "x", 3), ("y", "y", Fraction(1, 7)), ("p", "q", 5)])
    G = sp.Matrix([[sp.Rational(c.numerator, c.denominator) for c in r] for r in B.matrix])
    Ginv = sp.Matrix([[sp.Rational(c.numerator, c.denominator) for c in r] for r in B.inverse_matrix])
    assert G * Ginv == sp.eye(4)
