from fractions import Fraction

import pytest

import oracle as O
from superleibniz.bilinear import SubSpace, build_form, orthogonal
from superleibniz.cli.documents import algebra_from_document, products_from_list
from superleibniz.errors import MuDataError, NotHomogeneous, NotIsomorphism, NotLeibniz, TrilinearError
from superleibniz.exactla import LinearMap, SuperSpace
from superleibniz.fixtures import FIXTURES
from superleibniz.levicivita import is_flat, levi_civita
from superleibniz.structure import (
    MuData,
    annihilator,
    center,
    is_two_step_nilpotent,
    leibniz_from_lie_mu,
    leibniz_ideal,
    product_space,
    quadratic_flat_report,
    trilinear_data,
    verify_isometric_isomorphism,
)
from superleibniz.superalg import SuperAlgebra, check_identity, polarization
from test_levicivita import SL2

QUADRATIC = ["quadratic-even4", "quadratic-even6", "quadratic-odd4", "quadratic-odd6"]


def load(name):
    return algebra_from_document(FIXTURES[name]())


def mu_data(name, **params):
    doc = FIXTURES[name](**params)
    space, _ = algebra_from_document(doc)
    space = space.space
    meta = doc["metadata"]
    return MuData(products_from_list(space, meta["lie_products"]),
                  products_from_list(space, meta["mu_products"]))


def labels_span(space, labels):
    return SubSpace.of_labels(space, labels)


def test_leibniz_ideal_examples():
    alg, _ = load("example2")
    assert leibniz_ideal(alg) == labels_span(alg.space, ["e1", "f2"])
    V = SuperSpace(("e", "d"), ())
    line = SuperAlgebra.from_products(V, {("d", "d"): {"e": 2}})
    assert leibniz_ideal(line) == labels_span(V, ["e"])
    gl, _ = algebra_from_document(O.gl_super_document(1, 1))
    assert leibniz_ideal(gl).dim == 0


def test_center_and_annihilator_first_quadratic_example():
    data = mu_data("quadratic-even4")
    assert center(data.lie) == labels_span(data.lie.space, ["e1", "e3"])
    alg, _ = load("quadratic-even4")
    assert annihilator(alg) == labels_span(alg.space, ["e1", "e3"])


def test_abelian_center_is_everything():
    V = SuperSpace(("x",), ("p", "q"))
    z = SuperAlgebra.zero(V)
    assert center(z) == SubSpace.full(V) == annihilator(z)
    assert is_two_step_nilpotent(z)


def test_two_step_nilpotency():
    assert is_two_step_nilpotent(load("quadratic-even6")[0])
    assert not is_two_step_nilpotent(algebra_from_document(SL2)[0])


@pytest.mark.parametrize("name", QUADRATIC)
def test_quadratic_report_on_fixtures(name):
    alg, form = load(name)
    rep = quadratic_flat_report(alg, form)
    assert rep.consistent
    v = rep.verdicts
    assert v["flat"] and v["symmetric-leibniz"] and v["two-step-nilpotent"]
    assert v["(A.A)^perp = Ann"]
    assert orthogonal(form, product_space(alg)) == annihilator(alg)


def test_quadratic_report_sl2_and_abelian():
    rep = quadratic_flat_report(*algebra_from_document(SL2))
    assert not rep.verdicts["flat"] and not rep.verdicts["two-step-nilpotent"]
    assert rep.consistent
    V = SuperSpace(("x", "y"), ())
    rep = quadratic_flat_report(SuperAlgebra.zero(V), build_form(V, "even", [("x", "y", 1)]))
    assert rep.verdicts["flat"]


def test_quadratic_report_needs_invariance():
    with pytest.raises(NotLeibniz):
        quadratic_flat_report(*load("example1"))


@pytest.mark.parametrize("name", QUADRATIC)
def test_lie_mu_round_trip(name):
    data = mu_data(name)
    alg = leibniz_from_lie_mu(data)
    assert alg == load(name)[0]
    assert check_identity(alg, "symmetric-leibniz").holds
    assert is_two_step_nilpotent(alg)
    minus, plus = polarization(alg)
    assert minus == data.lie and plus == data.mu


def test_lie_mu_first_example_table():
    alg = leibniz_from_lie_mu(mu_data("quadratic-even4", alpha=3))
    assert alg.structure_constants() == {
        ("e2", "e2"): {"e1": 3}, ("e2", "e4"): {"e3": 1},
        ("e4", "e2"): {"e3": -1}, ("e4", "e4"): {"e1": 1},
    }


def test_lie_mu_odd6_entry():
    alg = leibniz_from_lie_mu(mu_data("quadratic-odd6", alpha=1, beta=Fraction(2, 3), lam=1))
    assert alg.structure_constants()[("e1", "e2")] == {"e3": Fraction(5, 3)}


def test_mu_zero_gives_lie():
    data = mu_data("quadratic-even4")
    assert leibniz_from_lie_mu(MuData(data.lie, SuperAlgebra.zero(data.lie.space))) == data.lie


def test_mu_data_violations():
    data = mu_data("quadratic-even4")
    space = data.lie.space
    not_central = SuperAlgebra.from_products(space, {("e1", "e1"): {"e2": 1}})
    with pytest.raises(MuDataError) as exc:
        leibniz_from_lie_mu(MuData(data.lie, not_central))
    assert exc.value.equation == "mu central"
    asym = SuperAlgebra.from_products(space, {("e2", "e4"): {"e3": 1}})
    with pytest.raises(MuDataError) as exc:
        leibniz_from_lie_mu(MuData(data.lie, asym))
    assert exc.value.equation == "mu supersymmetric"
    with pytest.raises(MuDataError):
        leibniz_from_lie_mu(MuData(algebra_from_document(SL2)[0], SuperAlgebra.zero(
            algebra_from_document(SL2)[0].space)))


def test_trilinear_first_example():
    alg, form = load("quadratic-even4")
    J = labels_span(alg.space, ["e1", "e3"])
    T = trilinear_data(alg, form, J)
    assert T.nonzero() == {("e2", "e2", "e2"): 1}
    with pytest.raises(TrilinearError) as exc:
        trilinear_data(alg, form, labels_span(alg.space, ["e3"]))
    assert exc.value.equation == "T(J^perp,.,.) = 0"


def test_trilinear_zero_and_bad_J():
    data = mu_data("quadratic-even4")
    _, form = load("quadratic-even4")
    T = trilinear_data(data.lie, form, SubSpace.zero(form.space))
    assert T.nonzero() == {}
    with pytest.raises(TrilinearError) as exc:
        trilinear_data(data.lie, form, labels_span(form.space, ["e1", "e2"]))
    assert exc.value.equation == "J isotropic"
    with pytest.raises(TrilinearError) as exc:
        trilinear_data(data.lie, form, labels_span(form.space, ["e4"]))
    assert exc.value.equation == "J central"


def test_trilinear_odd6_values():
    alg, form = load("quadratic-odd6")
    T = trilinear_data(alg, form, labels_span(alg.space, ["e3", "f1", "f2"]))
    assert T.value("e1", "e1", "f3") == 1 and T.value("e1", "e2", "f3") == 1


def test_isometric_isomorphism_cases():
    alg, form = load("example2")
    ident = LinearMap.identity(alg.space)
    assert verify_isometric_isomorphism((alg, form), (alg, form), ident).holds
    rep = verify_isometric_isomorphism((alg, form), (alg, form), LinearMap(alg.space, alg.space, [[2 * x for x in r] for r in ident.matrix]))
    assert not rep.holds
    assert {v.equation for v in rep.violations} >= {"isometry"}
    n = alg.space.dim
    odd = LinearMap(alg.space, alg.space, [[1 if (i + 2) % n == j else 0 for j in range(n)] for i in range(n)])
    with pytest.raises(NotHomogeneous):
        verify_isometric_isomorphism((alg, form), (alg, form), odd)
    with pytest.raises(NotIsomorphism):
        verify_isometric_isomorphism((alg, form), (alg, form), LinearMap.zero(alg.space, alg.space))


def _relabel(doc, swap):
    out = dict(doc)
    out["products"] = [{"left": swap[p["left"]], "right": swap[p["right"]],
                        "value": {swap[k]: v for k, v in p["value"].items()}} for p in doc["products"]]
    return out


def test_swapping_hyperbolic_pairs():
    swap = {"h1": "h2", "h2": "h1", "h1*": "h2*", "h2*": "h1*"}
    for seed in range(5):
        doc, _ = O.tstar_document(O.rng_for(seed), 2, 0, False)
        a = algebra_from_document(doc)
        b = algebra_from_document(_relabel(doc, swap))
        space = a[0].space
        phi = LinearMap.from_images(space, space, {x: space.basis_vector(y) for x, y in swap.items()})
        assert verify_isometric_isomorphism(a, b, phi).holds
        if a[0] != b[0]:
            ident = LinearMap.identity(space)
            assert {v.equation for v in verify_isometric_isomorphism(a, b, ident).violations} == {"homomorphism"}


@pytest.mark.parametrize("name", ["example2"] + QUADRATIC)
def test_leibniz_ideal_acts_trivially_when_flat(name):
    alg, form = load(name)
    assert is_flat(alg, form).holds
    lc = levi_civita(alg, form)
    I = leibniz_ideal(alg)
    for w in I.rows:
        for table in (lc.star, lc.circ):
            for j in range(alg.space.dim):
                e = [1 if k == j else 0 for k in range(alg.space.dim)]
                assert not any(table.mul(w, e)) and not any(table.mul(e, w))
    if I.dim:
        assert I.intersection(orthogonal(form, I)).dim > 0
