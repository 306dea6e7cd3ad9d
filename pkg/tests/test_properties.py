"""Randomized suites: T* extensions, flatness oracles, nested double extensions."""

from fractions import Fraction

import pytest

import oracle as O
from superleibniz.bilinear import is_invariant, orthogonal
from superleibniz.cli.documents import algebra_from_document, document_from_algebra
from superleibniz.errors import SuperLeibnizError
from superleibniz.exactla import SuperSpace
from superleibniz.extensions import (
    CocycleTensor,
    DoubleExtensionData,
    deconstruct_double_extension,
    double_extension,
    iterate_to_lie,
    pi_t_star_extension,
    rebuild_from_reduction,
    reduce_to_t_star,
    t_star_extension,
    trivial_algebra,
    variant_of,
)
from superleibniz.fixtures import FIXTURES
from superleibniz.levicivita import bianchi_check, flatness_conditions, is_flat, levi_civita
from superleibniz.structure import is_two_step_nilpotent, leibniz_ideal, verify_isometric_isomorphism
from superleibniz.superalg import check_identity

FLAT = ["example2", "quadratic-even4", "quadratic-even6", "quadratic-odd4", "quadratic-odd6"]


# ---------------------------------------------------------------------------
# T* and Π(T*) of trivial bases

def _base_shape(rng, shifted):
    # the extension A ⊕ A* (or A ⊕ Π(A*)) stays within 3|3
    while True:
        if shifted:
            ke, ko = rng.randint(0, 3), rng.randint(0, 3)
            # an odd Ω needs an odd base vector
            ok = ko >= 1 and ke + ko <= 3
        else:
            ke, ko = rng.randint(0, 1), rng.randint(0, 1)
            ok = ke >= 1  # an odd line alone carries no even cyclic tensor
        if ok:
            return ke, ko


def _injective_cocycle(rng, space, shifted, stats):
    labels, par = space.labels, space.parities
    while True:
        T = O.cyclic_tensor(rng, labels, par, int(shifted), density=0.5)
        omega = CocycleTensor.from_values(space, T, int(shifted))
        inj = O.iota_injective(labels, T)
        assert (omega.injectivity_witness() is None) == inj
        assert omega.is_cyclic() is None
        stats["draws"] += 1
        if inj:
            return omega


def _tstar_instances(seed, count):
    rng = O.rng_for(seed)
    stats = {"draws": 0}
    out = []
    for _ in range(count):
        shifted = rng.random() < 0.5
        ke, ko = _base_shape(rng, shifted)
        h = SuperSpace(tuple(f"h{i + 1}" for i in range(ke)), tuple(f"k{i + 1}" for i in range(ko)))
        out.append((shifted, h, _injective_cocycle(rng, h, shifted, stats)))
    return out, stats


TSTAR, TSTAR_STATS = _tstar_instances(4, 200)


def test_tstar_generator_covers_both_kinds():
    kinds = {(s, h.sdim) for s, h, _ in TSTAR}
    assert len(TSTAR) >= 200
    assert {s for s, _ in kinds} == {False, True}
    assert len(kinds) >= 6
    # some draws were rejected by the injectivity condition
    assert TSTAR_STATS["draws"] > len(TSTAR)


@pytest.mark.parametrize("k", range(len(TSTAR)))
def test_tstar_extension_properties(k):
    shifted, h, omega = TSTAR[k]
    build = pi_t_star_extension if shifted else t_star_extension
    ext = build(trivial_algebra(h), omega)
    alg, form = ext
    even, odd = alg.space.sdim
    assert even <= 3 and odd <= 3
    assert check_identity(alg, "symmetric-leibniz").holds
    assert check_identity(alg, "two-step-nilpotent").holds and is_two_step_nilpotent(alg)
    assert is_invariant(alg, form).holds
    assert is_flat(alg, form).holds
    assert not ext.discrepancies
    # the same verdicts from the operator oracle
    A = O.OAlg.from_document(document_from_algebra(alg, form))
    assert O.is_left_leibniz(A) and O.is_right_leibniz(A)
    assert O.is_two_step(A) and O.is_invariant(A)
    if k % 5 == 0:
        # the sympy Levi-Civita solve is slow on 3|3, so it runs on a fifth of the cases
        S, C = O.levi_civita(A)
        assert O.curvature_zero(A, S, C)

    red = reduce_to_t_star(alg, form)
    assert red.omega.target_parity == form.parity
    assert red.h.sdim == h.sdim
    again = rebuild_from_reduction(red)
    assert verify_isometric_isomorphism((alg, form), tuple(again), red.iso).holds


# ---------------------------------------------------------------------------
# flatness oracles

def _flatness_instances(seed, count):
    rng = O.rng_for(seed)
    return [O.random_flatness_instance(rng) for _ in range(count)]


FLATNESS = _flatness_instances(5, 200)


def _verdicts(doc):
    alg, form = algebra_from_document(doc)
    pair = levi_civita(alg, form)
    flat = is_flat(alg, form, pair).holds
    pre = check_identity(pair.as_disuperalgebra(), "pre-left-leibniz").holds
    return alg, form, pair, flat, pre


def test_flatness_generator_mixes_flat_and_non_flat():
    flags = [_verdicts(doc)[3] for doc in FLATNESS]
    assert sum(flags) >= 50 and len(flags) - sum(flags) >= 50


@pytest.mark.parametrize("k", range(len(FLATNESS)))
def test_flatness_oracle_equivalence(k):
    doc = FLATNESS[k]
    alg, form, pair, flat, pre = _verdicts(doc)
    assert flat == pre
    assert flatness_conditions(pair).holds == flat
    assert bianchi_check(pair).holds
    A = O.OAlg.from_document(doc)
    S, C = O.levi_civita(A)
    assert O.curvature_zero(A, S, C) == flat
    assert O.pre_left_leibniz(A.par, S, C) == flat
    if flat and not check_identity(alg, "lie").holds:
        _ideal_invariants(alg, form, pair)


def _ideal_invariants(alg, form, pair):
    n = alg.space.dim
    I = leibniz_ideal(alg)
    assert I.dim > 0
    for w in I.rows:
        for j in range(n):
            e = [1 if k == j else 0 for k in range(n)]
            for table in (alg, pair.star, pair.circ):
                assert not any(table.mul(w, e)) and not any(table.mul(e, w))
    assert I.intersection(orthogonal(form, I)).dim > 0


# ---------------------------------------------------------------------------
# double extensions

def _variants_for(form):
    return [variant_of(form.parity, 0), variant_of(form.parity, 1)]


@pytest.mark.parametrize("name", FLAT)
def test_zero_data_extension_and_inverse(name):
    core = algebra_from_document(FIXTURES[name]())
    for variant in _variants_for(core[1]):
        ext = double_extension(core, DoubleExtensionData.zero(variant))
        alg, form = ext
        assert is_flat(alg, form).holds
        r = deconstruct_double_extension(alg, form, e=alg.space.basis_vector("e"))
        assert r.variant == variant
        assert r.core[0] == core[0] and r.core[1] == core[1]
        rebuilt = double_extension(r.core, r.data)
        assert rebuilt.algebra.tensor == alg.tensor
        assert verify_isometric_isomorphism(tuple(rebuilt), (alg, form), r.change_of_basis).holds


_SCALARS = [1, -1, 2, Fraction(1, 3), Fraction(-1, 2)]


def _random_data(rng, core, form):
    variant = variant_of(form.parity, rng.randint(0, 1))
    n = core.space.dim
    labels = core.space.labels
    kw = {}
    for key in rng.sample(["a0", "b0", "c0", "alpha", "delta", "D", "G"], rng.randint(0, 2)):
        if key in ("a0", "b0", "c0"):
            if n:
                kw[key] = {rng.choice(labels): rng.choice(_SCALARS)}
        elif key == "alpha":
            kw[key] = rng.choice(_SCALARS)
        elif n:
            m = [[0] * n for _ in range(n)]
            m[rng.randrange(n)][rng.randrange(n)] = rng.choice(_SCALARS)
            kw[key] = m
    if variant in ("even-form/even-line", "odd-form/odd-line") and rng.random() < 0.7:
        kw["lam"] = rng.choice(_SCALARS)
    return DoubleExtensionData(variant=variant, **kw)


def _nested(seed, count):
    """One- and two-step double extensions of abelian cores with random data."""
    rng = O.rng_for(seed)
    out = []
    while len(out) < count:
        parity = rng.randint(0, 1)
        even, odd = O.formable_space(rng, parity, 1, 0)
        doc = {"name": "abelian", "even_basis": even, "odd_basis": odd, "products": [], "metadata": {}}
        cur = algebra_from_document(O.with_form(doc, rng, parity))
        depth = rng.randint(1, 2)
        try:
            for s in range(depth):
                cur = tuple(double_extension(cur, _random_data(rng, *cur),
                                             e_label=f"e{s}", d_label=f"d{s}"))
        except SuperLeibnizError:
            continue
        out.append((depth, cur))
    return out


NESTED = _nested(6, 120)


def test_nested_generator_has_non_lie_two_step_cases():
    non_lie = [d for d, (alg, _) in NESTED if not check_identity(alg, "lie").holds]
    assert len(non_lie) >= 20 and 2 in non_lie


@pytest.mark.parametrize("k", range(len(NESTED)))
def test_iterate_to_lie_on_nested(k):
    depth, (alg, form) = NESTED[k]
    assert is_flat(alg, form).holds
    steps = iterate_to_lie(alg, form)
    assert len(steps) <= depth
    core = steps[-1].core if steps else (alg, form)
    assert check_identity(core[0], "lie").holds
    for st in steps:
        assert is_flat(*st.core).holds
    if not check_identity(alg, "lie").holds:
        assert steps
        _ideal_invariants(alg, form, levi_civita(alg, form))
