import pytest
from hypothesis import given, settings

from conftest import ideals, monomials
from oracles import ideal, koszul_betti
from starres.complexes import betti_of_ranks, verify_resolution
from starres.monomial import DimensionError, Monomial, MonomialIdeal, ideal_sum
from starres.polarization import (
    NotPolarizedError,
    PolarizationContext,
    depolarize_monomial,
    polarize_ideal,
    polarize_monomial,
    verify_shift_polarization,
)
from starres.star import resolution, star


def test_layout():
    ctx = PolarizationContext(2, 3)
    assert ctx.target_n == 6
    assert ctx.index(0, 1) == 0 and ctx.index(1, 1) == 3 and ctx.index(1, 3) == 5
    assert ctx.variable_names() == ["y1_1", "y1_2", "y1_3", "y2_1", "y2_2", "y2_3"]
    with pytest.raises(IndexError):
        ctx.index(0, 0)


def test_polarize_monomial_examples():
    ctx = PolarizationContext(2, 2)
    # x1^2 x2 -> y11 y12 y21
    assert polarize_monomial(Monomial((2, 1)), ctx) == Monomial((1, 1, 1, 0))
    assert polarize_monomial(Monomial((0, 0)), ctx) == Monomial((0, 0, 0, 0))
    assert depolarize_monomial(Monomial((1, 1, 1, 0)), ctx) == Monomial((2, 1))
    with pytest.raises(NotPolarizedError):
        depolarize_monomial(Monomial((0, 1, 0, 0)), ctx)  # y12 alone
    with pytest.raises(NotPolarizedError):
        depolarize_monomial(Monomial((2, 0, 0, 0)), ctx)
    with pytest.raises(ValueError):
        polarize_monomial(Monomial((3, 0)), ctx)
    with pytest.raises(DimensionError):
        polarize_monomial(Monomial((1,)), ctx)


def test_polarize_ideal_examples():
    P, ctx = polarize_ideal(ideal(2, (2, 0), (1, 1)))
    assert ctx.r == 2
    assert P == ideal(4, (1, 1, 0, 0), (1, 0, 1, 0))
    P, ctx = polarize_ideal(ideal(1, (3,)))
    assert P == ideal(3, (1, 1, 1))
    P, ctx = polarize_ideal(ideal(2, (1, 0), (0, 1)), r=2)
    assert P == ideal(4, (1, 0, 0, 0), (0, 0, 1, 0))
    with pytest.raises(ValueError):
        polarize_ideal(ideal(1, (3,)), r=2)
    with pytest.raises(ValueError):
        polarize_ideal(MonomialIdeal(2))


def test_shift_polarization_against_oracle():
    I = ideal(2, (2, 0), (1, 1), (0, 2))
    assert verify_shift_polarization(I)
    P, ctx = polarize_ideal(I)
    got = {}
    for (i, a), v in koszul_betti(P).items():
        key = (i, depolarize_monomial(Monomial(a), ctx).exps)
        got[key] = got.get(key, 0) + v
    assert got == koszul_betti(I)


@given(ideals(n_max=3), monomials(3))
def test_round_trip(I, u):
    P, ctx = polarize_ideal(I)
    for g, h in zip(sorted(I), sorted(depolarize_monomial(p, ctx) for p in P)):
        assert g == h
    if u.n == I.n and max(u.exps) <= ctx.r:
        assert depolarize_monomial(polarize_monomial(u, ctx), ctx) == u


@settings(max_examples=25)
@given(ideals(n_max=3, gens_max=4))
def test_polarization_keeps_betti(I):
    assert verify_shift_polarization(I)
    P, _ = polarize_ideal(I)
    assert P.is_squarefree()
    assert betti_of_ranks(resolution(P)).totals() == betti_of_ranks(resolution(I)).totals()


def test_star_of_polarizations():
    I, J = ideal(2, (2, 0), (1, 1)), ideal(2, (0, 3), (1, 2))
    PI, _ = polarize_ideal(I, 3)
    PJ, _ = polarize_ideal(J, 3)
    assert verify_resolution(star(resolution(PI), resolution(PJ)), ideal_sum(PI, PJ))
