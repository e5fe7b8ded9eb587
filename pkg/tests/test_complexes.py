import itertools
from math import comb

import pytest
import sympy
from hypothesis import given, settings

from conftest import ideal_pairs, ideals
from oracles import ideal, koszul_betti, koszul_totals
from starres.complexes import (
    FreeComplex,
    NotAComplexError,
    Strand,
    betti_numbers,
    betti_of_ranks,
    exactness_grid,
    homology_dims,
    invariants_of_ideal,
    minimalize,
    strand,
    tensor_complex,
    trivial_resolution,
    validate_complex,
    verify_resolution,
)
from starres.field import PrimeField, using_field
from starres.monomial import Monomial, MonomialIdeal
from starres.star import compare_complexes, principal_resolution, taylor_direct

X, Y = Monomial((1, 0)), Monomial((0, 1))
XY = Monomial((1, 1))
ONE = Monomial((0, 0))


def koszul_xy(flip=False):
    return FreeComplex(2, [[("1", ONE)], [("x", X), ("y", Y)], [("xy", XY)]],
                       [{("1", "x"): 1, ("1", "y"): 1},
                        {("y", "xy"): 1, ("x", "xy"): 1 if flip else -1}])


def test_validate_examples():
    assert validate_complex(koszul_xy())
    one_step = FreeComplex(1, [[("1", (0,))], [("x", (1,))]], [{("1", "x"): 1}])
    assert validate_complex(one_step)
    bad = validate_complex(koszul_xy(flip=True))
    assert not bad
    assert bad.data["kind"] == "d_squared"
    assert (bad.data["source"], bad.data["target"]) == ("xy", "1")
    assert bad.data["value"] == "2"


def test_validate_reports_non_dividing_entry():
    C = FreeComplex(2, [[("a", X)], [("b", Y)]], [{("a", "b"): 1}])
    r = validate_complex(C)
    assert not r and r.data["kind"] == "divisibility"


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        FreeComplex(1, [[("a", (0,)), ("a", (1,))]])


def test_strand_koszul():
    V = strand(koszul_xy(), XY)
    assert V.dims == [1, 2, 1]
    assert homology_dims(V) == [0, 0, 0]


def test_strand_at_zero_degree():
    T = taylor_direct(ideal(2, (2, 0), (1, 1), (0, 3)))
    V = strand(T, ONE)
    assert V.dims == [1, 0, 0, 0]
    assert homology_dims(V) == [1, 0, 0, 0]


def test_strand_taylor_x2y():
    T = taylor_direct(ideal(2, (2, 0), (1, 1), (0, 3)))
    V = strand(T, Monomial((2, 1)))
    labels = [[T.terms[i][k].label for k in ks] for i, ks in enumerate(V.sub_basis)]
    assert labels == [[()], [(0,), (1,)], [(0, 1)], []]
    # oracle: Taylor differentials written out by hand, ranks by sympy
    d1 = sympy.Matrix([[1, 1]])
    d2 = sympy.Matrix([[-1], [1]])
    r1, r2 = d1.rank(), d2.rank()
    assert homology_dims(V) == [1 - r1, 2 - r1 - r2, 1 - r2, 0] == [0, 0, 0, 0]


def test_homology_dims_examples():
    assert homology_dims(Strand([0, 0], [[], []], PrimeField(3))) == [0, 0]
    from starres.field import QQ
    assert homology_dims(Strand([1, 1], [[], [{0: 1}]], QQ)) == [0, 0]
    assert homology_dims(Strand([1, 2], [[], [{0: 1}, {0: 1}]], QQ)) == [0, 1]
    with pytest.raises(NotAComplexError):
        homology_dims(Strand([1, 1, 1], [[], [{0: 1}], [{0: 1}]], QQ))


def test_verify_resolution_examples():
    assert verify_resolution(koszul_xy(), ideal(2, (1, 0), (0, 1)))
    I = ideal(2, (2, 0), (1, 1), (0, 3))
    assert verify_resolution(taylor_direct(I), I)
    r = verify_resolution(koszul_xy(), ideal(2, (1, 0)))
    assert not r and r.data["kind"] == "h0"


def test_verify_resolution_detects_missing_syzygy():
    C = FreeComplex(2, [[("1", ONE)], [("x", X), ("y", Y)]], [{("1", "x"): 1, ("1", "y"): 1}])
    r = verify_resolution(C, ideal(2, (1, 0), (0, 1)))
    assert not r
    assert r.data == {"kind": "homology", "multidegree": [1, 1], "position": 1}


def test_verify_resolution_rejects_bad_complex():
    r = verify_resolution(koszul_xy(flip=True), ideal(2, (1, 0), (0, 1)))
    assert not r and r.data["kind"] == "complex"


def test_tensor_examples():
    K = tensor_complex(principal_resolution(X), principal_resolution(Y))
    assert K.ranks() == (1, 2, 1)
    assert K.terms[2][0].degree == XY
    assert validate_complex(K)
    assert verify_resolution(K, ideal(2, (1, 0), (0, 1)))
    F = taylor_direct(ideal(2, (2, 0), (1, 1)))
    unit = trivial_resolution(2)
    FU = tensor_complex(F, unit)
    assert compare_complexes(FU, F, relabel_a=lambda l: l.left)


@given(ideal_pairs())
def test_tensor_rank_convolution(IJ):
    I, J = IJ
    F, G = taylor_direct(I), taylor_direct(J)
    T = tensor_complex(F, G)
    assert validate_complex(T)
    for i in range(T.length + 1):
        assert T.rank(i) == sum(F.rank(j) * G.rank(i - j) for j in range(i + 1))


def test_minimalize_examples():
    I = ideal(2, (2, 0), (1, 1), (0, 3))
    M = minimalize(taylor_direct(I))
    assert M.ranks() == (1, 3, 2)
    assert koszul_totals(I) == (1, 3, 2)
    assert betti_of_ranks(M).entries == koszul_betti_as_table(I)
    assert minimalize(koszul_xy()).ranks() == (1, 2, 1)
    iso = FreeComplex(1, [[("a", (0,))], [("b", (0,))]], [{("a", "b"): 1}])
    assert minimalize(iso).ranks() == (0,)


def koszul_betti_as_table(I):
    return {(i, Monomial(a)): v for (i, a), v in koszul_betti(I).items()}


def test_betti_examples():
    B = betti_numbers(koszul_xy())
    assert B.totals() == (1, 2, 1)
    assert B.entries[(2, XY)] == 1
    assert betti_numbers(taylor_direct(ideal(2, (2, 0), (1, 1), (0, 3)))).totals() == (1, 3, 2)
    for r in range(1, 5):
        gens = [tuple(1 if v == k else 0 for v in range(r)) for k in range(r)]
        T = taylor_direct(ideal(r, *gens))
        assert betti_numbers(T).totals() == tuple(comb(r, i) for i in range(r + 1))
        assert minimalize(T).ranks() == T.ranks()


def test_betti_table_graded_and_shifts():
    B = betti_numbers(taylor_direct(ideal(2, (2, 0), (1, 1), (0, 2))))
    assert B.graded() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert B.max_shift(1) == 2 and B.max_shift(2) == 3 and B.max_shift(5) is None
    assert B.projdim == 2


def test_invariants_examples():
    v = invariants_of_ideal(ideal(2, (1, 0), (0, 1)))
    assert (v.projdim_quotient, v.projdim_ideal, v.reg_ideal, v.reg_quotient) == (2, 1, 1, 0)
    I = ideal(2, (2, 0), (1, 1), (0, 2))
    v = invariants_of_ideal(I)
    kb = koszul_betti(I)
    oracle_M = [max(sum(a) for (j, a) in kb if j == i + 1) for i in range(2)]
    assert v.max_shifts == oracle_M == [2, 3]
    assert v.reg_ideal == 2
    v = invariants_of_ideal(ideal(2, (2, 0)))
    assert (v.projdim_ideal, v.reg_ideal) == (0, 2)
    with pytest.raises(ValueError):
        invariants_of_ideal(MonomialIdeal(2))


def test_invariants_accept_explicit_resolution():
    I = ideal(2, (2, 0), (1, 1), (0, 3))
    assert invariants_of_ideal(I, minimalize(taylor_direct(I))).reg_ideal == invariants_of_ideal(I).reg_ideal


@settings(max_examples=25)
@given(ideals(n_max=4, gens_max=4))
def test_betti_paths_agree_with_koszul_oracle(I):
    T = taylor_direct(I)
    M = minimalize(T)
    assert validate_complex(T) and validate_complex(M)
    B = betti_numbers(T)
    assert B == betti_of_ranks(M)
    assert B.entries == koszul_betti_as_table(I)


@settings(max_examples=25)
@given(ideals(n_max=4, gens_max=4))
def test_taylor_strands_via_plain_divisibility(I):
    T = taylor_direct(I)
    for p in exactness_grid(T):
        a = Monomial(p)
        H = homology_dims(strand(T, a))
        assert H[0] == (0 if I.contains(a) else 1)
        assert not any(H[1:])


@settings(max_examples=25)
@given(ideals(n_max=3, gens_max=4))
def test_minimalize_preserves_strand_homology(I):
    T = taylor_direct(I)
    # truncating the top term leaves a complex with homology, which must also survive
    trunc = FreeComplex.from_columns(T.n, T.terms[:-1], T.cols[:-1], T.field) if T.length > 1 else T
    for C in (T, trunc):
        M = minimalize(C)
        for p in exactness_grid(C):
            a = Monomial(p)
            hc, hm = homology_dims(strand(C, a)), homology_dims(strand(M, a))
            hm = hm + [0] * (len(hc) - len(hm))
            assert hc == hm


def test_prime_field_mode():
    I = ideal(3, (2, 0, 0), (1, 1, 0), (0, 2, 1), (1, 0, 1))
    with using_field("prime:2"):
        T = taylor_direct(I)
        assert T.field == PrimeField(2)
        assert verify_resolution(T, I)
        B = betti_numbers(T)
        assert B == betti_of_ranks(minimalize(T))
    assert B.entries == koszul_betti_as_table(I)


def test_field_mixing_rejected():
    with using_field("prime:3"):
        F = taylor_direct(ideal(1, (1,)))
    G = taylor_direct(ideal(1, (1,)))
    with pytest.raises(ValueError):
        tensor_complex(F, G)


def test_trivial_resolution():
    C = trivial_resolution(3)
    assert C.ranks() == (1,)
    assert verify_resolution(C, MonomialIdeal(3))
    assert betti_numbers(C).totals() == (1,)


def test_grid_is_product_of_occurring_exponents():
    T = taylor_direct(ideal(2, (2, 0), (1, 1), (0, 3)))
    grid = exactness_grid(T)
    assert sorted(grid) == sorted(itertools.product([0, 1, 2], [0, 1, 3]))
