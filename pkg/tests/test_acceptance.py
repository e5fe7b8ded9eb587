"""Acceptance criteria 1-10. Each test appends one PASS/FAIL line, printed in the
terminal summary; run with ``pytest tests/test_acceptance.py -s`` to also see
them inline."""

import time
from functools import lru_cache
from math import comb

from conftest import ACCEPTANCE_LINES
from starres.checks import (
    _same_vertices,
    check_betti_convolution,
    check_hochster,
    check_intersection_inequalities,
    check_sum_inequalities,
    ideal_corpus,
    oracle_crosscheck,
    simplicial_corpus,
)
from starres.complexes import betti_numbers, validate_chain_map, verify_resolution
from starres.monomial import Monomial, MonomialIdeal, ideal_intersection, ideal_sum
from starres.polarization import polarize_ideal, verify_shift_polarization
from starres.simplicial import check_corollary_simplicial, stanley_reisner_ideal
from starres.star import (
    bits_to_subset,
    compare_complexes,
    comparison_map,
    flatten_label,
    principal_resolution,
    resolution,
    star,
    taylor_by_star,
    taylor_direct,
)

SEED, COUNT = 42, 50


def report(num, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {title} -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


@lru_cache(maxsize=None)
def corpus():
    return ideal_corpus(SEED, COUNT, n_max=4, exp_max=3, gens_max=4)


# every resolution built by criteria 2-8, keyed by a readable tag
BUILT = {}


def keep(tag, C):
    BUILT[tag] = C
    return C


@lru_cache(maxsize=None)
def simplicial_cases():
    cx = simplicial_corpus(SEED, 60, n_max=6)
    singles = cx[:20]
    pairs = [_same_vertices(cx[20 + 2 * k], cx[21 + 2 * k]) for k in range(20)]
    return singles, pairs


def test_criterion_01_koszul():
    t0 = time.perf_counter()
    x, y = Monomial((1, 0)), Monomial((0, 1))
    C = star(principal_resolution(x), principal_resolution(y))
    v = verify_resolution(C, MonomialIdeal(2, [x, y]))
    beta = betti_numbers(C).totals()
    dt = time.perf_counter() - t0
    ok = C.ranks() == (1, 2, 1) and bool(v) and beta == (1, 2, 1) and dt < 1.0
    assert report(1, "Koszul sanity", ok, f"ranks {C.ranks()}, betti {beta}, verify {bool(v)}, {dt:.3f}s < 1s")


def build_criterion_2():
    fails = []
    for k, (I, J, _) in enumerate(corpus()):
        S = ideal_sum(I, J)
        for tag, minimal in (("minimal", True), ("taylor", False)):
            F = keep(f"#{k} F[{tag}]", resolution(I, minimal))
            G = keep(f"#{k} G[{tag}]", resolution(J, minimal))
            C = keep(f"#{k} F*G[{tag}]", star(F, G))
            v = verify_resolution(C, S)
            if not v:
                fails.append((k, tag, v.detail))
    return fails


def test_criterion_02_star_resolves_sum():
    t0 = time.perf_counter()
    fails = build_criterion_2()
    dt = time.perf_counter() - t0
    ok = not fails and dt < 120
    assert report(2, "star resolves S/(I+J), minimal and Taylor inputs", ok,
                  f"{2 * COUNT} complexes, {len(fails)} failures, {dt:.2f}s < 120s"), fails


def test_criterion_03_betti_convolution():
    fails = []
    for k, (I, J, _) in enumerate(corpus()):
        keep(f"#{k} min(I+J)", resolution(ideal_sum(I, J)))
        for c in check_betti_convolution(I, J):
            if not c:
                fails.append((k, c.name, c.detail))
    assert report(3, "betti(S/(I+J)) <= convolution, star ranks equal it", not fails,
                  f"{COUNT} pairs, {len(fails)} failures"), fails


def test_criterion_04_inequalities():
    fails, tight = [], {"projdim(I+J)": 0, "reg(I+J)": 0}
    for k, (I, J, _) in enumerate(corpus()):
        keep(f"#{k} min(I&J)", resolution(ideal_intersection(I, J)))
        for c in check_sum_inequalities(I, J) + check_intersection_inequalities(I, J):
            if not c:
                fails.append((k, c.name, c.detail))
            if c.name in tight and c.data.get("tight"):
                tight[c.name] += 1
    x, y = MonomialIdeal(2, [Monomial((1, 0))]), MonomialIdeal(2, [Monomial((0, 1))])
    koszul_tight = all(c.data["tight"] for c in check_sum_inequalities(x, y))
    ok = not fails and all(tight.values()) and koszul_tight
    assert report(4, "projdim/reg for sums and intersections", ok,
                  f"{4 * COUNT} checks, {len(fails)} failures, tight counts {tight}, "
                  f"Koszul pair tight {koszul_tight}"), fails


def test_criterion_05_taylor_equivalence():
    fails = []
    for k, (I, _, _) in enumerate(corpus()[:20]):
        A = keep(f"#{k} taylor-by-star(I)", taylor_by_star(I))
        B = keep(f"#{k} taylor(I)", taylor_direct(I))
        r = len(I)
        ranks_ok = A.ranks() == B.ranks() == tuple(comb(r, i) for i in range(r + 1))
        c = compare_complexes(A, B, relabel_a=lambda l: bits_to_subset(flatten_label(l)))
        if not (c and ranks_ok):
            fails.append((k, c.detail))
    assert report(5, "iterated star of principal resolutions = Taylor complex", not fails,
                  f"20 ideals, {len(fails)} mismatches"), fails


def test_criterion_06_associativity():
    fails, conventions = [], set()
    for k, (I, J, H) in enumerate(corpus()[:20]):
        F, G, K = resolution(I), resolution(J), resolution(H)
        L = keep(f"#{k} (F*G)*H", star(star(F, G), K))
        R = keep(f"#{k} F*(G*H)", star(F, star(G, K)))
        c = compare_complexes(L, R, flatten_label, flatten_label)
        conventions.add(c.data.get("convention"))
        if not c:
            fails.append((k, c.detail))
    assert report(6, "associativity under canonical relabeling", not fails,
                  f"20 triples, {len(fails)} mismatches, conventions {sorted(map(str, conventions))}"), fails


def test_criterion_07_polarization():
    fails = []
    for k, (I, _, _) in enumerate(corpus()[:20]):
        P, _ = polarize_ideal(I)
        keep(f"#{k} min(I^pol)", resolution(P))
        c = verify_shift_polarization(I)
        if not c:
            fails.append((k, c.detail))
    assert report(7, "polarized shifts depolarize onto shifts of I", not fails,
                  f"20 ideals, {len(fails)} failures"), fails


def test_criterion_08_hochster():
    singles, pairs = simplicial_cases()
    fails = []
    for k, sigma in enumerate(singles):
        I = stanley_reisner_ideal(sigma)
        keep(f"simplicial #{k} taylor(I_Sigma)", resolution(I, minimal=False))
        c = check_hochster(sigma)
        if not c:
            fails.append(("hochster", k, c.detail))
    for k, (d, g) in enumerate(pairs):
        c = check_corollary_simplicial(d, g)
        if not c:
            fails.append(("convolution", k, c.detail))
    nmax = max(s.n for s in singles + [p[0] for p in pairs])
    assert report(8, "Hochster sums and the simplicial convolution bound", not fails,
                  f"20 complexes + 20 pairs on <= {nmax} vertices, {len(fails)} failures"), fails


def test_criterion_09_comparison_map():
    fails = []
    for k, (I, J, _) in enumerate(corpus()[:20]):
        c = validate_chain_map(comparison_map(resolution(I), resolution(J)))
        if not c:
            fails.append((k, c.detail))
    assert report(9, "comparison map commutes with the differentials", not fails,
                  f"20 pairs, {len(fails)} failures"), fails


def test_criterion_10_oracle_crosscheck():
    if not BUILT:  # run in isolation
        build_criterion_2()
    fails = [tag for tag, C in BUILT.items() if not oracle_crosscheck(C)]
    assert report(10, "betti via C tensor K equals shifts of minimalize(C)", not fails,
                  f"{len(BUILT)} resolutions, {len(fails)} mismatches"), fails
