"""Inequality checks for sums and intersections, and the seeded fuzz corpus.

Every inequality is evaluated on minimal resolutions. Each Check carries
both sides in ``data['lhs']`` / ``data['rhs']``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complexes import (
    betti_numbers,
    betti_of_ranks,
    invariants_of_ideal,
    minimalize,
    validate_chain_map,
    verify_resolution,
)
from .io import ideal_to_dict, simplicial_to_dict
from .monomial import Monomial, MonomialIdeal, ideal_intersection, ideal_sum, minimal_generators
from .polarization import polarize_ideal, verify_shift_polarization
from .results import Check
from .simplicial import (
    SimplicialComplex,
    check_corollary_simplicial,
    hochster_table,
    intersection,
    stanley_reisner_ideal,
)
from .star import (
    associativity,
    comparison_map,
    resolution,
    star,
    taylor_equivalence,
)


def _le(name, lhs, rhs) -> Check:
    return Check(name, lhs <= rhs, f"{lhs} <= {rhs}",
                 {"lhs": lhs, "rhs": rhs, "slack": rhs - lhs, "tight": lhs == rhs})


def _skip(name, reason) -> Check:
    return Check(name, True, f"skipped: {reason}", {"skipped": reason})


def convolve(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for j, x in enumerate(a):
        for k, y in enumerate(b):
            out[j + k] += x * y
    return out


def _degenerate(*ideals):
    for I in ideals:
        if I.is_zero:
            return "zero ideal"
    return None


def check_sum_inequalities(I: MonomialIdeal, J: MonomialIdeal) -> list[Check]:
    reason = _degenerate(I, J)
    if reason:
        return [_skip("projdim(I+J)", reason), _skip("reg(I+J)", reason)]
    a, b, s = invariants_of_ideal(I), invariants_of_ideal(J), invariants_of_ideal(ideal_sum(I, J))
    return [
        _le("projdim(I+J)", s.projdim_ideal, a.projdim_ideal + b.projdim_ideal + 1),
        _le("reg(I+J)", s.reg_ideal, a.reg_ideal + b.reg_ideal - 1),
    ]


def check_intersection_inequalities(I: MonomialIdeal, J: MonomialIdeal) -> list[Check]:
    reason = _degenerate(I, J)
    if reason:
        return [_skip("projdim(I&J)", reason), _skip("reg(I&J)", reason)]
    a, b, c = invariants_of_ideal(I), invariants_of_ideal(J), invariants_of_ideal(ideal_intersection(I, J))
    return [
        _le("projdim(I&J)", c.projdim_ideal, a.projdim_ideal + b.projdim_ideal),
        _le("reg(I&J)", c.reg_ideal, a.reg_ideal + b.reg_ideal),
    ]


def check_betti_convolution(I: MonomialIdeal, J: MonomialIdeal) -> list[Check]:
    F, G = resolution(I), resolution(J)
    bI, bJ = betti_of_ranks(F).totals(), betti_of_ranks(G).totals()
    bS = betti_of_ranks(resolution(ideal_sum(I, J))).totals()
    rhs = convolve(bI, bJ)
    lhs = list(bS) + [0] * (len(rhs) - len(bS))
    ok = all(x <= y for x, y in zip(lhs, rhs)) and len(bS) <= len(rhs)
    ranks = list(star(F, G).ranks())
    return [
        Check("betti convolution", ok, f"{lhs} <= {rhs}",
              {"lhs": lhs, "rhs": rhs, "slack": [y - x for x, y in zip(lhs, rhs)],
               "tight": lhs == rhs}),
        Check("star ranks", ranks == rhs, f"{ranks} == {rhs}", {"lhs": ranks, "rhs": rhs}),
    ]


def oracle_crosscheck(C, name="oracle") -> Check:
    """betti_numbers (C tensor K) against the shifts of minimalize(C)."""
    a = betti_numbers(C)
    b = betti_of_ranks(minimalize(C))
    return Check(name, a == b, f"{a.totals()} vs {b.totals()}")


@dataclass
class InequalityReport:
    I: MonomialIdeal
    J: MonomialIdeal
    betti: dict
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c]

    def as_dict(self) -> dict:
        return {
            "I": ideal_to_dict(self.I),
            "J": ideal_to_dict(self.J),
            "betti": self.betti,
            "ok": self.ok,
            "checks": [c.as_dict() for c in self.checks],
        }


def check_pair(I: MonomialIdeal, J: MonomialIdeal, H: MonomialIdeal | None = None,
               extras: bool = True) -> InequalityReport:
    """Everything the construction predicts for one pair (and an optional third ideal).

    With ``extras`` also runs Taylor equivalence, polarization and the
    cross-checks of betti_numbers against minimalize on every complex built.
    """
    S, X = ideal_sum(I, J), ideal_intersection(I, J)
    F, G = resolution(I), resolution(J)
    TF, TG = resolution(I, minimal=False), resolution(J, minimal=False)
    betti = {
        "S/I": list(betti_of_ranks(F).totals()),
        "S/J": list(betti_of_ranks(G).totals()),
        "S/(I+J)": list(betti_of_ranks(resolution(S)).totals()),
        "S/(I&J)": list(betti_of_ranks(resolution(X)).totals()),
    }
    rep = InequalityReport(I, J, betti)
    checks = rep.checks
    star_min, star_tay = star(F, G), star(TF, TG)
    for tag, C in (("minimal", star_min), ("taylor", star_tay)):
        v = verify_resolution(C, S)
        v.name = f"star resolves S/(I+J) [{tag}]"
        checks.append(v)
    checks += check_betti_convolution(I, J)
    checks += check_sum_inequalities(I, J)
    checks += check_intersection_inequalities(I, J)
    cm = validate_chain_map(comparison_map(F, G))
    cm.name = "comparison map commutes"
    checks.append(cm)
    if H is not None:
        checks.append(associativity(F, G, resolution(H)))
    if extras:
        for name, C in (("oracle star[minimal]", star_min), ("oracle star[taylor]", star_tay),
                        ("oracle taylor(I)", TF), ("oracle taylor(J)", TG)):
            checks.append(oracle_crosscheck(C, name))
        for name, K in (("I", I), ("J", J)):
            if not K.is_zero:
                t = taylor_equivalence(K)
                t.name = f"taylor equivalence ({name})"
                checks.append(t)
                p = verify_shift_polarization(K)
                p.name = f"polarization ({name})"
                checks.append(p)
        if not I.is_zero and not J.is_zero:
            r = max(I.max_exponent(), J.max_exponent())
            PI, _ = polarize_ideal(I, r)
            PJ, _ = polarize_ideal(J, r)
            v = verify_resolution(star(resolution(PI), resolution(PJ)), ideal_sum(PI, PJ))
            v.name = "star of polarizations resolves"
            checks.append(v)
    return rep


def random_ideal(rng: random.Random, n: int, exp_max: int, gens_max: int) -> MonomialIdeal:
    k = rng.randint(1, gens_max)
    gens = []
    while len(gens) < k:
        e = tuple(rng.randint(0, exp_max) for _ in range(n))
        if any(e):
            gens.append(Monomial(e))
    return minimal_generators(gens, n)


def ideal_corpus(seed: int, count: int, n_max: int = 4, exp_max: int = 3, gens_max: int = 4):
    """Deterministic list of (I, J, H) triples sharing a variable count."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        out.append(tuple(random_ideal(rng, n, exp_max, gens_max) for _ in range(3)))
    return out


def random_simplicial(rng: random.Random, n: int, max_facets: int = 4) -> SimplicialComplex:
    k = rng.randint(1, max_facets)
    return SimplicialComplex(n, [[v for v in range(n) if rng.random() < 0.5] for _ in range(k)])


def simplicial_corpus(seed: int, count: int, n_max: int = 6, max_generators: int = 10):
    """Random complexes whose Stanley-Reisner ideal has at most max_generators
    generators, so that the Taylor complex (2^r terms) stays small."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, n_max)
        sigma = random_simplicial(rng, n)
        if len(stanley_reisner_ideal(sigma)) <= max_generators:
            out.append(sigma)
    return out


def check_hochster(sigma: SimplicialComplex) -> Check:
    """Hochster sums against Betti numbers of S/I_sigma from its Taylor resolution."""
    I = stanley_reisner_ideal(sigma)
    C = resolution(I, minimal=False)
    B = betti_numbers(C).totals()
    H = hochster_table(sigma)
    lhs = [H[i] for i in range(sigma.n + 1)]
    rhs = list(B) + [0] * (sigma.n + 1 - len(B))
    return Check("hochster", lhs == rhs, f"{lhs} == {rhs}", {"hochster": lhs, "betti": rhs})


def check_sr_sum(delta: SimplicialComplex, gamma: SimplicialComplex) -> Check:
    a = stanley_reisner_ideal(intersection(delta, gamma))
    b = ideal_sum(stanley_reisner_ideal(delta), stanley_reisner_ideal(gamma))
    return Check("SR(intersection) = sum of SR ideals", a == b, f"{a} vs {b}")


def run_fuzz_corpus(seed: int = 42, count: int = 50, n_max: int = 4, exp_max: int = 3,
                    gens_max: int = 4, simplicial_count: int = 20, simplicial_n_max: int = 6) -> dict:
    """Run every property suite on the seeded corpus. ``report['ok']`` is the verdict.

    Failures include the serialized inputs as a reproduction.
    """
    entries, failures = [], []
    tight = {"projdim(I+J)": 0, "reg(I+J)": 0}
    for idx, (I, J, H) in enumerate(ideal_corpus(seed, count, n_max, exp_max, gens_max)):
        rep = check_pair(I, J, H)
        for c in rep.checks:
            if c.name in tight and c.data.get("tight"):
                tight[c.name] += 1
        d = rep.as_dict()
        d["H"] = ideal_to_dict(H)
        d["index"] = idx
        entries.append(d)
        for c in rep.failures():
            failures.append({"index": idx, "check": c.name, "detail": c.detail,
                             "I": ideal_to_dict(I), "J": ideal_to_dict(J), "H": ideal_to_dict(H)})
    simp = []
    cx = simplicial_corpus(seed, 2 * simplicial_count, simplicial_n_max)
    for idx in range(simplicial_count):
        sigma = cx[2 * idx]
        delta, gamma = _same_vertices(cx[2 * idx + 1], sigma)
        checks = [check_hochster(sigma), check_corollary_simplicial(delta, gamma), check_sr_sum(delta, gamma)]
        simp.append({"index": idx, "complex": simplicial_to_dict(sigma),
                     "pair": [simplicial_to_dict(delta), simplicial_to_dict(gamma)],
                     "checks": [c.as_dict() for c in checks]})
        for c in checks:
            if not c:
                failures.append({"index": idx, "check": c.name, "detail": c.detail,
                                 "complex": simplicial_to_dict(sigma)})
    return {
        "params": {"seed": seed, "count": count, "n_max": n_max, "exp_max": exp_max,
                   "gens_max": gens_max, "simplicial_count": simplicial_count},
        "entries": entries,
        "simplicial": simp,
        "tight": tight,
        "failures": failures,
        "ok": not failures,
    }


def _same_vertices(a: SimplicialComplex, b: SimplicialComplex):
    n = max(a.n, b.n)
    return SimplicialComplex(n, a.facets), SimplicialComplex(n, b.facets)

