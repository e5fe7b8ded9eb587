"""Polarization of monomial ideals into squarefree ideals.

x_i^a becomes y_{i1} y_{i2} ... y_{ia}. The target ring has only the
y-variables, n * r of them, with y_{ik} (i 0-based, k = 1..r) at index
i * r + (k - 1).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .complexes import betti_of_ranks
from .monomial import DimensionError, Monomial, MonomialIdeal
from .results import Check
from .star import resolution


class NotPolarizedError(ValueError):
    """A squarefree monomial whose support in some block is not a prefix."""


@dataclass(frozen=True)
class PolarizationContext:
    n: int
    r: int

    def __post_init__(self):
        if self.n < 0 or self.r < 1:
            raise ValueError(f"bad polarization context n={self.n}, r={self.r}")

    @property
    def target_n(self) -> int:
        return self.n * self.r

    def index(self, i: int, k: int) -> int:
        """Position of y_{ik}; i is 0-based, k runs 1..r."""
        if not (0 <= i < self.n and 1 <= k <= self.r):
            raise IndexError(f"y[{i}][{k}] outside n={self.n}, r={self.r}")
        return i * self.r + (k - 1)

    def variable_names(self) -> list[str]:
        return [f"y{i + 1}_{k}" for i in range(self.n) for k in range(1, self.r + 1)]


def polarize_monomial(u: Monomial, ctx: PolarizationContext) -> Monomial:
    if u.n != ctx.n:
        raise DimensionError(f"monomial {u.exps} not in {ctx.n} variables")
    if any(e > ctx.r for e in u.exps):
        raise ValueError(f"exponent of {u.exps} exceeds polarization depth r={ctx.r}")
    out = [0] * ctx.target_n
    for i, e in enumerate(u.exps):
        for k in range(1, e + 1):
            out[ctx.index(i, k)] = 1
    return Monomial(tuple(out))


def depolarize_monomial(v: Monomial, ctx: PolarizationContext) -> Monomial:
    if v.n != ctx.target_n:
        raise DimensionError(f"monomial {v.exps} not in {ctx.target_n} variables")
    if not v.is_squarefree():
        raise NotPolarizedError(f"{v.exps} is not squarefree")
    exps = []
    for i in range(ctx.n):
        block = v.exps[i * ctx.r:(i + 1) * ctx.r]
        k = sum(block)
        if not all(block[:k]):
            raise NotPolarizedError(f"block {i} of {v.exps} is not a prefix pattern")
        exps.append(k)
    return Monomial(tuple(exps))


def polarize_ideal(I: MonomialIdeal, r: int | None = None) -> tuple[MonomialIdeal, PolarizationContext]:
    if I.is_zero or getattr(I, "is_unit", False):
        raise ValueError("polarization needs a nonzero proper ideal")
    a = I.max_exponent()
    r = a if r is None else r
    if r < a:
        raise ValueError(f"r={r} is below the largest exponent {a}")
    ctx = PolarizationContext(I.n, r)
    P = MonomialIdeal(ctx.target_n, [polarize_monomial(u, ctx) for u in I])
    if len(P) != len(I):
        raise AssertionError("polarization lost a minimal generator")
    return P, ctx


def verify_shift_polarization(I: MonomialIdeal, r: int | None = None) -> Check:
    """Shifts of the minimal resolution of I^pol depolarize onto those of I."""
    P, ctx = polarize_ideal(I, r)
    B = betti_of_ranks(resolution(I))
    BP = betti_of_ranks(resolution(P))
    if B.projdim != BP.projdim:
        return Check("polarization", False, f"projdim {B.projdim} vs {BP.projdim}")
    for i in range(B.projdim + 1):
        want = B.shifts(i)
        got: Counter = Counter()
        for v, m in BP.shifts(i).items():
            try:
                got[depolarize_monomial(v, ctx)] += m
            except NotPolarizedError as exc:
                return Check("polarization", False, f"degree {i}: {exc}", {"degree": i})
        if got != want:
            return Check("polarization", False, f"degree {i}: shift multisets differ",
                         {"degree": i,
                          "expected": sorted([list(a.exps), k] for a, k in want.items()),
                          "got": sorted([list(a.exps), k] for a, k in got.items())})
    return Check("polarization", True, f"r={ctx.r}, betti {B.totals()}",
                 {"r": ctx.r, "betti": list(B.totals())})
