"""Monomials as exponent vectors, and monomial ideals by minimal generators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class DimensionError(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class DivisibilityError(ArithmeticError):
    pass


class UnitIdealError(ValueError):
    """The unit monomial was offered as an ideal generator."""


@dataclass(frozen=True, order=True)
class Monomial:
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int, power: int = 1) -> Monomial:
        e = [0] * n
        e[i] = power
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def total_degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exps) if e)

    def __mul__(self, other: Monomial) -> Monomial:
        _same_n(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: Monomial) -> Monomial:
        return quotient(self, other)

    def __str__(self):
        return format_monomial(self)


def _same_n(u: Monomial, v: Monomial):
    if len(u.exps) != len(v.exps):
        raise DimensionError(f"variable counts differ: {len(u.exps)} vs {len(v.exps)}")


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _same_n(u, v)
    return Monomial(tuple(max(a, b) for a, b in zip(u.exps, v.exps)))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _same_n(u, v)
    return Monomial(tuple(min(a, b) for a, b in zip(u.exps, v.exps)))


def lcm_all(ms: Iterable[Monomial], n: int) -> Monomial:
    out = [0] * n
    for m in ms:
        if m.n != n:
            raise DimensionError(f"expected {n} variables, got {m.n}")
        out = [max(a, b) for a, b in zip(out, m.exps)]
    return Monomial(tuple(out))


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff u divides v, i.e. u <= v componentwise."""
    _same_n(u, v)
    return all(a <= b for a, b in zip(u.exps, v.exps))


def quotient(v: Monomial, u: Monomial) -> Monomial:
    """v / u; raises DivisibilityError unless u divides v."""
    if not divides(u, v):
        raise DivisibilityError(f"{u.exps} does not divide {v.exps}")
    return Monomial(tuple(b - a for a, b in zip(u.exps, v.exps)))


def format_monomial(m: Monomial, names: list[str] | None = None) -> str:
    if m.is_one():
        return "1"
    if names is None:
        names = [f"x{i + 1}" for i in range(m.n)]
    parts = []
    for name, e in zip(names, m.exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class MonomialIdeal:
    """Monomial ideal of K[x_1..x_n] stored by its minimal generators.

    Generators are kept in descending lex order of exponent vectors, which
    fixes the generator order used by the Taylor complex. The empty generator
    set is the zero ideal; the unit ideal is not representable here (see
    ``UnitIdeal``).
    """

    __slots__ = ("n", "generators")

    def __init__(self, n: int, generators: Iterable[Monomial] = ()):
        gens = set()
        for g in generators:
            if not isinstance(g, Monomial):
                g = Monomial(tuple(g))
            if g.n != n:
                raise DimensionError(f"generator {g.exps} not in {n} variables")
            if g.is_one():
                raise UnitIdealError("unit monomial cannot generate a proper ideal")
            gens.add(g)
        for g in gens:
            for h in gens:
                if g != h and divides(g, h):
                    raise ValueError(
                        f"generators not minimal: {g.exps} divides {h.exps}; "
                        "use minimal_generators()"
                    )
        self.n = n
        self.generators = tuple(sorted(gens, reverse=True))

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self):
        return hash((self.n, self.generators))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {[g.exps for g in self.generators]})"

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(map(str, self.generators)) + ")"

    @property
    def is_zero(self) -> bool:
        return not self.generators

    is_unit = False

    def contains(self, m: Monomial) -> bool:
        if m.n != self.n:
            raise DimensionError(f"monomial {m.exps} not in {self.n} variables")
        return any(divides(g, m) for g in self.generators)

    def max_exponent(self) -> int:
        return max((max(g.exps) for g in self.generators), default=0)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)


@dataclass(frozen=True)
class UnitIdeal:
    """The whole ring S, returned where a construction can degenerate to S."""

    n: int
    is_unit = True
    is_zero = False

    def contains(self, m: Monomial) -> bool:
        return True


def minimal_generators(ms: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    ms = [m if isinstance(m, Monomial) else Monomial(tuple(m)) for m in ms]
    if n is None:
        if not ms:
            raise ValueError("variable count required for an empty generator set")
        n = ms[0].n
    for m in ms:
        if m.n != n:
            raise DimensionError(f"monomial {m.exps} not in {n} variables")
        if m.is_one():
            raise UnitIdealError("unit monomial generates the unit ideal")
    uniq = sorted(set(ms), key=lambda m: m.total_degree)
    kept: list[Monomial] = []
    for m in uniq:
        # anything dividing m has total degree <= deg m, so it is already seen
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return MonomialIdeal(n, kept)


def _check_pair(I, J):
    if I.n != J.n:
        raise DimensionError(f"ideals in {I.n} and {J.n} variables")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_pair(I, J)
    return minimal_generators(I.generators + J.generators, I.n)


def ideal_intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_pair(I, J)
    return minimal_generators((lcm(u, v) for u in I for v in J), I.n)


def quotient_shift_ideal(I: MonomialIdeal, g: Monomial) -> MonomialIdeal | UnitIdeal:
    """Ideal generated by lcm(u, g)/g over the generators u of I.

    Returns ``UnitIdeal`` when some generator divides g.
    """
    if g.n != I.n:
        raise DimensionError(f"monomial {g.exps} not in {I.n} variables")
    qs = [quotient(lcm(u, g), g) for u in I]
    if any(q.is_one() for q in qs):
        return UnitIdeal(I.n)
    return minimal_generators(qs, I.n)
