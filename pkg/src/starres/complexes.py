"""Finite multigraded complexes of free S-modules with monomial differentials.

A basis element carries its multidegree as a monomial u_g. A differential
entry is stored only by its scalar a_gh; the monomial part is always
u_g / u_h and is never stored.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .field import get_field
from .linalg import compose_is_zero, rank
from .monomial import (
    DimensionError,
    Monomial,
    MonomialIdeal,
    divides,
    minimal_generators,
    quotient,
)
from .results import Check


class NotAComplexError(ValueError):
    pass


@dataclass(frozen=True)
class BasisElement:
    label: Hashable
    degree: Monomial


class PairLabel(NamedTuple):
    """Label of g*e (or g (x) e): the labels of the two factors."""

    left: Hashable
    right: Hashable


class FreeComplex:
    """0 <- F_0 <- F_1 <- ... <- F_p, each F_i free with a labeled basis.

    ``differentials[i - 1]`` describes d_i: F_i -> F_{i-1} as a mapping
    ``{(target_label, source_label): scalar}``.
    """

    def __init__(self, n: int, terms: Sequence[Iterable], differentials: Sequence[dict] = (), field=None):
        self.field = field if field is not None else get_field()
        F = self.field
        built = []
        for i, term in enumerate(terms):
            elems = []
            seen = set()
            for b in term:
                if not isinstance(b, BasisElement):
                    label, deg = b
                    deg = deg if isinstance(deg, Monomial) else Monomial(tuple(deg))
                    b = BasisElement(label, deg)
                if b.degree.n != n:
                    raise DimensionError(f"basis element {b.label!r} not in {n} variables")
                if b.label in seen:
                    raise ValueError(f"duplicate label {b.label!r} in degree {i}")
                seen.add(b.label)
                elems.append(b)
            built.append(tuple(elems))
        if not built:
            built = [()]
        if len(differentials) > len(built) - 1:
            raise ValueError("more differentials than terms")
        index = [{b.label: k for k, b in enumerate(t)} for t in built]
        cols = [[]]
        for i in range(1, len(built)):
            col = [dict() for _ in built[i]]
            mat = differentials[i - 1] if i - 1 < len(differentials) else {}
            for (hl, gl), c in mat.items():
                c = F(c)
                if c != 0:
                    col[index[i][gl]][index[i - 1][hl]] = c
            cols.append(col)
        self._init(n, built, cols, index)

    def _init(self, n, terms, cols, index=None):
        self.n = n
        self.terms = tuple(tuple(t) for t in terms)
        self.cols = cols
        self._index = index

    @classmethod
    def from_columns(cls, n, terms, cols, field):
        """Internal constructor: cols[i][g] = {h: nonzero scalar} for i >= 1."""
        obj = cls.__new__(cls)
        obj.field = field
        obj._init(n, terms, cols)
        return obj

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def rank(self, i: int) -> int:
        return len(self.terms[i]) if 0 <= i < len(self.terms) else 0

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.terms)

    def basis(self, i: int) -> tuple[BasisElement, ...]:
        return self.terms[i] if 0 <= i < len(self.terms) else ()

    def degrees(self, i: int) -> list[Monomial]:
        return [b.degree for b in self.basis(i)]

    def index(self, i: int, label) -> int:
        if self._index is None:
            self._index = [{b.label: k for k, b in enumerate(t)} for t in self.terms]
        return self._index[i][label]

    def column(self, i: int, g: int) -> dict:
        return self.cols[i][g]

    def entries(self, i: int):
        """Yield (h, g, scalar) for the nonzero entries of d_i."""
        if not 1 <= i <= self.length:
            return
        for g, col in enumerate(self.cols[i]):
            for h, c in col.items():
                yield h, g, c

    def matrix(self, i: int) -> dict:
        """d_i keyed by (target_label, source_label)."""
        src, tgt = self.terms[i], self.terms[i - 1]
        return {(tgt[h].label, src[g].label): c for h, g, c in self.entries(i)}

    def nnz(self) -> int:
        return sum(len(c) for cols in self.cols[1:] for c in cols)

    def all_degrees(self) -> list[Monomial]:
        return [b.degree for t in self.terms for b in t]

    def __repr__(self):
        return f"<FreeComplex n={self.n} ranks={self.ranks()} field={self.field.name}>"


def _same_setting(F: FreeComplex, G: FreeComplex):
    if F.n != G.n:
        raise DimensionError(f"complexes over {F.n} and {G.n} variables")
    if F.field != G.field:
        raise ValueError(f"complexes over different fields: {F.field.name}, {G.field.name}")


def validate_complex(C: FreeComplex) -> Check:
    """Check divisibility of every entry and d_{i-1} d_i = 0 on scalars."""
    for i in range(1, C.length + 1):
        src, tgt = C.terms[i], C.terms[i - 1]
        for h, g, _ in C.entries(i):
            if not divides(tgt[h].degree, src[g].degree):
                return Check("complex", False,
                             f"d_{i} entry {src[g].label!r} -> {tgt[h].label!r}: "
                             f"{tgt[h].degree.exps} does not divide {src[g].degree.exps}",
                             {"kind": "divisibility", "degree": i,
                              "source": src[g].label, "target": tgt[h].label})
    F = C.field
    for i in range(2, C.length + 1):
        low, high = C.cols[i - 1], C.cols[i]
        for g, col in enumerate(high):
            acc = {}
            for h, a in col.items():
                for f, b in low[h].items():
                    acc[f] = F.add(acc.get(f, F.zero), F.mul(a, b))
            for f, v in sorted(acc.items()):
                if v != 0:
                    return Check("complex", False,
                                 f"d_{i - 1} d_{i} nonzero at ({C.terms[i][g].label!r}, "
                                 f"{C.terms[i - 2][f].label!r}): {v}",
                                 {"kind": "d_squared", "degree": i, "source": C.terms[i][g].label,
                                  "target": C.terms[i - 2][f].label, "value": str(v)})
    return Check("complex", True, f"ranks {C.ranks()}")


@dataclass
class Strand:
    """A finite complex of K-vector spaces: maps[i] is K^dims[i] -> K^dims[i-1]."""

    dims: list[int]
    maps: list[list[dict]]
    field: object
    multidegree: Monomial | None = None
    sub_basis: list[list[int]] = field(default_factory=list)


def _strand_from_mask(C: FreeComplex, keep: list[list[int]], a=None) -> Strand:
    maps = [[]]
    for i in range(1, len(keep)):
        pos = {h: r for r, h in enumerate(keep[i - 1])}
        cols = []
        for g in keep[i]:
            cols.append({pos[h]: c for h, c in C.cols[i][g].items() if h in pos})
        maps.append(cols)
    return Strand([len(k) for k in keep], maps, C.field, a, keep)


def strand(C: FreeComplex, a: Monomial) -> Strand:
    """The degree-a strand: basis elements whose degree divides a."""
    if a.n != C.n:
        raise DimensionError(f"multidegree {a.exps} not in {C.n} variables")
    keep = [[k for k, b in enumerate(t) if divides(b.degree, a)] for t in C.terms]
    return _strand_from_mask(C, keep, a)


def homology_dims(V: Strand, check: bool = True) -> list[int]:
    if check:
        for i in range(2, len(V.dims)):
            if not compose_is_zero(V.maps[i - 1], V.maps[i], V.field):
                raise NotAComplexError(f"maps {i - 1} and {i} do not compose to zero")
    ranks = [0] + [rank(V.maps[i], V.dims[i - 1], V.field) for i in range(1, len(V.dims))] + [0]
    return [V.dims[i] - ranks[i] - ranks[i + 1] for i in range(len(V.dims))]


def exactness_grid(C: FreeComplex, extra: Iterable[Monomial] = ()) -> list[tuple[int, ...]]:
    """Product over variables of the exponents occurring in basis degrees (0 included)."""
    values = [{0} for _ in range(C.n)]
    for m in itertools.chain(C.all_degrees(), extra):
        for v, e in enumerate(m.exps):
            values[v].add(e)
    return list(itertools.product(*(sorted(s) for s in values)))


def _distinct_patterns(C: FreeComplex, grid):
    """Yield (grid point, per-degree kept indices) once per divisibility pattern."""
    degs = C.all_degrees()
    offsets = np.cumsum([0] + [len(t) for t in C.terms])
    big = any(e >= 2**62 for m in degs for e in m.exps) or any(e >= 2**62 for p in grid for e in p)
    if big:
        masks = [[all(d <= x for d, x in zip(m.exps, p)) for m in degs] for p in grid]
        masks = np.array(masks, dtype=bool).reshape(len(grid), len(degs))
    else:
        D = np.array([m.exps for m in degs], dtype=np.int64).reshape(len(degs), C.n)
        A = np.array(grid, dtype=np.int64).reshape(len(grid), C.n)
        masks = _kernels.divisibility_masks(D, A)
    seen = set()
    for k, p in enumerate(grid):
        key = masks[k].tobytes()
        if key in seen:
            continue
        seen.add(key)
        row = masks[k]
        keep = [np.nonzero(row[offsets[i]:offsets[i + 1]])[0].tolist() for i in range(len(C.terms))]
        yield p, keep


def h0_ideal(C: FreeComplex) -> MonomialIdeal | None:
    """Ideal generated by degrees of F_1 elements hitting the F_0 generator.

    None when a unit entry makes the image the whole ring.
    """
    if C.rank(0) != 1 or C.length < 1:
        return MonomialIdeal(C.n)
    gens = [C.terms[1][g].degree for g, col in enumerate(C.cols[1]) if col.get(0, 0) != 0]
    gens = [quotient(u, C.terms[0][0].degree) for u in gens]
    if any(u.is_one() for u in gens):
        return None
    return minimal_generators(gens, C.n)


def verify_resolution(C: FreeComplex, I: MonomialIdeal) -> Check:
    """Check that C resolves S/I: H_0 generators match I and every strand is exact."""
    name = "resolution"
    if C.n != I.n:
        raise DimensionError(f"complex over {C.n} variables, ideal over {I.n}")
    if C.rank(0) != 1 or not C.terms[0][0].degree.is_one():
        return Check(name, False, "F_0 is not S in degree 1", {"kind": "precondition"})
    vc = validate_complex(C)
    if not vc:
        return Check(name, False, "not a complex: " + vc.detail, {"kind": "complex", "violation": vc.data})
    J = h0_ideal(C)
    if J is None or J != I:
        return Check(name, False, f"H_0 is S/{J if J is not None else '(1)'}, expected S/{I}",
                     {"kind": "h0", "got": None if J is None else [g.exps for g in J]})
    grid = exactness_grid(C)
    checked = 0
    for p, keep in _distinct_patterns(C, grid):
        checked += 1
        H = homology_dims(_strand_from_mask(C, keep), check=False)
        a = Monomial(p)
        want0 = 0 if I.contains(a) else 1
        if H[0] != want0:
            return Check(name, False, f"H_0 at {p} has dimension {H[0]}, expected {want0}",
                         {"kind": "h0_strand", "multidegree": list(p), "position": 0})
        for i in range(1, len(H)):
            if H[i]:
                return Check(name, False, f"H_{i} at {p} has dimension {H[i]}",
                             {"kind": "homology", "multidegree": list(p), "position": i})
    return Check(name, True, f"grid {len(grid)} points, {checked} distinct strands",
                 {"grid_size": len(grid), "strands": checked})


def product_complex(F: FreeComplex, G: FreeComplex, degree_of) -> FreeComplex:
    """Basis pairs (g, e) of total degree j + k with the tensor-product differential.

    ``degree_of(u_g, u_e)`` fixes the multidegree of the pair: the product for
    the tensor complex, the lcm for the star complex. Sign (-1)^j on the right
    factor with j the homological degree of the left one.
    """
    _same_setting(F, G)
    K = F.field
    length = F.length + G.length
    terms, where = [], []
    for i in range(length + 1):
        t, pos = [], {}
        for j in range(max(0, i - G.length), min(i, F.length) + 1):
            k = i - j
            for gi, g in enumerate(F.terms[j]):
                for ei, e in enumerate(G.terms[k]):
                    pos[(j, gi, ei)] = len(t)
                    t.append(BasisElement(PairLabel(g.label, e.label), degree_of(g.degree, e.degree)))
        terms.append(t)
        where.append(pos)
    cols = [[]]
    for i in range(1, length + 1):
        col = [None] * len(terms[i])
        for (j, gi, ei), s in where[i].items():
            k = i - j
            out = {}
            if j >= 1:
                for h, a in F.cols[j][gi].items():
                    out[where[i - 1][(j - 1, h, ei)]] = a
            if k >= 1:
                sign = j % 2
                for f, b in G.cols[k][ei].items():
                    out[where[i - 1][(j, gi, f)]] = K.neg(b) if sign else b
            col[s] = out
        cols.append(col)
    return FreeComplex.from_columns(F.n, terms, cols, K)


def tensor_complex(F: FreeComplex, G: FreeComplex) -> FreeComplex:
    return product_complex(F, G, lambda u, v: u * v)


def trim(C: FreeComplex) -> FreeComplex:
    """Drop trailing zero terms (term 0 always stays)."""
    p = len(C.terms)
    while p > 1 and not C.terms[p - 1]:
        p -= 1
    if p == len(C.terms):
        return C
    return FreeComplex.from_columns(C.n, C.terms[:p], C.cols[:p], C.field)


def minimalize(C: FreeComplex) -> FreeComplex:
    """Cancel unit entries (equal source and target degree) until none remain.

    Pivots are taken in scan order: lowest homological degree first, then
    source basis order, then target basis order. Cancelling in degree i never
    creates unit entries below i, so the scan resumes where it stopped.
    """
    K = C.field
    L = C.length
    cols = [[]] + [[dict(c) for c in C.cols[i]] for i in range(1, L + 1)]
    rows = [[]]
    for i in range(1, L + 1):
        r = [set() for _ in C.terms[i - 1]]
        for g, col in enumerate(cols[i]):
            for h in col:
                r[h].add(g)
        rows.append(r)
    alive = [[True] * len(t) for t in C.terms]

    def find(i):
        src, tgt = C.terms[i], C.terms[i - 1]
        for g, col in enumerate(cols[i]):
            if not alive[i][g]:
                continue
            for h in sorted(col):
                if src[g].degree == tgt[h].degree:
                    return g, h
        return None

    i = 1
    while i <= L:
        hit = find(i)
        if hit is None:
            i += 1
            continue
        g, h = hit
        a = cols[i][g][h]
        gcol = cols[i][g]
        for g2 in list(rows[i][h]):
            if g2 == g:
                continue
            factor = K.div(cols[i][g2][h], a)
            c2 = cols[i][g2]
            for h2, b in gcol.items():
                if h2 == h:
                    continue
                v = K.sub(c2.get(h2, K.zero), K.mul(factor, b))
                if v != 0:
                    c2[h2] = v
                    rows[i][h2].add(g2)
                elif h2 in c2:
                    del c2[h2]
                    rows[i][h2].discard(g2)
        for h2 in gcol:
            rows[i][h2].discard(g)
        cols[i][g] = {}
        for g2 in rows[i][h]:
            cols[i][g2].pop(h, None)
        rows[i][h] = set()
        if i + 1 <= L:
            for g3 in rows[i + 1][g]:
                cols[i + 1][g3].pop(g, None)
            rows[i + 1][g] = set()
        if i - 1 >= 1:
            for h3 in cols[i - 1][h]:
                rows[i - 1][h3].discard(h)
            cols[i - 1][h] = {}
        alive[i][g] = False
        alive[i - 1][h] = False

    terms, new_cols, remap = [], [[]], []
    for i, t in enumerate(C.terms):
        keep = [k for k in range(len(t)) if alive[i][k]]
        remap.append({k: r for r, k in enumerate(keep)})
        terms.append([t[k] for k in keep])
    for i in range(1, L + 1):
        new_cols.append([{remap[i - 1][h]: c for h, c in cols[i][g].items()}
                         for g in range(len(C.terms[i])) if alive[i][g]])
    return trim(FreeComplex.from_columns(C.n, terms, new_cols, K))


class BettiTable:
    """Multigraded Betti numbers beta_{i, a} keyed by (i, multidegree)."""

    def __init__(self, n: int, entries: dict):
        self.n = n
        self.entries = {k: v for k, v in entries.items() if v}

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self):
        return f"BettiTable(totals={self.totals()})"

    @property
    def projdim(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def total(self, i: int) -> int:
        return sum(v for (j, _), v in self.entries.items() if j == i)

    def totals(self) -> tuple[int, ...]:
        return tuple(self.total(i) for i in range(self.projdim + 1))

    def shifts(self, i: int) -> Counter:
        return Counter({a: v for (j, a), v in self.entries.items() if j == i})

    def max_shift(self, i: int) -> int | None:
        """M_i: largest total degree of an i-th shift, None if beta_i = 0."""
        return max((a.total_degree for (j, a) in self.entries if j == i), default=None)

    def graded(self) -> dict:
        out: Counter = Counter()
        for (i, a), v in self.entries.items():
            out[(i, a.total_degree)] += v
        return dict(out)


def betti_numbers(C: FreeComplex) -> BettiTable:
    """Multigraded homology of C tensored with K = S/(x_1..x_n).

    Only entries between basis elements of equal degree survive; the complex
    splits into one block per multidegree.
    """
    blocks: dict[Monomial, list[list[int]]] = {}
    L = C.length
    for i, t in enumerate(C.terms):
        for k, b in enumerate(t):
            blocks.setdefault(b.degree, [[] for _ in range(L + 1)])[i].append(k)
    entries = {}
    for a, keep in blocks.items():
        maps = [[]]
        for i in range(1, L + 1):
            pos = {h: r for r, h in enumerate(keep[i - 1])}
            maps.append([{pos[h]: c for h, c in C.cols[i][g].items() if h in pos} for g in keep[i]])
        V = Strand([len(k) for k in keep], maps, C.field, a)
        for i, d in enumerate(homology_dims(V, check=False)):
            if d:
                entries[(i, a)] = d
    return BettiTable(C.n, entries)


def betti_of_ranks(C: FreeComplex) -> BettiTable:
    """Shifts of C read off directly; the Betti table when C is minimal."""
    entries: Counter = Counter()
    for i, t in enumerate(C.terms):
        for b in t:
            entries[(i, b.degree)] += 1
    return BettiTable(C.n, dict(entries))


def trivial_resolution(n: int, field=None) -> FreeComplex:
    """0 -> S -> 0, the resolution of S/(0)."""
    return FreeComplex(n, [[((), Monomial.one(n))]], field=field)


@dataclass
class IdealInvariants:
    betti: BettiTable
    projdim_quotient: int
    projdim_ideal: int
    reg_quotient: int
    reg_ideal: int
    max_shifts: list[int]  # M_i(I) for i = 0..projdim(I)

    def reg_steps(self) -> list[int]:
        return [m - i for i, m in enumerate(self.max_shifts)]


def invariants_of_ideal(I: MonomialIdeal, resolution: FreeComplex | None = None) -> IdealInvariants:
    """projdim and regularity of I and S/I from a resolution of S/I.

    Uses the minimalized Taylor resolution unless one is supplied. Regularity
    is the max of M_i(I) - i over i >= 0.
    """
    if getattr(I, "is_unit", False) or I.is_zero:
        raise ValueError("invariants need a nonzero proper ideal")
    if resolution is None:
        from .star import taylor_direct
        resolution = taylor_direct(I)
    B = betti_numbers(resolution)
    pd = B.projdim
    M = [B.max_shift(i + 1) for i in range(pd)]
    reg_i = max(m - i for i, m in enumerate(M))
    return IdealInvariants(B, pd, pd - 1, reg_i - 1, reg_i, M)


class ChainMap:
    """Degree-0 map of multigraded complexes.

    ``entries[i]`` maps (target_index, source_index) to (scalar, monomial);
    the monomial times the target degree must equal the source degree.
    """

    def __init__(self, source: FreeComplex, target: FreeComplex, entries: list[dict]):
        _same_setting(source, target)
        self.source = source
        self.target = target
        self.entries = entries

    def image(self, i: int, s: int) -> list:
        return [(t, c, m) for (t, s2), (c, m) in self.entries[i].items() if s2 == s]


def _apply_d(C: FreeComplex, i: int, terms: dict) -> dict:
    """Apply d_i to sum of c * m * e_t given as {(t, m): c}; returns {(h, m'): c'}."""
    K = C.field
    out: dict = {}
    if i < 1:
        return out
    for (t, m), c in terms.items():
        ut = C.terms[i][t].degree
        for h, a in C.cols[i][t].items():
            key = (h, m * quotient(ut, C.terms[i - 1][h].degree))
            out[key] = K.add(out.get(key, K.zero), K.mul(c, a))
    return {k: v for k, v in out.items() if v != 0}


def validate_chain_map(phi: ChainMap) -> Check:
    """Homogeneity of every entry and target_d . phi == phi . source_d, entrywise."""
    S, T, K = phi.source, phi.target, phi.source.field
    by_source = []
    for i in range(len(S.terms)):
        per: dict = {}
        for (t, s), (c, m) in phi.entries[i].items() if i < len(phi.entries) else ():
            if m * T.terms[i][t].degree != S.terms[i][s].degree:
                return Check("chain map", False,
                             f"entry ({S.terms[i][s].label!r} -> {T.terms[i][t].label!r}) in degree {i} "
                             "is not homogeneous", {"kind": "degree", "degree": i})
            per.setdefault(s, {})[(t, m)] = K(c)
        by_source.append(per)
    for i in range(1, len(S.terms)):
        for s in range(len(S.terms[i])):
            lhs = _apply_d(T, i, by_source[i].get(s, {}))
            rhs: dict = {}
            us = S.terms[i][s].degree
            for s2, b in S.cols[i][s].items():
                u = quotient(us, S.terms[i - 1][s2].degree)
                for (t, m), c in by_source[i - 1].get(s2, {}).items():
                    key = (t, u * m)
                    rhs[key] = K.add(rhs.get(key, K.zero), K.mul(b, c))
            rhs = {k: v for k, v in rhs.items() if v != 0}
            if lhs != rhs:
                return Check("chain map", False,
                             f"d.phi != phi.d on {S.terms[i][s].label!r} in degree {i}",
                             {"kind": "commutation", "degree": i, "source": S.terms[i][s].label})
    return Check("chain map", True)
