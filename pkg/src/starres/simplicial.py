"""Simplicial complexes on vertices 0..n-1, reduced homology, Stanley-Reisner ideals.

Vertex v corresponds to variable x_{v+1}. The void complex (no faces at all)
has facets ``()``; the empty complex {emptyset} has the single facet
``frozenset()``.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .field import get_field
from .linalg import rank
from .monomial import DimensionError, Monomial, MonomialIdeal
from .results import Check

MAX_VERTICES = 12


class SimplicialComplex:
    __slots__ = ("n", "facets")

    def __init__(self, n: int, faces: Iterable[Iterable[int]]):
        fs = set()
        for f in faces:
            f = frozenset(int(v) for v in f)
            if any(not 0 <= v < n for v in f):
                raise ValueError(f"face {sorted(f)} outside vertex set of size {n}")
            fs.add(f)
        self.n = n
        self.facets = tuple(sorted((f for f in fs if not any(f < g for g in fs)),
                                   key=lambda f: (len(f), sorted(f))))

    @classmethod
    def simplex(cls, vertices: Iterable[int], n: int) -> SimplicialComplex:
        return cls(n, [vertices])

    @classmethod
    def boundary_of_simplex(cls, vertices: Iterable[int], n: int) -> SimplicialComplex:
        vs = list(vertices)
        return cls(n, itertools.combinations(vs, len(vs) - 1))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """-1 for {emptyset}; None-like -2 for the void complex."""
        return max((len(f) for f in self.facets), default=-1) - 1

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and (self.n, self.facets) == (other.n, other.facets)

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        return f"SimplicialComplex({self.n}, {[sorted(f) for f in self.facets]})"

    def faces(self, size: int | None = None) -> list[tuple[int, ...]]:
        """All faces (as sorted tuples), optionally only those with ``size`` vertices."""
        out = set()
        for f in self.facets:
            fl = sorted(f)
            sizes = range(len(fl) + 1) if size is None else ([size] if size <= len(fl) else [])
            for k in sizes:
                out.update(itertools.combinations(fl, k))
        return sorted(out, key=lambda t: (len(t), t))


def restriction(sigma: SimplicialComplex, U: Iterable[int]) -> SimplicialComplex:
    U = frozenset(U)
    if any(not 0 <= v < sigma.n for v in U):
        raise ValueError("restriction set outside the vertex set")
    return SimplicialComplex(sigma.n, [f & U for f in sigma.facets])


def intersection(delta: SimplicialComplex, gamma: SimplicialComplex) -> SimplicialComplex:
    if delta.n != gamma.n:
        raise DimensionError(f"vertex sets of size {delta.n} and {gamma.n}")
    return SimplicialComplex(delta.n, [f & g for f in delta.facets for g in gamma.facets])


def reduced_homology_dims(sigma: SimplicialComplex, field=None) -> list[int]:
    """[h~_{-1}, h~_0, ..., h~_{dim}] via the augmented chain complex.

    Empty list for the void complex.
    """
    if sigma.is_void:
        return []
    K = field if field is not None else get_field()
    top = sigma.dim
    chains = [sigma.faces(k + 1) for k in range(-1, top + 1)]  # chains[k+1] = k-faces
    ranks = [0] * (len(chains) + 1)
    for j in range(1, len(chains)):
        pos = {f: r for r, f in enumerate(chains[j - 1])}
        cols = []
        for f in chains[j]:
            col = {}
            for t in range(len(f)):
                col[pos[f[:t] + f[t + 1:]]] = K.one if t % 2 == 0 else K.neg(K.one)
            cols.append(col)
        ranks[j] = rank(cols, len(chains[j - 1]), K)
    return [len(chains[j]) - ranks[j] - ranks[j + 1] for j in range(len(chains))]


def reduced_betti(sigma: SimplicialComplex, i: int, field=None) -> int:
    """h~_i(sigma), zero outside the computed range."""
    dims = reduced_homology_dims(sigma, field)
    return dims[i + 1] if 0 <= i + 1 < len(dims) else 0


def reduced_euler_characteristic(sigma: SimplicialComplex) -> int:
    if sigma.is_void:
        return 0
    return sum((-1) ** (len(f) - 1) for f in sigma.faces())


def stanley_reisner_ideal(sigma: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal of the minimal non-faces."""
    if sigma.is_void:
        raise ValueError("the void complex has the unit ideal")
    n = sigma.n
    gens = []
    for k in range(1, n + 1):
        for S in itertools.combinations(range(n), k):
            if S in sigma:
                continue
            if all(S[:t] + S[t + 1:] in sigma for t in range(k)):
                gens.append(Monomial(tuple(1 if v in S else 0 for v in range(n))))
    return MonomialIdeal(n, gens)


def _check_size(n, limit):
    if n > limit:
        raise ValueError(f"{n} vertices exceeds the subset-enumeration limit {limit}")


def hochster_table(sigma: SimplicialComplex, field=None, limit: int = MAX_VERTICES) -> dict:
    """{i: sum over W of h~_{|W|-i-1}(sigma_W)} for i = 0..n, one pass over subsets."""
    n = sigma.n
    _check_size(n, limit)
    out = {i: 0 for i in range(n + 1)}
    for k in range(n + 1):
        for W in itertools.combinations(range(n), k):
            dims = reduced_homology_dims(restriction(sigma, W), field)
            for j, h in enumerate(dims):
                i = k - (j - 1) - 1
                if h and 0 <= i <= n:
                    out[i] += h
    return out


def hochster_rhs(sigma: SimplicialComplex, i: int, field=None, limit: int = MAX_VERTICES) -> int:
    return hochster_table(sigma, field, limit).get(i, 0)


def check_corollary_simplicial(delta: SimplicialComplex, gamma: SimplicialComplex,
                               field=None, limit: int = MAX_VERTICES) -> Check:
    """Hochster sums of the intersection against the convolution of both sums."""
    common = intersection(delta, gamma)
    n = delta.n
    L = hochster_table(common, field, limit)
    A = hochster_table(delta, field, limit)
    B = hochster_table(gamma, field, limit)
    rows = []
    ok = True
    for i in range(n + 1):
        rhs = sum(A[j] * B[i - j] for j in range(i + 1))
        rows.append({"i": i, "lhs": L[i], "rhs": rhs})
        ok &= L[i] <= rhs
    detail = " ".join(f"i={r['i']}:{r['lhs']}<={r['rhs']}" for r in rows)
    return Check("simplicial convolution", ok, detail, {"rows": rows})
