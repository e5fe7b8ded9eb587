"""The star product F*G of multigraded resolutions and the Taylor resolution.

For g in F_j and e in G_k the element g*e sits in degree j + k with
multidegree lcm(u_g, u_e), and

    d(g*e) = sum_h a_gh (lcm(u_g,u_e)/lcm(u_h,u_e)) h*e
             + (-1)^j sum_f b_ef (lcm(u_g,u_e)/lcm(u_g,u_f)) g*f.

Monomial parts follow from the degrees, so only the scalars are stored.
"""

from __future__ import annotations

import itertools
from functools import reduce

from .complexes import (
    BasisElement,
    ChainMap,
    FreeComplex,
    PairLabel,
    _strand_from_mask,
    _distinct_patterns,
    exactness_grid,
    homology_dims,
    minimalize,
    product_complex,
    tensor_complex,
    trivial_resolution,
    validate_complex,
)
from .field import get_field
from .monomial import (
    Monomial,
    MonomialIdeal,
    UnitIdeal,
    divides,
    gcd,
    lcm,
    lcm_all,
    quotient,
    quotient_shift_ideal,
)
from .results import Check


def star(F: FreeComplex, G: FreeComplex) -> FreeComplex:
    return product_complex(F, G, lcm)


def comparison_map(F: FreeComplex, G: FreeComplex) -> ChainMap:
    """The monomorphism F (x) G -> F*G, f(x)g -> gcd(u_f, u_g) f*g."""
    T = tensor_complex(F, G)
    P = star(F, G)
    one = F.field.one
    entries = []
    for i in range(len(T.terms)):
        # same pair enumeration as product_complex
        ent, k = {}, 0
        for j in range(max(0, i - G.length), min(i, F.length) + 1):
            for g in F.terms[j]:
                for e in G.terms[i - j]:
                    ent[(k, k)] = (one, gcd(g.degree, e.degree))
                    k += 1
        entries.append(ent)
    return ChainMap(T, P, entries)


def iterated_star(Fs: list[FreeComplex]) -> FreeComplex:
    """Left fold ((F1*F2)*F3)*..."""
    if not Fs:
        raise ValueError("iterated_star needs at least one complex")
    return reduce(star, Fs)


def principal_resolution(u: Monomial, field=None) -> FreeComplex:
    """0 -> S(-u) -> S -> 0 with differential u; labels 0 and 1."""
    if u.is_one():
        raise ValueError("principal resolution of the unit ideal")
    n = u.n
    return FreeComplex(n, [[(0, Monomial.one(n))], [(1, u)]], [{(0, 1): 1}], field=field)


def _check_proper(I):
    if getattr(I, "is_unit", False):
        raise ValueError("unit ideal has no resolution here")
    if I.is_zero:
        raise ValueError("zero ideal: use trivial_resolution")


def taylor_direct(I: MonomialIdeal, field=None) -> FreeComplex:
    """Taylor complex: subsets T of G(I) (as sorted index tuples) in degree |T|.

    The entry from T to T minus its k-th element (1-based) is (-1)^(k+1).
    """
    _check_proper(I)
    K = field if field is not None else get_field()
    gens = I.generators
    r, n = len(gens), I.n
    terms, pos = [], []
    for i in range(r + 1):
        subsets = list(itertools.combinations(range(r), i))
        terms.append([BasisElement(T, lcm_all((gens[t] for t in T), n)) for T in subsets])
        pos.append({T: k for k, T in enumerate(subsets)})
    cols = [[]]
    for i in range(1, r + 1):
        col = []
        for b in terms[i]:
            T = b.label
            col.append({pos[i - 1][T[:k] + T[k + 1:]]: (K.one if k % 2 == 0 else K.neg(K.one))
                        for k in range(len(T))})
        cols.append(col)
    return FreeComplex.from_columns(n, terms, cols, K)


def taylor_by_star(I: MonomialIdeal, field=None) -> FreeComplex:
    """Iterated star of the principal resolutions of the generators, in order."""
    _check_proper(I)
    return iterated_star([principal_resolution(u, field) for u in I.generators])


def resolution(I: MonomialIdeal, minimal: bool = True, field=None) -> FreeComplex:
    """Resolution of S/I: minimalized or raw Taylor; 0 -> S -> 0 for I = 0."""
    if getattr(I, "is_unit", False):
        raise ValueError("unit ideal has no resolution here")
    if I.is_zero:
        return trivial_resolution(I.n, field)
    T = taylor_direct(I, field)
    return minimalize(T) if minimal else T


def flatten_label(label):
    """((a, b), c) -> (a, b, c); used to compare differently associated stars."""
    if isinstance(label, PairLabel):
        return flatten_label(label.left) + flatten_label(label.right)
    return (label,)


def bits_to_subset(bits) -> tuple[int, ...]:
    return tuple(k for k, b in enumerate(bits) if b == 1)


def compare_complexes(A: FreeComplex, B: FreeComplex, relabel_a=None, relabel_b=None) -> Check:
    """Compare bases, degrees and differentials under label maps.

    If some differentials agree only up to a global sign, the comparison is
    retried with the diagonal sign change on homological degrees and the
    matching convention is recorded in ``data['convention']``.
    """
    ra = relabel_a or (lambda x: x)
    rb = relabel_b or (lambda x: x)
    if A.ranks() != B.ranks():
        return Check("isomorphic", False, f"ranks {A.ranks()} vs {B.ranks()}")
    for i in range(len(A.terms)):
        da = {ra(b.label): b.degree for b in A.terms[i]}
        db = {rb(b.label): b.degree for b in B.terms[i]}
        if len(da) != len(A.terms[i]) or len(db) != len(B.terms[i]):
            return Check("isomorphic", False, f"relabeling not injective in degree {i}")
        if da != db:
            return Check("isomorphic", False, f"bases or degrees differ in degree {i}")
    K = A.field
    signs = []
    for i in range(1, len(A.terms)):
        ma = {(ra(h), ra(g)): c for (h, g), c in A.matrix(i).items()}
        mb = {(rb(h), rb(g)): c for (h, g), c in B.matrix(i).items()}
        if ma == mb:
            signs.append(1)
        elif ma == {k: K.neg(v) for k, v in mb.items()}:
            signs.append(-1)
        else:
            return Check("isomorphic", False, f"differential d_{i} differs")
    convention = "identical" if all(s == 1 for s in signs) else "degree-sign"
    return Check("isomorphic", True, convention, {"convention": convention, "signs": signs})


def taylor_equivalence(I: MonomialIdeal, field=None) -> Check:
    """Iterated star of principal resolutions against the direct Taylor complex."""
    A = taylor_by_star(I, field)
    B = taylor_direct(I, field)
    res = compare_complexes(A, B, relabel_a=lambda l: bits_to_subset(flatten_label(l)))
    res.name = "taylor equivalence"
    return res


def associativity(F: FreeComplex, G: FreeComplex, H: FreeComplex) -> Check:
    left = star(star(F, G), H)
    right = star(F, star(G, H))
    res = compare_complexes(left, right, flatten_label, flatten_label)
    res.name = "associativity"
    return res


def shifted_free(u: Monomial, field=None) -> FreeComplex:
    """S(-u) concentrated in homological degree 0."""
    return FreeComplex(u.n, [[("e", u)]], field=field)


def verify_factor_complex(F: FreeComplex, I: MonomialIdeal, u: Monomial) -> Check:
    """star(F, S(-u)) should resolve (S/I_u)(-u) with I_u = quotient_shift_ideal(I, u).

    Strand at a: H_0 is K iff u | a and a/u is not in I_u; higher homology vanishes.
    """
    C = star(F, shifted_free(u, F.field))
    Iu = quotient_shift_ideal(I, u)
    vc = validate_complex(C)
    if not vc:
        return Check("factor complex", False, vc.detail)
    grid = exactness_grid(C, [u])
    for p, keep in _distinct_patterns(C, grid):
        a = Monomial(p)
        H = homology_dims(_strand_from_mask(C, keep), check=False)
        if divides(u, a) and not Iu.contains(quotient(a, u)):
            want = 1
        else:
            want = 0
        if H[0] != want:
            return Check("factor complex", False, f"H_0 at {p} is {H[0]}, expected {want}",
                         {"multidegree": list(p)})
        if any(H[1:]):
            return Check("factor complex", False, f"higher homology at {p}: {H}",
                         {"multidegree": list(p)})
    what = "S" if isinstance(Iu, UnitIdeal) else str(Iu)
    return Check("factor complex", True, f"I_u = {what}")
