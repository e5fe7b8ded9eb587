"""Input files and output formatting.

Ideal file (JSON)::

    {"variables": 2, "generators": [[2, 0], [1, 1]], "names": ["x", "y"]}

Simplicial complex file (JSON, vertices 1-based)::

    {"vertices": 3, "facets": [[1, 2], [2, 3]]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .complexes import BettiTable, FreeComplex, PairLabel
from .monomial import Monomial, format_monomial, minimal_generators
from .simplicial import SimplicialComplex

SCHEMA_VERSION = 1


class InputError(ValueError):
    pass


def _read_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    return doc


def parse_ideal(doc: dict):
    """Returns (ideal, names). Non-minimal generator lists are minimalized."""
    try:
        n = doc["variables"]
        gens = doc["generators"]
    except KeyError as exc:
        raise InputError(f"ideal document missing field {exc}") from exc
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError("'variables' must be a positive integer")
    if not isinstance(gens, list):
        raise InputError("'generators' must be a list of exponent vectors")
    ms = []
    for g in gens:
        if not isinstance(g, list) or len(g) != n or not all(isinstance(e, int) and e >= 0 for e in g):
            raise InputError(f"bad generator {g!r}: need {n} non-negative integers")
        ms.append(Monomial(tuple(g)))
    if any(m.is_one() for m in ms):
        raise InputError("a generator is 1: the unit ideal is not supported")
    names = doc.get("names")
    if names is not None and (not isinstance(names, list) or len(names) != n):
        raise InputError(f"'names' must list {n} variable names")
    return minimal_generators(ms, n), names


def load_ideal(path):
    return parse_ideal(_read_json(path))


def ideal_to_dict(I, names=None) -> dict:
    doc = {"variables": I.n, "generators": [list(g.exps) for g in I.generators]}
    if names:
        doc["names"] = list(names)
    return doc


def parse_simplicial(doc: dict) -> SimplicialComplex:
    try:
        n = doc["vertices"]
        facets = doc["facets"]
    except KeyError as exc:
        raise InputError(f"complex document missing field {exc}") from exc
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError("'vertices' must be a non-negative integer")
    out = []
    for f in facets:
        if not isinstance(f, list) or not all(isinstance(v, int) and 1 <= v <= n for v in f):
            raise InputError(f"bad facet {f!r}: vertices are 1..{n}")
        out.append([v - 1 for v in f])
    return SimplicialComplex(n, out)


def load_simplicial(path) -> SimplicialComplex:
    return parse_simplicial(_read_json(path))


def simplicial_to_dict(sigma: SimplicialComplex) -> dict:
    return {"vertices": sigma.n, "facets": [sorted(v + 1 for v in f) for f in sigma.facets]}


def label_str(label) -> str:
    if isinstance(label, PairLabel):
        return f"{label_str(label.left)}*{label_str(label.right)}"
    if isinstance(label, tuple):
        return "{" + ",".join(str(t + 1) for t in label) + "}"
    return str(label)


def scalar_str(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def betti_to_dict(B: BettiTable) -> dict:
    return {
        "totals": list(B.totals()),
        "graded": sorted([i, j, v] for (i, j), v in B.graded().items()),
        "multigraded": sorted([i, list(a.exps), v] for (i, a), v in B.entries.items()),
    }


def complex_to_dict(C: FreeComplex) -> dict:
    terms = [[{"label": label_str(b.label), "degree": list(b.degree.exps)} for b in t] for t in C.terms]
    diffs = []
    for i in range(1, C.length + 1):
        diffs.append(sorted([h, g, scalar_str(c)] for h, g, c in C.entries(i)))
    return {"variables": C.n, "field": C.field.name, "ranks": list(C.ranks()),
            "terms": terms, "differentials": diffs}


def format_betti_table(B: BettiTable) -> str:
    """Rows: homological degree i. Columns: total degree j. Entries beta_{i,j}."""
    graded = B.graded()
    if not graded:
        return "(zero table)"
    js = sorted({j for _, j in graded})
    js = list(range(min(js), max(js) + 1))
    width = max(3, *(len(str(v)) + 1 for v in graded.values()))
    head = "i\\j".rjust(4) + "".join(str(j).rjust(width) for j in js)
    lines = [head]
    for i in range(B.projdim + 1):
        cells = [str(graded[(i, j)]) if graded.get((i, j)) else "." for j in js]
        lines.append(str(i).rjust(4) + "".join(c.rjust(width) for c in cells) + f"   | {B.total(i)}")
    return "\n".join(lines)


def format_ideal(I, names=None) -> str:
    if I.is_zero:
        return "(0)"
    return "(" + ", ".join(format_monomial(g, names) for g in I.generators) + ")"


def dumps(doc: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION, **doc}
    return json.dumps(doc, sort_keys=True, indent=2)
