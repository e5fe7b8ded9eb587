"""Exact rank of sparse matrices over the active coefficient field.

Matrices are column-sparse: a list of ``{row_index: coefficient}`` dicts.
Over the rationals the elimination is fraction-free on Python integers;
over F_p the matrix is densified and handed to the compiled kernel.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

from . import _kernels
from .field import QQ


def _integer_vector(col: dict) -> dict:
    den = 1
    for c in col.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    out = {}
    for k, c in col.items():
        v = int(c * den) if den != 1 else int(c)
        if v:
            out[k] = v
    return out


def _rank_integer(vectors: list[dict]) -> int:
    pivots: dict[int, dict] = {}
    for vec in vectors:
        row = dict(vec)
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = row
                break
            a, b = prow[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {}
            for k, v in row.items():
                new[k] = v * a
            for k, v in prow.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            if new:
                cg = 0
                for v in new.values():
                    cg = gcd(cg, v)
                    if cg == 1:
                        break
                if cg > 1:
                    new = {k: v // cg for k, v in new.items()}
            row = new
    return len(pivots)


def rank(columns: list[dict], nrows: int, field=QQ) -> int:
    """Rank of the nrows x len(columns) matrix given column by column."""
    cols = [c for c in columns if c]
    if not cols or nrows == 0:
        return 0
    if field.characteristic == 0:
        return _rank_integer([_integer_vector(c) for c in cols])
    A = np.zeros((len(cols), nrows), dtype=np.int64)
    for j, col in enumerate(cols):
        for i, c in col.items():
            A[j, i] = c
    return _kernels.rank_mod_p(A, field.characteristic)


def compose_is_zero(d_low: list[dict], d_high: list[dict], field=QQ) -> bool:
    """Check d_low @ d_high == 0 for column-sparse matrices."""
    for col in d_high:
        acc: dict = {}
        for k, c in col.items():
            for r, a in d_low[k].items():
                acc[r] = field.add(acc.get(r, field.zero), field.mul(a, c))
        if any(v != 0 for v in acc.values()):
            return False
    return True
