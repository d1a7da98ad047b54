"""Exact rank of sparse matrices over Q or F_p by pivoted Gaussian elimination."""

from __future__ import annotations

from .scalar import FieldSpec


def sparse_rank(rows, field: FieldSpec) -> int:
    """Rank of a matrix given as a list of ``{column_key: raw_value}`` rows.

    Column keys must be mutually comparable; pivots are chosen as the smallest
    column key of each reduced row so the elimination is deterministic.
    """
    pivots = {}
    rank = 0
    for row in rows:
        r = {k: v for k, v in row.items() if v}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                inv = field.inv(r[col])
                pivots[col] = {k: field.mul(v, inv) for k, v in r.items()}
                rank += 1
                break
            factor = r[col]
            for k, v in piv.items():
                nv = field.sub(r.get(k, field.zero), field.mul(factor, v))
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


def column_keys(rows) -> list:
    keys = set()
    for row in rows:
        keys.update(k for k, v in row.items() if v)
    return sorted(keys)
