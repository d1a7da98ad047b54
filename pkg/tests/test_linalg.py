import random
from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from lieschur.linalg import column_keys, sparse_rank
from lieschur.scalar import FieldSpec


def _dense(rows, keys):
    return [[r.get(k, 0) for k in keys] for r in rows]


def _oracle(rows, field):
    keys = column_keys(rows)
    if not rows or not keys:
        return 0
    dom = GF(field.p) if field.p else QQ
    dense = [[dom(int(v)) if field.p else dom(v.numerator, v.denominator) for v in row]
             for row in _dense(rows, keys)]
    return DomainMatrix(dense, (len(rows), len(keys)), dom).rank()


def test_small_examples():
    Q = FieldSpec(0)
    assert sparse_rank([], Q) == 0
    assert sparse_rank([{}, {}], Q) == 0
    assert sparse_rank([{"a": Fraction(1)}, {"a": Fraction(2)}], Q) == 1
    assert sparse_rank([{"a": 1, "b": 1}, {"a": 1, "b": 1}], FieldSpec(2)) == 1
    assert sparse_rank([{"a": 1, "b": 1}, {"b": 1}], FieldSpec(2)) == 2
    assert column_keys([{"b": 1}, {"a": 1}]) == ["a", "b"]


def test_identity_matches_sympy():
    Q = FieldSpec(0)
    rows = [{(i,): Fraction(1)} for i in range(6)]
    assert sparse_rank(rows, Q) == sympy.eye(6).rank() == 6


@settings(max_examples=120, deadline=None)
@given(st.sampled_from([0, 2, 3, 7]), st.integers(0, 2**32), st.integers(1, 7),
       st.integers(1, 7))
def test_rank_matches_sympy(p, seed, nrows, ncols):
    field = FieldSpec(p)
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        row = {}
        for c in range(ncols):
            if rng.random() < 0.5:
                v = field.coerce(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if not p
                                 else rng.randint(0, p - 1))
                if v:
                    row[c] = v
        rows.append(row)
    if rng.random() < 0.3 and rows:
        # force a dependent row
        a, b = rng.choice(rows), rng.choice(rows)
        rows.append({k: field.add(a.get(k, 0), b.get(k, 0)) for k in set(a) | set(b)})
        rows[-1] = {k: v for k, v in rows[-1].items() if v}
    assert sparse_rank(rows, field) == _oracle(rows, field)
