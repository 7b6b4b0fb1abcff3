from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from barriercover import (LineInstance, candidate_arrays, decide_le,
                          decide_uniform, decompose_groups, preprocess,
                          search_sorted_arrays, solve, solve_uniform,
                          verify_coverage)
from barriercover.oracle import optimum_uniform_enumerate

from conftest import lambdas, line_instances

SMALL = LineInstance([1, 2, 6], [1, 1, 1], 6)


def _real(groups, v):
    return Fraction(v, groups.unit)


def test_decide_examples():
    out = decide_uniform(SMALL, 1)
    assert out.feasible and out.movement.destinations == (1, 3, 5)
    assert not decide_uniform(SMALL, Fraction(1, 2)).feasible
    covering = LineInstance([1, 3, 5], [1, 1, 1], 6)
    assert decide_uniform(covering, 0).movement.destinations == (1, 3, 5)


def test_groups_example():
    g = decompose_groups(SMALL)
    assert (g.first, g.last) == ((0, 2), (1, 2))
    assert [_real(g, v) for v in g.gaps] == [2]
    assert [_real(g, v) for v in g.slacks] == [1, 0]


def test_groups_attached_and_single():
    g = decompose_groups(LineInstance([1, 3, 5, 7], [1] * 4, 8))
    assert g.m == 4 and all(s == 0 for s in g.slacks)
    assert all(v == 0 for v in g.gaps)
    g = decompose_groups(LineInstance([4], [3], 6))
    assert g.m == 1 and g.gaps == ()


def test_candidate_arrays_example():
    arrays = candidate_arrays(SMALL)
    rows = arrays.materialize()
    assert rows[2] == [1, 3, 5]
    assert rows[-1] == [1]
    assert arrays.family(2) == "lambda1"
    assert arrays.family(3) == "lambda2"
    assert arrays.family(arrays.count - 1) == "lambda3"
    assert arrays.count == 2 * 3 + 1


def test_one_group_has_no_third_family():
    arrays = candidate_arrays(LineInstance([1, 2, 3], [1, 1, 1], 6))
    assert arrays.count == 6


def test_search_examples():
    class Lists:
        def __init__(self, rows):
            self.rows = rows
            self.lengths = np.array([len(r) for r in rows])

        def value(self, ids, pos):
            return np.array([self.rows[i][p] for i, p in zip(ids, pos)])

    assert search_sorted_arrays(Lists([[1, 3, 5], [2, 4]]), lambda v: v >= 4) == 4
    assert search_sorted_arrays(Lists([[7, 8, 9]]), lambda v: True) == 7
    with pytest.raises(LookupError):
        search_sorted_arrays(Lists([[1, 2]]), lambda v: False)
    arrays = candidate_arrays(SMALL)
    found = search_sorted_arrays(
        arrays, lambda v: v >= 0 and decide_uniform(SMALL, _real(arrays, v)).feasible)
    assert _real(arrays, found) == 1


@pytest.mark.parametrize("xs, L, r, expected", [
    ([1, 2, 6], 6, 1, 1),
    ([2, 3], 4, 1, 1),
    ([1, 3, 5], 6, 1, 0),
    ([-20, 30], 4, 1, 27),
])
def test_solve_examples(xs, L, r, expected):
    inst = LineInstance(xs, [r] * len(xs), L)
    lam, move = solve_uniform(inst)
    assert lam == expected
    assert verify_coverage(inst, move, lam)


@settings(max_examples=150, deadline=None)
@given(line_instances(max_n=8, uniform=True))
def test_arrays_sorted_and_prefix_identity(inst):
    groups = decompose_groups(inst)
    arrays = candidate_arrays(inst, groups)
    for row in arrays.materialize():
        assert all(a <= b for a, b in zip(row, row[1:]))
    first, last, xs = groups.first, groups.last, inst.xs
    r = inst.rs[0]
    for k in range(groups.m):
        for h in range(k + 1, groups.m):
            i, j = last[k], first[h]
            direct = (xs[j] - xs[i] - 2 * r * (j - i)) // 2
            assert groups.lambda3(k, h) == direct
    # row k of the third family holds lambda3(b_k, a_h) wherever h > k
    ref = arrays.reference_order
    for k in range(groups.m - 1):
        row = arrays.row(2 * inst.n + k)
        for pos, col in enumerate(ref):
            if col + 1 > k:
                assert row[pos] == groups.lambda3(k, col + 1)


@settings(max_examples=150, deadline=None)
@given(line_instances(max_n=10, uniform=True))
def test_agrees_with_enumeration_and_general(inst):
    lam, move = solve_uniform(inst)
    assert lam == optimum_uniform_enumerate(inst)
    assert lam == solve(preprocess(inst))[0]
    assert verify_coverage(inst, move, lam)


@settings(max_examples=150, deadline=None)
@given(line_instances(max_n=10, uniform=True), lambdas)
def test_witness_order_preserving(inst, lam):
    out = decide_uniform(inst, lam)
    assert out.feasible == decide_le(preprocess(inst), lam).feasible
    if out.feasible:
        ys = out.movement.destinations
        assert all(a <= b for a, b in zip(ys, ys[1:]))
        assert verify_coverage(inst, out.movement, lam)

