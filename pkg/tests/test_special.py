from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from barriercover import (BarrierError, LineInstance, solve_on_barrier,
                          solve_uniform, verify_coverage)
from barriercover.special import kadane, max_subarray

from conftest import line_instances


def explicit_optimum(inst):
    """max(0, largest value of the three families), enumerated directly."""
    xs, r, L, n = inst.positions, inst.ranges[0], inst.length, inst.n
    values = [Fraction(0)]
    values += [xs[j] + r - 2 * r * (j + 1) for j in range(n)]
    values += [L - 2 * r * (n - i - 1) - xs[i] - r for i in range(n)]
    values += [(xs[j] - xs[i] - 2 * r * (j - i)) / 2
               for i in range(n) for j in range(i + 1, n)]
    return max(values)


@pytest.mark.parametrize("xs, L, expected", [
    ([2, 3], 4, 1),
    ([1, 2, 6], 6, 1),
    ([1, 3, 5], 6, 0),
    (["1/2", "1/2"], 1, 0),
])
def test_examples(xs, L, expected):
    inst = LineInstance(xs, [1] * len(xs), L)
    lam, move = solve_on_barrier(inst)
    assert lam == expected
    assert verify_coverage(inst, move, lam)


def test_zero_length_barrier():
    lam, _ = solve_on_barrier(LineInstance([0, 0], [1, 1], 0))
    assert lam == 0


def test_rejects_outside_or_mixed():
    with pytest.raises(BarrierError):
        solve_on_barrier(LineInstance([-1, 2], [1, 1], 2))
    with pytest.raises(BarrierError):
        solve_on_barrier(LineInstance([0, 2], [1, 2], 2))


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=30))
def test_kadane_matches_brute_force(z):
    brute = max(sum(z[i:j]) for i in range(len(z)) for j in range(i + 1, len(z) + 1))
    assert kadane(z) == brute
    assert max_subarray(np.array(z, dtype=np.int64)) == brute


def test_all_negative_gaps_pick_the_best_pair():
    assert kadane([-5, -2, -7]) == -2


@settings(max_examples=200, deadline=None)
@given(line_instances(max_n=12, uniform=True, inside=True))
def test_agrees_with_uniform_and_enumeration(inst):
    lam, move = solve_on_barrier(inst)
    assert lam == solve_uniform(inst)[0]
    assert lam == explicit_optimum(inst)
    assert verify_coverage(inst, move, lam)
