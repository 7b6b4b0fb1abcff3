from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from barriercover import CycleInstance, solve_cycle, verify_cycle_coverage
from barriercover.cycle import capped_window_max, sliding_min
from barriercover.oracle import cycle_candidates, feasible_cycle_exhaustive
from barriercover.special import kadane

from conftest import cycle_instances


def test_square_example():
    c = CycleInstance([1, 2, 3, 4], 1, 8)
    lam, move = solve_cycle(c)
    assert lam == Fraction(3, 2)
    assert verify_cycle_coverage(c, move, lam)
    assert sorted(move.destinations) == [Fraction(3, 2), Fraction(7, 2),
                                         Fraction(11, 2), Fraction(15, 2)]


def test_gap_sequence_example():
    u = np.array([1, 2, 3, 4, 9, 10, 11, 12])
    z = u[1:] - u[:-1] - 2
    assert z.tolist() == [-1, -1, -1, 3, -1, -1, -1]
    assert capped_window_max(z, 4)[0] == 3


def test_covering_input():
    lam, move = solve_cycle(CycleInstance([1, 3], 1, 4))
    assert lam == 0 and move.destinations == (1, 3)


def test_single_cluster_at_full_length():
    c = CycleInstance([0, 1, 2], 2, 12)
    lam, move = solve_cycle(c)
    assert lam == max(cycle_candidates(c))
    assert verify_cycle_coverage(c, move, lam)


def test_unsorted_start_is_rotated():
    # clockwise order starting past the origin
    c = CycleInstance([5, 6, 7, 0], 1, 8)
    lam, move = solve_cycle(c)
    assert lam == Fraction(3, 2)
    assert verify_cycle_coverage(c, move, lam)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=40), st.integers(1, 10))
def test_sliding_min_brute(values, width):
    arr = np.array(values, dtype=np.int64)
    got = sliding_min(arr, width)
    want = [min(values[max(0, e - width + 1):e + 1]) for e in range(len(values))]
    assert got.tolist() == want


@given(st.integers(2, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(-9, 9), min_size=n, max_size=n))))
def test_capped_window_brute(case):
    n, head = case
    z = np.array(head + head[:-1], dtype=np.int64)
    best, i, j = capped_window_max(z, n)
    brute = max(sum(z[a:b]) for a in range(n) for b in range(a + 1, a + n))
    assert best == brute == z[i:j].sum()
    assert 0 <= i < n and 1 <= j - i <= n - 1


@settings(max_examples=150, deadline=None)
@given(cycle_instances(max_n=10))
def test_cap_never_binds_when_coverable(inst):
    # full turns sum to L - 2nr <= 0, so long windows never help
    u = [Fraction(v, inst.unit) for v in inst.unwrapped]
    u = u + [v + inst.length for v in u]
    r = inst.sensor_range
    z = [u[t + 1] - u[t] - 2 * r for t in range(2 * inst.n - 1)]
    if inst.n > 1:
        zi = np.array([int(v * inst.unit) for v in z], dtype=np.int64)
        assert capped_window_max(zi, inst.n)[0] == kadane(zi.tolist())


@settings(max_examples=150, deadline=None)
@given(cycle_instances(max_n=12))
def test_matches_candidates(inst):
    lam, move = solve_cycle(inst)
    assert lam == max([Fraction(0)] + cycle_candidates(inst))
    assert verify_cycle_coverage(inst, move, lam)
    assert all(0 <= y < inst.length for y in move.destinations)


@settings(max_examples=60, deadline=None)
@given(cycle_instances(max_n=5))
def test_minimal_by_exhaustive_oracle(inst):
    lam, _ = solve_cycle(inst)
    assert feasible_cycle_exhaustive(inst, lam)
    if lam > 0:
        assert not feasible_cycle_exhaustive(inst, lam - Fraction(1, 2 ** 40))
