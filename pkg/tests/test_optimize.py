from fractions import Fraction

import pytest
from hypothesis import given, settings

from barriercover import (LineInstance, SolverInvariantError, decide_eq,
                          decide_le, preprocess, solve, verify_coverage)
from barriercover.optimize import (AffineFn, SearchInterval, initial_interval,
                                   locate, step_advance, step_events_S1,
                                   step_events_S2)
from barriercover.oracle import optimum_bisect

from conftest import line_instances

EXAMPLE = LineInstance([1, 5], [1, 2], 6)


@pytest.mark.parametrize("xs, rs, L, expected", [
    ([1, 5], [1, 2], 6, 1),
    ([2, 3], [1, 1], 4, 1),
    ([1], [1], 2, 0),
    ([-3, 10], [1, 1], 4, 7),
    ([3, 7], [1, 5], 0, 2),
])
def test_examples(xs, rs, L, expected):
    inst = LineInstance(xs, rs, L)
    lam, move = solve(preprocess(inst))
    assert lam == expected
    assert verify_coverage(inst, move, lam)


def test_affine():
    f = AffineFn(1, Fraction(1, 2))
    assert f(Fraction(3, 2)) == 2


def test_slope_one_freezes_type_one_events():
    pre = preprocess(EXAMPLE)
    iv = initial_interval(pre)
    iv, hit = step_advance(pre, iv, 0, "I")
    assert hit is None and iv.slope == 1
    assert step_events_S1(pre, iv) == [iv.lo, iv.hi]


def test_events_after_type_two_first_step():
    pre = preprocess(EXAMPLE)
    iv, hit = step_advance(pre, initial_interval(pre), 0, "II")
    assert hit is None
    assert iv.slope == 0 and iv.frontier(5) == 2
    assert iv.critical == (0,) and iv.kinds == ("II",)
    # both type I events (2 - 7 and 2 - 3) are negative
    assert step_events_S1(pre, iv) == [iv.lo, iv.hi]
    # sensor 2 joins the type II set once its shifted left end 3 + lam
    # is within 2 lam of the frontier
    assert Fraction(1) in step_events_S2(pre, iv)


def test_no_unused_sensors_no_events():
    pre = preprocess(LineInstance([1], [1], 1))
    iv = SearchInterval(0, 8, 0, 0, 4, critical=(0,), kinds=("II",))
    assert step_events_S1(pre, iv) == [0, 2]
    assert step_events_S2(pre, iv) == [0, 2]


def test_locate_examples():
    pre = preprocess(EXAMPLE)
    assert locate([Fraction(0), Fraction(1), Fraction(5)], pre) == \
        ((0, 1), 1)
    assert locate([Fraction(0), Fraction(2)], pre) == ((0, 2), None)


def test_advance_below_barrier_keeps_interval():
    pre = preprocess(EXAMPLE)
    iv = initial_interval(pre)
    new, hit = step_advance(pre, iv, 1, "II")
    # frontier 4 is still short of 6
    assert hit is None
    assert (new.lo, new.hi) == (iv.lo, iv.hi)
    assert new.frontier(0) == 4


def test_advance_flat_frontier_at_barrier_is_an_error():
    pre = preprocess(EXAMPLE)
    iv, _ = step_advance(pre, initial_interval(pre), 0, "II")
    # a slope-0 frontier of exactly 6 would cover for every lam in the
    # interval, contradicting lo < lambda*
    with pytest.raises(SolverInvariantError):
        step_advance(pre, iv, 1, "II")


@settings(max_examples=80, deadline=None)
@given(line_instances())
def test_matches_bisection(inst):
    pre = preprocess(inst)
    lam, move = solve(pre)
    assert abs(lam - optimum_bisect(inst)) <= Fraction(1, 2 ** 39)
    assert decide_eq(pre, lam)
    assert verify_coverage(inst, move, lam)
    if lam > 0:
        assert not decide_le(pre, lam - Fraction(1, 2 ** 40)).feasible
