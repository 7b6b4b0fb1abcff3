from fractions import Fraction

import pytest

from barriercover import BarrierError, CycleInstance, LineInstance
from barriercover.oracle import (feasible_cycle_exhaustive, feasible_exhaustive,
                                 optimum_bisect, optimum_cycle_bisect,
                                 optimum_uniform_enumerate)

EXAMPLE = LineInstance([1, 5], [1, 2], 6)
TOL = Fraction(1, 2 ** 40)


def test_exhaustive_examples():
    assert feasible_exhaustive(EXAMPLE, 1)
    assert not feasible_exhaustive(EXAMPLE, Fraction(3, 4))
    assert feasible_exhaustive(LineInstance([1, 9], [1, 1], 0), 0)


def test_exhaustive_size_limit():
    big = LineInstance(list(range(9)), [1] * 9, 4)
    with pytest.raises(BarrierError):
        feasible_exhaustive(big, 1)


def test_bisect_examples():
    assert abs(optimum_bisect(EXAMPLE) - 1) <= TOL
    assert optimum_bisect(LineInstance([1, 3], [1, 1], 4)) == 0
    assert abs(optimum_bisect(LineInstance([2, 3], [1, 1], 4)) - 1) <= TOL


def test_enumerate_examples():
    assert optimum_uniform_enumerate(LineInstance([1, 2, 6], [1] * 3, 6)) == 1
    assert optimum_uniform_enumerate(LineInstance([2, 3], [1, 1], 4)) == 1
    assert optimum_uniform_enumerate(LineInstance([1, 3], [1, 1], 4)) == 0


def test_cycle_oracles():
    c = CycleInstance([1, 2, 3, 4], 1, 8)
    assert feasible_cycle_exhaustive(c, Fraction(3, 2))
    assert not feasible_cycle_exhaustive(c, Fraction(7, 5))
    assert abs(optimum_cycle_bisect(c) - Fraction(3, 2)) <= TOL
