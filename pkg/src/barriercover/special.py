"""Linear-time solver for equal ranges when every sensor starts on [0, L].

Here the optimum is simply the largest of

* ``x_j + r - 2rj``           (1-based j; left-packed prefix),
* ``L - 2r(n-i) - x_i - r``   (1-based i; right-packed suffix),
* half the maximum sum of consecutive ``z_t = x_{t+1} - x_t - 2r``,

unless the input already covers the barrier.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core import (BarrierError, LineInstance, Movement, SolverInvariantError,
                   int_array)
from .uniform import uniform_greedy

__all__ = ["solve_on_barrier", "max_subarray", "kadane"]


def kadane(values) -> int:
    """Maximum sum of a non-empty run of consecutive values (plain loop)."""
    it = iter(values)
    best = run = next(it)
    for z in it:
        run = z + (run if run > 0 else 0)
        if run > best:
            best = run
    return best


def max_subarray(z: np.ndarray):
    """Vectorised maximum non-empty subarray sum via prefix minima."""
    prefix = np.concatenate([np.zeros(1, dtype=z.dtype), np.cumsum(z)])
    lowest = np.minimum.accumulate(prefix[:-1])
    return (prefix[1:] - lowest).max()


def solve_on_barrier(instance: LineInstance):
    """Optimal ``(lambda_star, Movement)``; all positions must lie in [0, L].

    >>> from barriercover import LineInstance
    >>> lam, _ = solve_on_barrier(LineInstance([1, 2, 6], [1, 1, 1], 6))
    >>> lam
    Fraction(1, 1)
    """
    if not instance.uniform:
        raise BarrierError("sensor ranges are not all equal")
    if not instance.on_barrier:
        raise BarrierError("some sensor starts outside [0, L]; use solve_uniform")
    n, unit = instance.n, instance.unit
    xs, r, L = instance.xs, instance.rs[0], instance.length_scaled
    if L == 0:
        # every sensor sits on the point barrier
        return Fraction(0), Movement._from_scaled(list(xs), unit, 0)
    ys = uniform_greedy(xs, r, L, 0)
    if ys is not None:
        return Fraction(0), Movement._from_scaled(ys, unit, 0)
    x = int_array(xs, (L + 2 * r) * (2 * n + 2))
    two_r = 2 * r
    idx = np.arange(n, dtype=np.int64).astype(x.dtype)
    lam1 = (x - r - two_r * idx).max()
    lam2 = (L - two_r * (n - 1 - idx) - x - r).max()
    best = max(int(lam1), int(lam2))
    if n > 1:
        lam3 = int(max_subarray(x[1:] - x[:-1] - two_r)) // 2
        best = max(best, lam3)
    lam = best
    ys = uniform_greedy(xs, r, L, lam)
    if ys is None:
        raise SolverInvariantError("greedy rejected the computed optimum")
    maxd = max(abs(y - x) for x, y in zip(xs, ys))
    return Fraction(lam, unit), Movement._from_scaled(ys, unit, maxd)
