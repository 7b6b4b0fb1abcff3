"""Linear-time solver for equal-range sensors on a cycle.

Coordinates are unwrapped and doubled (``u_{i+n} = u_i + L``).  With
``z_t = u_{t+1} - u_t - 2r`` the optimum is half the largest sum of at most
``n - 1`` consecutive ``z`` values starting in the first copy, or 0 when no
cyclic gap exceeds ``2r``.  The maximising pair (i, j) is then realised by
moving s_i forward and s_j backward by the optimum, packing the sensors
between them end to end, and covering what is left of the cycle with the
remaining sensors as a line problem.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core import (CycleInstance, Movement, SolverInvariantError,
                   _cyclic_distance, int_array)
from .uniform import uniform_greedy

__all__ = ["solve_cycle", "capped_window_max", "sliding_min"]


def sliding_min(values: np.ndarray, width: int) -> np.ndarray:
    """``out[e] = min(values[max(0, e - width + 1) : e + 1])``.

    Block prefix/suffix minima (van Herk / Gil-Werman), so it stays
    vectorised for object arrays too.
    """
    size = len(values)
    blocks = -(-size // width)
    padded = np.empty(blocks * width, dtype=values.dtype)
    padded[:size] = values
    padded[size:] = values.max()
    grid = padded.reshape(blocks, width)
    forward = np.minimum.accumulate(grid, axis=1).ravel()
    backward = np.minimum.accumulate(grid[:, ::-1], axis=1)[:, ::-1].ravel()
    ends = np.arange(size)
    starts = ends - width + 1
    out = forward[:size].copy()
    inside = starts >= 0
    out[inside] = np.minimum(backward[starts[inside]], forward[ends[inside]])
    return out


def capped_window_max(z: np.ndarray, n: int):
    """Largest sum of ``z[i:j]`` over ``0 <= i < n`` and ``1 <= j - i <= n - 1``.

    ``z`` is the doubled gap sequence of length ``2n - 1``.  Returns
    ``(best, i, j)`` with 0-based doubled indices.
    """
    prefix = np.concatenate([np.zeros(1, dtype=z.dtype), np.cumsum(z)])
    # candidate starts are prefix[0..n-1]; pad the rest so they never win
    starts = prefix[:2 * n - 2].copy()
    starts[n:] = prefix.max() + 1
    low = sliding_min(starts, n - 1)
    gains = prefix[1:2 * n - 1] - low
    j = int(np.argmax(gains)) + 1
    lo = max(0, j - n + 1)
    i = lo + int(np.argmin(starts[lo:j]))
    return gains[j - 1], i, j


def solve_cycle(instance: CycleInstance):
    """Optimal ``(lambda_star, Movement)``; destinations are in ``[0, L)``.

    >>> from barriercover import CycleInstance
    >>> lam, move = solve_cycle(CycleInstance([1, 2, 3, 4], 1, 8))
    >>> lam
    Fraction(3, 2)
    """
    n, unit = instance.n, instance.unit
    L, r = instance.length_scaled, instance.r
    u = instance.unwrapped
    gaps = [u[t + 1] - u[t] for t in range(n - 1)] + [u[0] + L - u[-1]]
    if max(gaps) <= 2 * r:
        return Fraction(0), Movement._from_scaled(list(instance.xs), unit, 0)
    bound = (abs(u[-1]) + 2 * L + 2 * r) * (2 * n + 2)
    doubled = int_array(u, bound)
    doubled = np.concatenate([doubled, doubled + L])
    z = doubled[1:2 * n] - doubled[:2 * n - 1] - 2 * r
    best, i, j = capped_window_max(z, n)
    lam = int(best) // 2

    U = [int(v) for v in doubled]
    ys = [None] * n
    start = U[i] + lam
    for t in range(i, j + 1):
        ys[t % n] = start + 2 * r * (t - i)
    # the rest of the cycle, cut open at the packed block's right end
    origin = ys[j % n] + r
    rest = L - 2 * r * (j - i + 1)
    others = list(range(j + 1, i + n))
    if others:
        xs = [U[t] - origin for t in others]
        if rest > 0:
            placed = uniform_greedy(xs, r, rest, lam)
            if placed is None:
                raise SolverInvariantError("remaining arc could not be covered")
        else:
            placed = xs
        for t, y in zip(others, placed):
            ys[t % n] = y + origin
    elif rest > 0:
        raise SolverInvariantError("no sensors left for the remaining arc")
    ys = [y % L for y in ys]
    maxd = max(_cyclic_distance(y - x, L) for x, y in zip(instance.xs, ys))
    return Fraction(lam, unit), Movement._from_scaled(ys, unit, maxd)
