"""Deliberately naive reference solvers for testing.

None of these use the solver modules' search logic.

``feasible_exhaustive`` tries every ordered subset of sensors.  For a fixed
order, placing each sensor as far right as possible while leaving no gap
maximises the covered prefix, so trying all orders decides feasibility
exactly.  Subsets reaching a frontier no larger than one already seen for
the same subset are pruned, which changes the running time but not the
answer.

``feasible_cycle_exhaustive`` does the same for the cycle: pick the cover
order (up to rotation), the lap of each sensor, and the smallest feasible
position of the first sensor; the first sensor's left end must then be
reached again after one lap.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .core import BarrierError, CycleInstance, LineInstance, as_rational

__all__ = ["feasible_exhaustive", "optimum_bisect", "optimum_uniform_enumerate",
           "feasible_cycle_exhaustive", "optimum_cycle_bisect",
           "cycle_candidates", "lambda_upper_bound"]

MAX_EXHAUSTIVE = 8


def _exact_inputs(instance: LineInstance):
    return (list(instance.positions), list(instance.ranges), instance.length)


def feasible_exhaustive(instance: LineInstance, lam) -> bool:
    """Can ``[0, L]`` be covered with every sensor moving at most ``lam``?

    >>> from barriercover import LineInstance
    >>> inst = LineInstance([1, 5], [1, 2], 6)
    >>> feasible_exhaustive(inst, 1), feasible_exhaustive(inst, Fraction(3, 4))
    (True, False)
    """
    if instance.n > MAX_EXHAUSTIVE:
        raise BarrierError(f"exhaustive oracle is limited to {MAX_EXHAUSTIVE} sensors")
    lam = as_rational(lam)
    if lam < 0:
        return False
    xs, rs, L = _exact_inputs(instance)
    n = len(xs)
    best_seen = {}

    def grow(mask, frontier):
        for i in range(n):
            if mask >> i & 1:
                continue
            y = min(xs[i] + lam, frontier + rs[i])
            if y < xs[i] - lam or y + rs[i] < frontier:
                continue
            f = max(frontier, y + rs[i])
            if f >= L:
                return True
            if f == frontier and mask:
                continue
            key = mask | 1 << i
            if best_seen.get(key, None) is not None and best_seen[key] >= f:
                continue
            best_seen[key] = f
            if grow(key, f):
                return True
        return False

    return grow(0, Fraction(0))


def lambda_upper_bound(instance: LineInstance) -> Fraction:
    """A displacement at which every valid instance is coverable."""
    xs, rs, L = _exact_inputs(instance)
    return L + abs(xs[0]) + abs(xs[-1]) + max(rs) + 1


def _bisect(feasible, lo: Fraction, hi: Fraction, tolerance) -> Fraction:
    tolerance = as_rational(tolerance)
    if tolerance <= 0:
        raise BarrierError("tolerance must be positive")
    if feasible(lo):
        return lo
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def optimum_bisect(instance: LineInstance, tolerance=Fraction(1, 2 ** 40)) -> Fraction:
    """Optimum to within ``tolerance`` by bisection on the exhaustive oracle.
    Returns exactly 0 when the input already covers the barrier."""
    return _bisect(lambda v: feasible_exhaustive(instance, v), Fraction(0),
                   lambda_upper_bound(instance), tolerance)


def optimum_uniform_enumerate(instance: LineInstance) -> Fraction:
    """Smallest candidate value the uniform decision accepts, over every
    pairwise candidate (no group restriction, no implicit arrays)."""
    from .uniform import decide_uniform

    if not instance.uniform:
        raise BarrierError("sensor ranges are not all equal")
    xs = list(instance.xs)
    r = instance.rs[0]
    L = instance.length_scaled
    n = len(xs)
    values = {0}
    for i in range(n):
        for j in range(i, n):
            values.add(xs[j] - (2 * r * (j - i) + r))
            values.add(L - 2 * r * (j - i) - r - xs[i])
            if j > i:
                # coordinates are even integers, so this halving is exact
                values.add((xs[j] - xs[i] - 2 * r * (j - i)) // 2)
    cands = sorted(v for v in values if v >= 0)
    lo, hi = 0, len(cands) - 1
    unit = instance.unit
    if not decide_uniform(instance, Fraction(cands[hi], unit)).feasible:
        raise BarrierError("no candidate value is feasible")
    while lo < hi:
        mid = (lo + hi) // 2
        if decide_uniform(instance, Fraction(cands[mid], unit)).feasible:
            hi = mid
        else:
            lo = mid + 1
    return Fraction(cands[lo], unit)


# --------------------------------------------------------------------------
# cycle


def _cycle_sequence_ok(seq, r, L, lam):
    """``seq`` holds the (lifted) positions in cover order.  Integers only."""
    m = len(seq)
    lows = [x - lam for x in seq]
    highs = [x + lam for x in seq]
    # requirement on the frontier before each sensor, pushed backwards
    need = [0] * m
    req = None
    for t in range(m - 1, 0, -1):
        c = lows[t] - r
        if req is not None:
            carried = req - 2 * r if highs[t] + r >= req else req
            c = max(c, carried)
        req = c
        need[t - 1] = req
    start = lows[0]
    if m > 1:
        start = max(start, need[0] - r)
    if start > highs[0]:
        return False
    f = start + r
    for t in range(1, m):
        if f < lows[t] - r:
            return False
        f = max(f, min(highs[t] + r, f + 2 * r))
    return f >= start - r + L


def feasible_cycle_exhaustive(instance: CycleInstance, lam) -> bool:
    """Exact cycle feasibility by enumerating cover orders and laps."""
    if instance.n > MAX_EXHAUSTIVE:
        raise BarrierError(f"exhaustive oracle is limited to {MAX_EXHAUSTIVE} sensors")
    lam = as_rational(lam)
    if lam < 0:
        return False
    pos = list(instance.positions)
    r = instance.sensor_range
    L = instance.length
    den = math.lcm(*(v.denominator for v in pos + [r, L, lam]))
    P = [int(v * den) for v in pos]
    R, Li, l = int(r * den), int(L * den), int(lam * den)
    n = len(P)
    if 2 * R >= Li:
        # any single sensor wraps the whole cycle
        return True
    # in a minimal cover sorted along the cycle, positions increase, so a
    # sensor's lifted start can lag its predecessor's by at most 2*lam
    for head in range(n):
        base = P[head]
        lifted = {i: [P[i] + w * Li for w in (-1, 0, 1, 2)
                      if base - 2 * l <= P[i] + w * Li <= base + Li + 2 * l]
                  for i in range(head + 1, n)}

        def extend(seq, used):
            if _cycle_sequence_ok(seq, R, Li, l):
                return True
            last = seq[-1]
            for i, options in lifted.items():
                if i in used:
                    continue
                for v in options:
                    if v >= last - 2 * l and extend(seq + (v,), used | {i}):
                        return True
            return False

        if extend((base,), frozenset()):
            return True
    return False


def optimum_cycle_bisect(instance: CycleInstance,
                         tolerance=Fraction(1, 2 ** 40)) -> Fraction:
    return _bisect(lambda v: feasible_cycle_exhaustive(instance, v), Fraction(0),
                   instance.length / 2, tolerance)


def cycle_candidates(instance: CycleInstance) -> list:
    """Every ``(x_j - x_i - 2r(j - i)) / 2`` with ``0 <= i < n`` and
    ``i < j < i + n`` on the doubled coordinates, as Fractions."""
    pos = list(instance.positions)
    n = len(pos)
    r = instance.sensor_range
    L = instance.length
    u = [pos[0]]
    for v in pos[1:]:
        u.append(v if v >= u[-1] else v + L)
        while u[-1] < u[-2]:
            u[-1] += L
    u = u + [v + L for v in u]
    return [(u[j] - u[i] - 2 * r * (j - i)) / 2
            for i in range(n) for j in range(i + 1, i + n)]
