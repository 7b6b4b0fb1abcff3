"""Exact optimum for arbitrary ranges by running the greedy at the unknown
optimum.

The search keeps an open interval ``(lo, hi)`` known to contain the
optimum, on which the greedy picks the same sensors in the same order.
The frontier after the chosen prefix is an affine function ``s*lam + c``
with ``s`` in {0, 1}.  For the next step, the values of ``lam`` at which a
sensor enters or leaves the type I or type II candidate sets are collected,
the interval is narrowed to two consecutive such values by binary search
with the decision procedure, and the choice made at the midpoint is the
choice made at the optimum.  When the new frontier can reach ``L`` inside
the interval, the crossing point is either the optimum or a new upper end.

Internally every value is an integer over ``2 * instance.unit`` so that
all event values are integral.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (Movement, SolverInvariantError, int_array,
                   point_barrier_optimum)
from .decision import PreprocessedInstance, decide_le, decide_lt

__all__ = ["AffineFn", "SearchInterval", "solve", "initial_interval",
           "step_events_S1", "step_events_S2", "locate", "step_advance"]


@dataclass(frozen=True)
class AffineFn:
    """``slope * lam + intercept``."""

    slope: int
    intercept: Fraction

    def __call__(self, lam):
        return self.slope * lam + self.intercept


@dataclass(frozen=True)
class SearchInterval:
    """Open interval ``(lo, hi)`` around the optimum plus the frontier
    function and critical prefix valid on it.

    Stored as integers over ``scale``; the Fraction views are properties.
    """

    lo2: int
    hi2: int
    slope: int
    c2: int
    scale: int
    critical: tuple = ()
    kinds: tuple = ()

    @property
    def lo(self) -> Fraction:
        return Fraction(self.lo2, self.scale)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.hi2, self.scale)

    @property
    def frontier(self) -> AffineFn:
        return AffineFn(self.slope, Fraction(self.c2, self.scale))


class _Search:
    """Integer-domain state shared by the step functions."""

    def __init__(self, pre: PreprocessedInstance):
        inst = pre.instance
        self.pre = pre
        self.scale = 2 * inst.unit
        bound = (max(abs(v) for v in pre.left + pre.right)
                 + inst.length_scaled + 4 * sum(inst.rs)) * 16
        self.a2 = int_array([2 * v for v in pre.left], bound)
        self.b2 = int_array([2 * v for v in pre.right], bound)
        self.L2 = 2 * inst.length_scaled
        self.unused = np.ones(inst.n, dtype=bool)
        self._le = {}
        self._lt = {}

    def le(self, v) -> bool:
        v = int(v)
        got = self._le.get(v)
        if got is None:
            got = self._le[v] = decide_le(self.pre, Fraction(v, self.scale)).feasible
        return got

    def lt(self, v) -> bool:
        v = int(v)
        got = self._lt.get(v)
        if got is None:
            got = self._lt[v] = decide_lt(self.pre, Fraction(v, self.scale))
        return got

    def eq(self, v) -> bool:
        return self.le(v) and not self.lt(v)

    # event values -----------------------------------------------------
    def events_s1(self, s, c):
        if s:
            # frontier and extensions move together: nothing changes
            return self.a2[:0]
        u = self.unused
        return np.concatenate([c - self.a2[u], c - self.b2[u]])

    def events_s2(self, s, c):
        a = self.a2[self.unused]
        cross = (a - c) // (s + 1)
        if s:
            return cross
        return np.concatenate([c - a, cross])

    def locate(self, events, lo, hi):
        """Narrow ``(lo, hi)`` to consecutive events; returns
        ``(hit, lo, hi)`` where ``hit`` is the optimum if an event is it."""
        inside = events[(events > lo) & (events < hi)]
        if inside.size == 0:
            return None, lo, hi
        ev = np.unique(inside)
        left, right = 0, len(ev)
        while left < right:
            mid = (left + right) // 2
            if self.le(ev[mid]):
                right = mid
            else:
                left = mid + 1
        new_lo = int(ev[left - 1]) if left > 0 else lo
        if left == len(ev):
            return None, new_lo, hi
        new_hi = int(ev[left])
        if not self.lt(new_hi):
            return new_hi, new_lo, new_hi
        return None, new_lo, new_hi

    # one greedy step at the midpoint ----------------------------------
    def choose(self, s, c, lo, hi):
        """Sensor picked by the greedy on ``(lo, hi)``: ``(index, kind)``,
        or ``(None, None)`` when neither candidate set has members."""
        m = lo + hi                       # the midpoint, doubled
        R = s * m + 2 * c
        a = 2 * self.a2 + m
        b = 2 * self.b2 + m
        cand = np.flatnonzero(self.unused & (a <= R) & (b > R))
        if cand.size:
            vals = self.b2[cand]
            top = vals.max()
            return int(cand[np.flatnonzero(vals == top)[-1]]), "I"
        cand = np.flatnonzero(self.unused & (a > R) & (a <= R + 2 * m))
        if cand.size:
            vals = self.b2[cand]
            return int(cand[int(np.argmin(vals))]), "II"
        return None, None


def initial_interval(pre: PreprocessedInstance) -> SearchInterval:
    """``(0, lam_max)`` with ``lam_max = L + |x_1| + |x_n| + max r + 1``."""
    inst = pre.instance
    hi = (inst.length_scaled + abs(inst.xs[0]) + abs(inst.xs[-1])
          + max(inst.rs) + inst.unit)
    return SearchInterval(0, 2 * hi, 0, 0, 2 * inst.unit)


def _state(pre, interval):
    search = _Search(pre)
    for j in interval.critical:
        search.unused[j] = False
    return search


def _to_fractions(values, lo2, hi2, scale):
    inside = sorted({int(v) for v in values if lo2 < v < hi2})
    return [Fraction(v, scale) for v in [lo2] + inside + [hi2]]


def step_events_S1(pre: PreprocessedInstance, interval: SearchInterval) -> list:
    """Sorted values in ``[lo, hi]`` where the type I candidate set changes,
    including both ends."""
    search = _state(pre, interval)
    ev = search.events_s1(interval.slope, interval.c2)
    return _to_fractions(ev, interval.lo2, interval.hi2, interval.scale)


def step_events_S2(pre: PreprocessedInstance, interval: SearchInterval) -> list:
    """Sorted values in ``[lo, hi]`` where the type II candidate set
    changes, including both ends."""
    search = _state(pre, interval)
    ev = search.events_s2(interval.slope, interval.c2)
    return _to_fractions(ev, interval.lo2, interval.hi2, interval.scale)


def locate(events: list, pre: PreprocessedInstance):
    """Binary search sorted ``events`` (first and last are the current open
    ends) with the decision procedure.

    Returns ``((lam1, lam2), hit)``: consecutive events with
    ``lam1 < lambda* <= lam2`` and ``hit == lam2`` when ``lam2`` is the
    optimum, else ``None``.
    """
    lo, hi = events[0], events[-1]
    inner = events[1:-1]
    left, right = 0, len(inner)
    while left < right:
        mid = (left + right) // 2
        if decide_le(pre, inner[mid]).feasible:
            right = mid
        else:
            left = mid + 1
    lam1 = inner[left - 1] if left > 0 else lo
    if left == len(inner):
        return (lam1, hi), None
    lam2 = inner[left]
    hit = lam2 if not decide_lt(pre, lam2) else None
    return (lam1, lam2), hit


def step_advance(pre: PreprocessedInstance, interval: SearchInterval,
                 sensor: int, kind: str):
    """Append ``sensor`` to the critical prefix and compare the new frontier
    with ``L``.  Returns ``(new_interval, lambda_star_or_None)``."""
    search = _state(pre, interval)
    return _advance(search, interval.lo2, interval.hi2, interval.slope,
                    interval.c2, sensor, kind, interval)


def _advance(search, lo, hi, s, c, g, kind, interval=None):
    if kind == "I":
        s, c = 1, int(search.b2[g])
    else:
        c = c + int(search.b2[g] - search.a2[g])
    crit = kinds = ()
    if interval is not None:
        crit = interval.critical + (g,)
        kinds = interval.kinds + (kind,)
    L2 = search.L2
    hit = None
    if s == 0:
        if c >= L2:
            raise SolverInvariantError(
                "frontier reaches L on the whole search interval")
    else:
        cross = L2 - c
        if cross <= lo:
            raise SolverInvariantError("frontier exceeds L on the whole interval")
        if cross < hi:
            if search.eq(cross):
                hit = cross
            hi = cross
    return SearchInterval(lo, hi, s, c, search.scale, crit, kinds), hit


def solve(pre: PreprocessedInstance):
    """Exact optimum ``(lambda_star, Movement)`` for arbitrary ranges.

    >>> from barriercover import LineInstance, preprocess
    >>> lam, move = solve(preprocess(LineInstance([1, 5], [1, 2], 6)))
    >>> lam, [str(y) for y in move.destinations]
    (Fraction(1, 1), ['1', '4'])
    """
    inst = pre.instance
    if inst.length_scaled == 0:
        need, move = point_barrier_optimum(inst)
        return Fraction(need, inst.unit), move
    start = decide_le(pre, 0)
    if start.feasible:
        return Fraction(0), start.movement
    search = _Search(pre)
    iv = initial_interval(pre)
    lo, hi, s, c = iv.lo2, iv.hi2, 0, 0
    if not search.lt(hi):
        raise SolverInvariantError("upper bound is not above the optimum")
    found = None
    for _ in range(inst.n):
        if s == 0:
            found, lo, hi = search.locate(search.events_s1(s, c), lo, hi)
            if found is not None:
                break
        g, kind = search.choose(s, c, lo, hi)
        if kind is None or kind == "II":
            found, lo, hi = search.locate(search.events_s2(s, c), lo, hi)
            if found is not None:
                break
            g, kind = search.choose(s, c, lo, hi)
            if kind is None:
                raise SolverInvariantError("no candidate sensor on the interval")
        search.unused[g] = False
        iv, found = _advance(search, lo, hi, s, c, g, kind)
        if found is not None:
            break
        lo, hi, s, c = iv.lo2, iv.hi2, iv.slope, iv.c2
    if found is None:
        raise SolverInvariantError("every sensor used without reaching L")
    lam = Fraction(found, search.scale)
    witness = decide_le(pre, lam)
    return lam, witness.movement
