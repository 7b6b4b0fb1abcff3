"""Solver for the case where every sensor has the same range.

Some optimal movement keeps the sensors in their input order, so an
order-preserving greedy decides a fixed ``lam`` in linear time.  The optimum
is one of three families of candidate values:

* ``x_j - (2r(j-i) + r)``: sensors i..j packed end to end with s_i's left
  end on 0 and s_j moved left by the full amount;
* ``L - 2r(j-i) - r - x_i``: the mirror image against L;
* ``(x_j - x_i - 2r(j-i)) / 2``: s_i and s_j moving towards each other,
  restricted to s_i closing a group and s_j opening a later one.

These are arranged as O(n) sorted arrays and searched with the decision
greedy as the predicate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (BarrierError, DecisionOutcome, LineInstance, Movement,
                   as_rational, int_array, point_barrier_optimum,
                   scale_lambda)
from .search import search_sorted_arrays

__all__ = ["decide_uniform", "GroupDecomposition", "decompose_groups",
           "SortedCandidateArrays", "candidate_arrays", "solve_uniform"]


def _require_uniform(instance):
    if not instance.uniform:
        raise BarrierError("sensor ranges are not all equal")


def uniform_greedy(xs, r, L, lam, positions=True):
    """Order-preserving sweep on scaled integers.

    Returns the destination list (or ``True`` when ``positions`` is false)
    if ``[0, L]`` with ``L > 0`` gets covered, else ``None``.
    """
    q = 0
    prev = None
    ys = [] if positions else None
    reach = lam + r
    for x in xs:
        if q >= L:
            if not positions:
                return True
            y = x if prev is None or x >= prev else prev
        elif x - reach > q:
            return None
        elif x + reach <= q:
            # cannot push the frontier; keep it out of the way
            if not positions:
                continue
            y = x if prev is None or x >= prev else prev
        else:
            y = x + lam
            if q + r < y:
                y = q + r
            if y + r > q:
                q = y + r
        if positions:
            ys.append(y)
            prev = y
    if q < L:
        return None
    return ys if positions else True


def decide_uniform(instance: LineInstance, lam) -> DecisionOutcome:
    """Decide ``lam`` for equal ranges; the witness keeps the input order.

    >>> from barriercover import LineInstance
    >>> out = decide_uniform(LineInstance([1, 2, 6], [1, 1, 1], 6), 1)
    >>> [str(y) for y in out.movement.destinations]
    ['1', '3', '5']
    """
    _require_uniform(instance)
    lam = as_rational(lam)
    num, k = scale_lambda(lam, instance.unit)
    unit = instance.unit * k
    if lam < 0:
        return DecisionOutcome(False, lam, unit=unit)
    if instance.length_scaled == 0:
        need = min(max(0, abs(x) - instance.rs[0]) for x in instance.xs)
        if need * k > num:
            return DecisionOutcome(False, lam, unit=unit)
        _, move = point_barrier_optimum(instance)
        return DecisionOutcome(True, lam, move, unit=instance.unit)
    xs = instance.xs if k == 1 else [x * k for x in instance.xs]
    r = instance.rs[0] * k
    ys = uniform_greedy(xs, r, instance.length_scaled * k, num)
    if ys is None:
        return DecisionOutcome(False, lam, unit=unit)
    maxd = max(abs(y - x) for x, y in zip(xs, ys))
    return DecisionOutcome(True, lam, Movement._from_scaled(ys, unit, maxd),
                           unit=unit)


# --------------------------------------------------------------------------
# groups and candidate arrays


@dataclass(frozen=True)
class GroupDecomposition:
    """Maximal runs of sensors whose input intervals overlap in more than a
    point.  Indices are 0-based; lengths are scaled integers over ``unit``.

    ``gap_prefix[k]`` is the sum of the first ``k`` gaps and
    ``slack_prefix[k]`` the sum of the first ``k`` slacks.
    """

    first: tuple
    last: tuple
    gaps: tuple
    slacks: tuple
    gap_prefix: tuple
    slack_prefix: tuple
    unit: int

    @property
    def m(self):
        return len(self.first)

    def lambda3(self, k: int, h: int):
        """Scaled value of lam3(b_k, a_h), k < h, from the prefix sums."""
        G, S = self.gap_prefix, self.slack_prefix
        return (G[h] - G[k] - (S[h] - S[k + 1])) // 2


def decompose_groups(instance: LineInstance) -> GroupDecomposition:
    _require_uniform(instance)
    xs = instance.xs
    two_r = 2 * instance.rs[0]
    first = [0]
    last = []
    for i in range(1, instance.n):
        if xs[i] - xs[i - 1] >= two_r:
            last.append(i - 1)
            first.append(i)
    last.append(instance.n - 1)
    gaps = [xs[first[k + 1]] - xs[last[k]] - two_r for k in range(len(first) - 1)]
    slacks = [two_r * (b - a + 1) - (xs[b] - xs[a] + two_r)
              for a, b in zip(first, last)]
    gp = [0]
    for g in gaps:
        gp.append(gp[-1] + g)
    sp = [0]
    for s in slacks:
        sp.append(sp[-1] + s)
    return GroupDecomposition(tuple(first), tuple(last), tuple(gaps),
                              tuple(slacks), tuple(gp), tuple(sp), instance.unit)


class SortedCandidateArrays:
    """The candidate values as ``2n + m - 1`` non-decreasing arrays.

    Arrays ``0..n-1`` hold the left-packed family for each j, arrays
    ``n..2n-1`` the right-packed family for each i, and the last ``m - 1``
    arrays are rows of the pairwise family.  Every row of the pairwise
    family is the sorted first row plus a per-row constant, which also
    defines the entries whose pair (k, h) has h <= k.  Values are scaled
    integers over ``unit``; ``value`` is vectorised.
    """

    def __init__(self, instance: LineInstance, groups: GroupDecomposition):
        n = instance.n
        xs = instance.xs
        r = instance.rs[0]
        L = instance.length_scaled
        m = groups.m
        bound = (max(abs(xs[0]), abs(xs[-1])) + L + 2 * r) * (2 * n + 4) \
            + 2 * (groups.gap_prefix[-1] + groups.slack_prefix[-1])
        self.n = n
        self.m = m
        self.unit = instance.unit
        self.step = 2 * r
        self.base = int_array(
            [x - r - 2 * r * j for j, x in enumerate(xs)]
            + [L - 2 * r * (n - 1 - i) - r - x for i, x in enumerate(xs)], bound)
        row = [groups.lambda3(0, h) for h in range(1, m)]
        self.reference_order = tuple(sorted(range(m - 1), key=row.__getitem__))
        self.ref = int_array(sorted(row), bound)
        # row k is the reference row shifted so that the (k, k+1) entry is exact
        self.shift = int_array([groups.gaps[k] // 2 - row[k] for k in range(m - 1)],
                               bound)
        self.lengths = np.concatenate([
            np.arange(1, n + 1, dtype=np.int64),
            np.arange(n, 0, -1, dtype=np.int64),
            np.full(m - 1, m - 1, dtype=np.int64)])

    @property
    def count(self):
        return len(self.lengths)

    def family(self, k: int) -> str:
        return "lambda1" if k < self.n else "lambda2" if k < 2 * self.n else "lambda3"

    def value(self, ids, pos):
        ids = np.asarray(ids)
        pos = np.asarray(pos)
        if self.base.dtype == object:
            pos = pos.astype(object)
        third = ids >= 2 * self.n
        if not third.any():
            return self.base[ids] + self.step * pos
        out = np.empty(len(ids), dtype=self.base.dtype)
        lin = ~third
        out[lin] = self.base[ids[lin]] + self.step * pos[lin]
        out[third] = (self.ref[pos[third].astype(np.int64)]
                      + self.shift[ids[third] - 2 * self.n])
        return out

    def row(self, k: int) -> list:
        """Array ``k`` as scaled integers."""
        length = int(self.lengths[k])
        idx = np.full(length, k)
        return [int(v) for v in self.value(idx, np.arange(length))]

    def materialize(self) -> list:
        """Every array as a list of Fractions (for small instances)."""
        return [[Fraction(v, self.unit) for v in self.row(k)]
                for k in range(self.count)]

    def first_above(self, bound):
        """Per array, the first position whose value exceeds ``bound``."""
        n = self.n
        step = self.step
        base = self.base
        need = bound - base
        lin = np.where(need < 0, 0, need // step + 1)
        lin = np.minimum(lin, self.lengths[:2 * n]).astype(np.int64)
        third = np.searchsorted(self.ref, bound - self.shift, side="right")
        return np.concatenate([lin, np.asarray(third, dtype=np.int64)])


def candidate_arrays(instance: LineInstance,
                     groups: GroupDecomposition | None = None) -> SortedCandidateArrays:
    _require_uniform(instance)
    if groups is None:
        groups = decompose_groups(instance)
    return SortedCandidateArrays(instance, groups)


def _packed_upper_bound(instance: LineInstance) -> int:
    """Scaled max displacement of the end-to-end packing from 0, which is
    always a cover when 2nr >= L."""
    r = instance.rs[0]
    top = instance.length_scaled - r
    return max(abs(x - min(r + 2 * r * i, top)) for i, x in enumerate(instance.xs))


def solve_uniform(instance: LineInstance):
    """Optimal ``(lambda_star, Movement)`` for equal ranges.

    >>> from barriercover import LineInstance
    >>> lam, move = solve_uniform(LineInstance([1, 2, 6], [1, 1, 1], 6))
    >>> str(lam), [str(y) for y in move.destinations]
    ('1', ['1', '3', '5'])
    """
    _require_uniform(instance)
    unit = instance.unit
    if instance.length_scaled == 0:
        need, move = point_barrier_optimum(instance)
        return Fraction(need, unit), move
    xs, r, L = instance.xs, instance.rs[0], instance.length_scaled
    ys = uniform_greedy(xs, r, L, 0)
    if ys is not None:
        return Fraction(0), Movement._from_scaled(ys, unit, 0)
    if 2 * r * instance.n < L:
        # only reachable for instances built without validation
        raise BarrierError("instance cannot be covered")
    arrays = candidate_arrays(instance)
    upper = _packed_upper_bound(instance)
    start = arrays.first_above(0)
    stop = arrays.first_above(upper)
    found = search_sorted_arrays(
        arrays, lambda v: uniform_greedy(xs, r, L, int(v), positions=False) is not None,
        start, stop)
    lam = int(found)
    ys = uniform_greedy(xs, r, L, lam)
    maxd = max(abs(y - x) for x, y in zip(xs, ys))
    return Fraction(lam, unit), Movement._from_scaled(ys, unit, maxd)
