"""Greedy decision procedure for arbitrary sensing ranges.

All sensors are first shifted right by ``lam``.  Sweeping a frontier ``R``
from 0, each step either keeps a sensor in place that covers the point just
right of ``R`` (type I, largest right extension wins) or, when there is
none, pulls left the sensor whose left extension lies in ``(R, R + 2*lam]``
with the smallest right extension (type II) so that it starts exactly at
``R``.  The run succeeds once ``R >= L``.

Two lists sorted by left and right extension make a query linear after an
O(n log n) preprocessing step.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import (DecisionOutcome, LineInstance, Movement, as_rational,
                   int_array, scale_lambda)

__all__ = ["PreprocessedInstance", "preprocess", "decide_le", "decide_lt",
           "decide_eq"]


@dataclass(frozen=True)
class PreprocessedInstance:
    """An instance with its sensors sorted by left and by right extension.

    ``order_left`` and ``order_right`` are 0-based permutations; ties are
    broken by sensor index.  Keys are static extensions; shifting every
    sensor by the same ``lam`` keeps both orders.
    """

    instance: LineInstance
    left: list
    right: list
    order_left: list
    order_right: list
    arrays: tuple = field(default=(), repr=False, compare=False)
    _scaled: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self):
        return self.instance.n

    @property
    def unit(self):
        return self.instance.unit


def preprocess(instance: LineInstance) -> PreprocessedInstance:
    xs, rs = instance.xs, instance.rs
    left = [x - r for x, r in zip(xs, rs)]
    right = [x + r for x, r in zip(xs, rs)]
    # sorted() is stable, so equal keys stay in index order
    order_left = sorted(range(instance.n), key=left.__getitem__)
    order_right = sorted(range(instance.n), key=right.__getitem__)
    # numpy copies for building witnesses; the sweep itself uses the lists
    bound = max(max(right), -min(left), instance.length_scaled)
    arrays = tuple(int_array(v, 4 * bound) for v in (xs, rs, left, right))
    return PreprocessedInstance(instance, left, right, order_left, order_right,
                                arrays)


def _greedy(left, right, order_left, order_right, L, lam, strict):
    """Core sweep on integers.

    Returns ``(ok, picks, R)``; ``picks`` lists the critical sensors in cover
    order, with type II sensors stored as ``~j``.
    """
    n = len(left)
    used = bytearray(n)
    nxt = list(range(1, n + 1))
    head = 0
    R = 0
    li = 0
    picks = []
    push = picks.append
    while R < L:
        # compare unshifted extensions against the frontier moved back by lam
        T = R - lam
        # type I: newly reachable sensors whose shifted interval straddles R
        best = -1
        best_right = T
        while li < n:
            j = order_left[li]
            if left[j] > T:
                break
            li += 1
            if used[j]:
                continue
            rj = right[j]
            if rj > best_right or (rj == best_right and best >= 0 and j > best):
                best = j
                best_right = rj
        if best >= 0:
            used[best] = 1
            R = best_right + lam
            push(best)
            continue
        # type II: first sensor by right extension whose left end is in reach
        limit = T + 2 * lam
        k = head
        prev = -1
        found = -1
        while k < n:
            j = order_right[k]
            if right[j] <= T:
                # covers nothing beyond R, now or later
                if prev < 0:
                    head = nxt[k]
                else:
                    nxt[prev] = nxt[k]
                k = nxt[k]
                continue
            a = left[j]
            if a < limit or (a == limit and not strict):
                found = j
                break
            prev = k
            k = nxt[k]
        if found < 0:
            return False, picks, R
        if prev < 0:
            head = nxt[k]
        else:
            nxt[prev] = nxt[k]
        used[found] = 1
        R += right[found] - left[found]
        push(~found)
    return True, picks, R


def _unpack(picks, left, right, lam):
    """Critical indices, type tags and frontiers from encoded picks."""
    crit = []
    kinds = []
    fronts = []
    R = 0
    for j in picks:
        if j >= 0:
            R = right[j] + lam
            kinds.append("I")
        else:
            j = ~j
            R += right[j] - left[j]
            kinds.append("II")
        crit.append(j)
        fronts.append(R)
    return crit, kinds, fronts


def _witness(pre, picks, lam, k):
    """Destinations for a successful sweep, scaled by ``k``.

    Type I and spare sensors sit at ``x + lam``; a type II sensor starts at
    the frontier left by the previous pick.  That frontier is the right end
    of the latest type I pick plus the widths of the type II picks since,
    which cumulative sums give without a Python-level loop.
    """
    xs, rs, left, right = pre.arrays
    bound = 4 * (abs(lam) + k * max(int(abs(right).max()), int(abs(left).max()),
                                    pre.instance.length_scaled))
    if xs.dtype != object and bound >= 1 << 60:
        xs, rs, left, right = (a.astype(object) for a in (xs, rs, left, right))
    if k != 1:
        xs, rs, left, right = xs * k, rs * k, left * k, right * k
    P = np.array(picks, dtype=np.int64)
    typ1 = P >= 0
    idx = np.where(typ1, P, ~P)
    width = np.where(typ1, 0, right[idx] - left[idx])
    run = np.cumsum(width)
    order = np.arange(len(P))
    last1 = np.maximum.accumulate(np.where(typ1, order, -1))
    has1 = last1 >= 0
    safe = np.where(has1, last1, 0)
    after = np.where(has1, right[idx[safe]] + lam - run[safe], 0) + run
    before = np.concatenate([np.zeros(1, dtype=after.dtype), after[:-1]])
    ys = xs + lam
    typ2 = ~typ1
    moved = idx[typ2]
    ys[moved] = before[typ2] + rs[moved]
    if len(P) < len(xs) or typ1.any():
        maxd = lam
    else:
        maxd = int(abs(ys[moved] - xs[moved]).max())
    return ys.tolist(), maxd


def _scaled_query(pre: PreprocessedInstance, lam: Fraction):
    """Integer data for a query at ``lam``: lists, barrier, lam and unit."""
    num, k = scale_lambda(lam, pre.unit)
    inst = pre.instance
    if k == 1:
        return (pre.left, pre.right, inst.xs, inst.rs, inst.length_scaled,
                num, pre.unit)
    lists = pre._scaled.get(k)
    if lists is None:
        lists = ([v * k for v in pre.left], [v * k for v in pre.right],
                 [v * k for v in inst.xs], [v * k for v in inst.rs])
        if k <= 8:
            # parametric search keeps asking at halves and quarters
            pre._scaled[k] = lists
    return lists + (inst.length_scaled * k, num, pre.unit * k)


def _point_barrier(pre, lam: Fraction, strict: bool) -> DecisionOutcome:
    inst = pre.instance
    num, k = scale_lambda(lam, pre.unit)
    unit = pre.unit * k
    best = None
    for i in range(inst.n):
        need = abs(inst.xs[i] * k) - inst.rs[i] * k
        if need < num or (need <= num and not strict):
            best = i
            break
    if best is None:
        return DecisionOutcome(False, lam, unit=unit)
    ys = [x * k for x in inst.xs]
    need = max(0, abs(ys[best]) - inst.rs[best] * k)
    ys[best] += -need if ys[best] > 0 else need
    move = Movement._from_scaled(ys, unit, need)
    return DecisionOutcome(True, lam, move, (best,), ("I",), (0,), unit)


def decide_le(pre: PreprocessedInstance, lam) -> DecisionOutcome:
    """Is there a coverage with every sensor moving at most ``lam``?

    Feasible outcomes carry the witness movement and the critical sensors
    in cover order.

    >>> from barriercover import LineInstance
    >>> pre = preprocess(LineInstance([1, 5], [1, 2], 6))
    >>> out = decide_le(pre, 1)
    >>> out.feasible, [str(y) for y in out.movement.destinations]
    (True, ['1', '4'])
    >>> bool(decide_le(pre, Fraction(3, 4)))
    False
    """
    lam = as_rational(lam)
    if lam < 0:
        return DecisionOutcome(False, lam, unit=pre.unit)
    if pre.instance.length_scaled == 0:
        return _point_barrier(pre, lam, strict=False)
    left, right, xs, rs, L, l, unit = _scaled_query(pre, lam)
    ok, picks, _ = _greedy(left, right, pre.order_left, pre.order_right, L, l,
                           strict=False)
    if not ok:
        return DecisionOutcome(False, lam, unit=unit)
    ys, maxd = _witness(pre, picks, l, unit // pre.unit)
    move = Movement._from_scaled(ys, unit, maxd)
    return DecisionOutcome(True, lam, move, unit=unit,
                           expand=lambda: _unpack(picks, left, right, l))


def decide_lt(pre: PreprocessedInstance, lam) -> bool:
    """Is the optimum strictly smaller than ``lam``?

    >>> from barriercover import LineInstance
    >>> pre = preprocess(LineInstance([1, 5], [1, 2], 6))
    >>> decide_lt(pre, 1), decide_lt(pre, 2)
    (False, True)
    """
    lam = as_rational(lam)
    if lam <= 0:
        return False
    if pre.instance.length_scaled == 0:
        return _point_barrier(pre, lam, strict=True).feasible
    left, right, xs, rs, L, l, unit = _scaled_query(pre, lam)
    ok, picks, end = _greedy(left, right, pre.order_left, pre.order_right, L, l,
                             strict=True)
    if not ok:
        return False
    if end > L:
        return True
    if all(j < 0 for j in picks):
        return True
    chosen = {j if j >= 0 else ~j for j in picks}
    # some spare sensor can reach L with room to spare
    for t in range(len(xs)):
        if t not in chosen and L - l - rs[t] < xs[t] < L + l + rs[t]:
            return True
    return False


def decide_eq(pre: PreprocessedInstance, lam) -> bool:
    """Is ``lam`` exactly the optimum?"""
    lam = as_rational(lam)
    if lam < 0:
        return False
    return decide_le(pre, lam).feasible and not decide_lt(pre, lam)
