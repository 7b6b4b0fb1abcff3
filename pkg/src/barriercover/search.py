"""Selection of the smallest "yes" value over many implicitly sorted arrays."""
from __future__ import annotations

import numpy as np

__all__ = ["search_sorted_arrays"]


def search_sorted_arrays(arrays, predicate, start=None, stop=None):
    """Smallest element ``v`` of ``arrays`` with ``predicate(v)`` true.

    ``arrays`` needs ``lengths`` (one entry per array) and a vectorised
    ``value(ids, positions)``; each array must be non-decreasing and
    ``predicate`` monotone (false below some threshold, true from it on).
    ``start``/``stop`` optionally restrict array ``k`` to
    ``[start[k], stop[k])``.

    Every round evaluates the predicate once, at the weighted median of the
    middle elements of the surviving ranges (weights are range lengths).
    At least a quarter of the surviving elements is discarded per round,
    so there are O(log N) predicate calls for N elements in total.

    Raises ``LookupError`` if no element satisfies the predicate.

    >>> class Lists:
    ...     def __init__(self, rows):
    ...         self.rows = rows
    ...         self.lengths = np.array([len(r) for r in rows])
    ...     def value(self, ids, pos):
    ...         return np.array([self.rows[i][p] for i, p in zip(ids, pos)])
    >>> int(search_sorted_arrays(Lists([[1, 3, 5], [2, 4]]), lambda v: v >= 4))
    4
    """
    lengths = np.asarray(arrays.lengths, dtype=np.int64)
    lo = np.zeros_like(lengths) if start is None else np.array(start, dtype=np.int64)
    hi = lengths.copy() if stop is None else np.array(stop, dtype=np.int64)
    hi = np.minimum(hi, lengths)
    ids = np.flatnonzero(lo < hi)
    lo, hi = lo[ids], hi[ids]
    best = None
    cache = {}
    while ids.size:
        mid = (lo + hi) // 2
        vals = arrays.value(ids, mid)
        weights = hi - lo
        order = np.argsort(vals, kind="stable")
        cum = np.cumsum(weights[order])
        pick = int(np.searchsorted(cum, (int(cum[-1]) + 1) // 2))
        m = vals[order[pick]]
        key = int(m)
        ok = cache.get(key)
        if ok is None:
            ok = cache[key] = bool(predicate(m))
        if ok:
            if best is None or m < best:
                best = m
            cut = vals >= m
            hi = np.where(cut, mid, hi)
        else:
            cut = vals <= m
            lo = np.where(cut, mid + 1, lo)
        keep = lo < hi
        if not keep.all():
            ids, lo, hi = ids[keep], lo[keep], hi[keep]
    if best is None:
        raise LookupError("no array element satisfies the predicate")
    return best
