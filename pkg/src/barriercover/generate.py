"""Seeded random instances with integer coordinates."""
from __future__ import annotations

import numpy as np

from .core import BarrierError, CycleInstance, LineInstance

__all__ = ["random_instance"]


def random_instance(n: int, kind: str = "line", uniform: bool = False,
                    seed: int = 0, span: int | None = None, inside: bool = False):
    """A valid random instance; the same arguments always give the same one.

    Line: ranges in 1..4 (one shared value when ``uniform``), positions in
    ``[-span/8, 9*span/8]`` (``[0, span]`` when ``inside``), and
    ``L = min(span, 2 * sum(r))`` so the instance is always coverable.
    Cycle: one shared range, ``L = min(span, 2nr)``, positions in ``[0, L)``.
    ``span`` defaults to ``4n``.
    """
    if n < 1:
        raise BarrierError("n must be at least 1")
    if kind not in ("line", "cycle"):
        raise BarrierError(f"unknown kind {kind!r}")
    span = 4 * n if span is None else int(span)
    if span < 1:
        raise BarrierError("span must be positive")
    rng = np.random.default_rng(seed)
    if kind == "cycle":
        r = int(rng.integers(1, 5))
        L = min(span, 2 * n * r)
        xs = np.sort(rng.integers(0, L, size=n))
        return CycleInstance.from_integers(xs.tolist(), r, L)
    if uniform:
        rs = np.full(n, int(rng.integers(1, 5)), dtype=np.int64)
    else:
        rs = rng.integers(1, 5, size=n)
    lo, hi = (0, span) if inside else (-(span // 8), span + span // 8)
    xs = np.sort(rng.integers(lo, hi + 1, size=n))
    L = min(span, 2 * int(rs.sum()))
    if inside:
        xs = np.minimum(xs, L)
    return LineInstance.from_integers(xs.tolist(), rs.tolist(), L)
