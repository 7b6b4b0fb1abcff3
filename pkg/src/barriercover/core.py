"""Exact problem model shared by every solver.

Scalars are :class:`fractions.Fraction`.  Internally an instance keeps all
coordinates as Python integers over a common ``unit`` (value = int / unit).
The unit is always twice the lcm of the input denominators, so coordinates
are even integers and every half-difference the solvers need is again an
integer.  The integer form is what the O(n) loops run on.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction


class BarrierError(ValueError):
    """Invalid instance, movement or argument."""


class InfeasibleInstanceError(BarrierError):
    """The sensors cannot cover the barrier at any movement distance."""


class SolverInvariantError(RuntimeError):
    """An internal invariant was violated; indicates a bug, not bad input."""


def as_rational(value) -> Fraction:
    """Parse ``value`` into an exact :class:`Fraction`.

    Accepts ints, Fractions, decimal or ``a/b`` strings and ``(num, den)``
    pairs.  Floats are refused because their binary expansion is rarely
    what the caller meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise BarrierError(f"cannot parse rational {value!r}") from exc
    if isinstance(value, tuple) and len(value) == 2:
        num, den = value
        if not isinstance(num, int) or not isinstance(den, int) or den == 0:
            raise BarrierError(f"bad numerator/denominator pair {value!r}")
        return Fraction(num, den)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a decimal string instead")
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(q: Fraction) -> str:
    return str(as_rational(q))


def _lcm_of_denominators(values: Iterable[Fraction]) -> int:
    dens = {v.denominator for v in values}
    return reduce(math.lcm, dens, 1)


_INT64_SAFE = 1 << 60


def int_array(values, bound):
    """int64 array when ``bound`` keeps every intermediate safely in range,
    else an object array of Python ints."""
    if bound < _INT64_SAFE:
        return np.array(values, dtype=np.int64)
    out = np.empty(len(values), dtype=object)
    out[:] = list(values)
    return out


def _cyclic_distance(d: int, period: int) -> int:
    d %= period
    return min(d, period - d)


# --------------------------------------------------------------------------
# instances


class LineInstance:
    """Sensors on a line that must cover the segment ``[0, length]``.

    ``positions`` must be non-decreasing and every range positive.  The
    constructor raises :class:`InfeasibleInstanceError` when twice the total
    range is shorter than the barrier.
    """

    __slots__ = ("n", "unit", "xs", "rs", "length_scaled", "_positions",
                 "_ranges", "_length", "_uniform")

    def __init__(self, positions: Sequence, ranges: Sequence, length):
        pos = [as_rational(v) for v in positions]
        rng = [as_rational(v) for v in ranges]
        L = as_rational(length)
        if len(pos) != len(rng):
            raise BarrierError("positions and ranges differ in length")
        den = _lcm_of_denominators(pos + rng + [L])
        unit = 2 * den
        xs = [v.numerator * (unit // v.denominator) for v in pos]
        rs = [v.numerator * (unit // v.denominator) for v in rng]
        self._init_scaled(xs, rs, L.numerator * (unit // L.denominator), unit)
        self._positions = tuple(pos)
        self._ranges = tuple(rng)
        self._length = L

    @classmethod
    def from_integers(cls, positions: Sequence[int], ranges: Sequence[int],
                      length: int, denominator: int = 1) -> "LineInstance":
        """Build from integer numerators over a shared ``denominator``.

        Skips per-element Fraction construction, which matters for very
        large generated instances.
        """
        if denominator <= 0:
            raise BarrierError("denominator must be positive")
        self = cls.__new__(cls)
        self._init_scaled([2 * int(v) for v in positions],
                          [2 * int(v) for v in ranges],
                          2 * int(length), 2 * denominator)
        self._positions = self._ranges = self._length = None
        return self

    def _init_scaled(self, xs, rs, L, unit):
        n = len(xs)
        if n == 0:
            raise BarrierError("at least one sensor is required")
        if len(rs) != n:
            raise BarrierError("positions and ranges differ in length")
        if L < 0:
            raise BarrierError("barrier length must be non-negative")
        if any(r <= 0 for r in rs):
            raise BarrierError("sensor ranges must be positive")
        if any(xs[i] > xs[i + 1] for i in range(n - 1)):
            raise BarrierError("sensor positions must be sorted ascending")
        if 2 * sum(rs) < L:
            raise InfeasibleInstanceError(
                "total coverage 2*sum(r) is shorter than the barrier")
        self.n = n
        self.unit = unit
        self.xs = xs
        self.rs = rs
        self.length_scaled = L
        self._uniform = all(r == rs[0] for r in rs)

    # exact views -------------------------------------------------------
    @property
    def positions(self) -> tuple:
        if self._positions is None:
            self._positions = tuple(Fraction(v, self.unit) for v in self.xs)
        return self._positions

    @property
    def ranges(self) -> tuple:
        if self._ranges is None:
            self._ranges = tuple(Fraction(v, self.unit) for v in self.rs)
        return self._ranges

    @property
    def length(self) -> Fraction:
        if self._length is None:
            self._length = Fraction(self.length_scaled, self.unit)
        return self._length

    @property
    def uniform(self) -> bool:
        return self._uniform

    @property
    def on_barrier(self) -> bool:
        """True when every sensor starts inside ``[0, length]``."""
        return self.xs[0] >= 0 and self.xs[-1] <= self.length_scaled

    def scaled(self, unit: int):
        """Return ``(xs, rs, length)`` as integers over ``unit``."""
        if unit % self.unit:
            raise BarrierError("target unit must be a multiple of the instance unit")
        k = unit // self.unit
        if k == 1:
            return self.xs, self.rs, self.length_scaled
        return [v * k for v in self.xs], [v * k for v in self.rs], self.length_scaled * k

    def __len__(self):
        return self.n

    def __repr__(self):
        return (f"LineInstance(n={self.n}, length={self.length}, "
                f"uniform={self.uniform})")


class CycleInstance:
    """Equal-range sensors on a cycle of circumference ``length``.

    Coordinates are clockwise distances from an origin and lie in
    ``[0, length)``.  The sensor order is the clockwise order; the list may
    wrap past the origin once (e.g. ``[5, 7, 1, 3]`` on a cycle of 8).
    ``unwrapped`` holds the coordinates made monotone by adding ``length``
    after the wrap.
    """

    __slots__ = ("n", "unit", "xs", "r", "length_scaled", "unwrapped",
                 "_positions", "_range", "_length")

    def __init__(self, positions: Sequence, sensor_range, length):
        pos = [as_rational(v) for v in positions]
        r = as_rational(sensor_range)
        L = as_rational(length)
        unit = 2 * _lcm_of_denominators(pos + [r, L])
        self._init_scaled([v.numerator * (unit // v.denominator) for v in pos],
                          r.numerator * (unit // r.denominator),
                          L.numerator * (unit // L.denominator), unit)
        self._positions = tuple(pos)
        self._range = r
        self._length = L

    @classmethod
    def from_integers(cls, positions: Sequence[int], sensor_range: int,
                      length: int, denominator: int = 1) -> "CycleInstance":
        if denominator <= 0:
            raise BarrierError("denominator must be positive")
        self = cls.__new__(cls)
        self._init_scaled([2 * int(v) for v in positions], 2 * int(sensor_range),
                          2 * int(length), 2 * denominator)
        self._positions = self._range = self._length = None
        return self

    def _init_scaled(self, xs, r, L, unit):
        n = len(xs)
        if n == 0:
            raise BarrierError("at least one sensor is required")
        if L <= 0:
            raise BarrierError("cycle length must be positive")
        if r <= 0:
            raise BarrierError("sensor range must be positive")
        if any(not 0 <= x < L for x in xs):
            raise BarrierError("cycle coordinates must lie in [0, length)")
        if L > 2 * n * r:
            raise InfeasibleInstanceError("cycle longer than 2*n*r cannot be covered")
        unwrapped = [xs[0]]
        offset = 0
        for i in range(1, n):
            if xs[i] < xs[i - 1]:
                offset += L
            unwrapped.append(xs[i] + offset)
        if unwrapped[-1] - unwrapped[0] > L:
            raise BarrierError("sensor coordinates are not in clockwise order")
        self.n = n
        self.unit = unit
        self.xs = xs
        self.r = r
        self.length_scaled = L
        self.unwrapped = unwrapped

    @property
    def positions(self) -> tuple:
        if self._positions is None:
            self._positions = tuple(Fraction(v, self.unit) for v in self.xs)
        return self._positions

    @property
    def sensor_range(self) -> Fraction:
        if self._range is None:
            self._range = Fraction(self.r, self.unit)
        return self._range

    @property
    def length(self) -> Fraction:
        if self._length is None:
            self._length = Fraction(self.length_scaled, self.unit)
        return self._length

    def __len__(self):
        return self.n

    def __repr__(self):
        return (f"CycleInstance(n={self.n}, length={self.length}, "
                f"range={self.sensor_range})")


# --------------------------------------------------------------------------
# solutions


class Movement:
    """Destinations for every sensor plus the largest displacement.

    Solvers build movements directly from scaled integers; the Fraction
    views are materialised on first access.
    """

    __slots__ = ("_nums", "_unit", "_maxd", "_dest")

    def __init__(self, destinations: Sequence, max_displacement):
        dest = tuple(as_rational(v) for v in destinations)
        maxd = as_rational(max_displacement)
        unit = _lcm_of_denominators(dest + (maxd,))
        self._nums = [v.numerator * (unit // v.denominator) for v in dest]
        self._unit = unit
        self._maxd = maxd
        self._dest = dest

    @classmethod
    def between(cls, positions: Sequence, destinations: Sequence) -> "Movement":
        """Movement on a line; the displacement is computed from positions."""
        pos = [as_rational(v) for v in positions]
        dest = [as_rational(v) for v in destinations]
        if len(pos) != len(dest):
            raise BarrierError("positions and destinations differ in length")
        maxd = max((abs(a - b) for a, b in zip(pos, dest)), default=Fraction(0))
        return cls(dest, maxd)

    @classmethod
    def _from_scaled(cls, nums: list, unit: int, maxd_scaled: int) -> "Movement":
        self = cls.__new__(cls)
        self._nums = nums
        self._unit = unit
        self._maxd = Fraction(maxd_scaled, unit)
        self._dest = None
        return self

    @property
    def destinations(self) -> tuple:
        if self._dest is None:
            u = self._unit
            self._dest = tuple(Fraction(v, u) for v in self._nums)
        return self._dest

    @property
    def max_displacement(self) -> Fraction:
        return self._maxd

    def scaled(self, unit: int) -> list:
        """Destinations as integers over ``unit`` (a multiple of the own unit)."""
        if unit % self._unit:
            raise BarrierError("target unit must be a multiple of the movement unit")
        k = unit // self._unit
        return self._nums if k == 1 else [v * k for v in self._nums]

    @property
    def unit(self) -> int:
        return self._unit

    def __len__(self):
        return len(self._nums)

    def __eq__(self, other):
        if not isinstance(other, Movement):
            return NotImplemented
        return (self.destinations == other.destinations
                and self.max_displacement == other.max_displacement)

    def __repr__(self):
        head = ", ".join(str(v) for v in self.destinations[:6])
        more = ", ..." if len(self) > 6 else ""
        return f"Movement([{head}{more}], max_displacement={self.max_displacement})"


class DecisionOutcome:
    """Verdict of a decision query at a fixed ``lam``.

    For feasible outcomes of the general greedy, ``critical`` lists the
    0-based sensor indices in cover order, ``kinds`` tags each as ``"I"``
    (stands still) or ``"II"`` (pulled left onto the frontier) and
    ``frontiers`` holds the right extensions R_1, R_2, ... .  These are
    expanded on first access.
    """

    __slots__ = ("feasible", "lam", "movement", "unit", "_trace", "_expand")

    def __init__(self, feasible: bool, lam, movement: Movement | None = None,
                 critical=(), kinds=(), frontier_scaled=(), unit: int = 1,
                 expand=None):
        self.feasible = feasible
        self.lam = as_rational(lam)
        self.movement = movement
        self.unit = unit
        self._trace = None if expand else (tuple(critical), tuple(kinds),
                                           tuple(frontier_scaled))
        self._expand = expand

    def _get_trace(self):
        if self._trace is None:
            crit, kinds, fronts = self._expand()
            self._trace = (tuple(crit), tuple(kinds), tuple(fronts))
            self._expand = None
        return self._trace

    @property
    def critical(self) -> tuple:
        return self._get_trace()[0]

    @property
    def kinds(self) -> tuple:
        return self._get_trace()[1]

    @property
    def frontier_scaled(self) -> tuple:
        return self._get_trace()[2]

    @property
    def frontiers(self) -> tuple:
        return tuple(Fraction(v, self.unit) for v in self.frontier_scaled)

    def __bool__(self):
        return self.feasible

    def __repr__(self):
        return f"DecisionOutcome(feasible={self.feasible}, lam={self.lam})"


# --------------------------------------------------------------------------
# verification


def _common_unit(*units: int) -> int:
    return reduce(math.lcm, units, 1)


def verify_coverage(instance: LineInstance, movement: Movement, lam) -> bool:
    """Check a line movement: every displacement is at most ``lam`` and the
    covering intervals contain ``[0, length]``.  Exact; never raises for a
    length mismatch, it just returns False."""
    lam = as_rational(lam)
    if len(movement) != instance.n:
        return False
    unit = _common_unit(instance.unit, movement.unit, lam.denominator)
    xs, rs, L = instance.scaled(unit)
    ys = movement.scaled(unit)
    lam_s = lam.numerator * (unit // lam.denominator)
    if any(abs(x - y) > lam_s for x, y in zip(xs, ys)):
        return False
    return _line_covered(sorted((y - r, y + r) for y, r in zip(ys, rs)), L)


def _line_covered(intervals, L) -> bool:
    reach = 0
    touched = False
    for lo, hi in intervals:
        if lo > reach:
            break
        if hi >= reach:
            touched = True
            reach = hi
    return touched and reach >= L


def verify_cycle_coverage(instance: CycleInstance, movement: Movement, lam) -> bool:
    """Check a cycle movement.  Destinations are cycle coordinates (taken
    mod length); displacement is the shorter way round the cycle."""
    lam = as_rational(lam)
    if len(movement) != instance.n:
        return False
    unit = _common_unit(instance.unit, movement.unit, lam.denominator)
    k = unit // instance.unit
    L = instance.length_scaled * k
    r = instance.r * k
    xs = [v * k for v in instance.xs]
    ys = [y % L for y in movement.scaled(unit)]
    lam_s = lam.numerator * (unit // lam.denominator)
    if any(_cyclic_distance(y - x, L) > lam_s for x, y in zip(xs, ys)):
        return False
    if 2 * r >= L:
        return True
    starts = sorted((y - r) % L for y in ys)
    first = starts[0]
    reach = first + 2 * r
    for s in starts[1:] + [s + L for s in starts]:
        if s > reach:
            break
        reach = max(reach, s + 2 * r)
        if reach >= first + L:
            return True
    return reach >= first + L


# --------------------------------------------------------------------------
# shared helpers for solvers


def point_barrier_optimum(instance: LineInstance) -> tuple:
    """Optimum for a zero-length barrier: bring the closest sensor to 0.

    Sensors it passes on the way are pulled along to its destination, which
    keeps the input order without moving anyone further than it moved.
    Returns ``(lam_scaled, movement)``.
    """
    best = min(range(instance.n),
               key=lambda i: max(0, abs(instance.xs[i]) - instance.rs[i]))
    need = max(0, abs(instance.xs[best]) - instance.rs[best])
    xs = instance.xs
    y = xs[best] - need if xs[best] > 0 else xs[best] + need
    ys = [min(x, y) for x in xs[:best]] + [y] + [max(x, y) for x in xs[best + 1:]]
    return need, Movement._from_scaled(ys, instance.unit, need)


def scale_lambda(lam: Fraction, unit: int) -> tuple:
    """Express ``lam`` over ``unit``: returns ``(numerator, extra_factor)``
    such that lam = numerator / (unit * extra_factor)."""
    num = lam.numerator * unit
    den = lam.denominator
    g = math.gcd(num, den)
    return num // g, den // g
