"""Random instance builders and hypothesis strategies shared by the tests."""
import random
from fractions import Fraction

from hypothesis import strategies as st

from barriercover import CycleInstance, InfeasibleInstanceError, LineInstance


def _rat(rng, lo, hi, den):
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_line(rng, n, uniform=False, inside=False, den=4, span=10):
    """A valid LineInstance with rational coordinates over ``1/den``.

    ``L`` is at most ``span``; positions lie in ``[-0.4 span, 1.4 span]``
    (or in ``[0, L]`` when ``inside``).
    """
    reach = (2 * span) // 5
    while True:
        L = _rat(rng, 0, span, den)
        if inside:
            xs = sorted(Fraction(rng.randint(0, int(L * den)), den) for _ in range(n))
        else:
            xs = sorted(_rat(rng, -reach, span + reach, den) for _ in range(n))
        r0 = max(Fraction(1, den), _rat(rng, 0, 4, den))
        rs = [r0] * n if uniform else \
            [max(Fraction(1, den), _rat(rng, 0, 4, den)) for _ in range(n)]
        try:
            return LineInstance(xs, rs, L)
        except InfeasibleInstanceError:
            continue


def random_cycle(rng, n, den=4):
    """A valid CycleInstance with ``n`` distinct positions and ``L <= 2nr``."""
    while True:
        r = max(Fraction(1, den), _rat(rng, 0, 4, den))
        L = Fraction(rng.randint(1, int(2 * n * r * den)), den)
        slots = int(L * den)
        if slots < n:
            continue
        xs = sorted(Fraction(v, den) for v in rng.sample(range(slots), n))
        return CycleInstance(xs, r, L)


def seeded(seed):
    return random.Random(seed)


# hypothesis ---------------------------------------------------------------

quarters = st.integers(-16, 56).map(lambda v: Fraction(v, 4))
ranges = st.integers(1, 16).map(lambda v: Fraction(v, 4))
lambdas = st.integers(0, 40).map(lambda v: Fraction(v, 8))


@st.composite
def line_instances(draw, max_n=6, uniform=False, inside=False):
    n = draw(st.integers(1, max_n))
    L = draw(st.integers(0, 40).map(lambda v: Fraction(v, 4)))
    if inside:
        xs = draw(st.lists(st.integers(0, int(4 * L)), min_size=n, max_size=n))
        xs = [Fraction(v, 4) for v in xs]
    else:
        xs = draw(st.lists(quarters, min_size=n, max_size=n))
    if uniform:
        rs = [draw(ranges)] * n
    else:
        rs = draw(st.lists(ranges, min_size=n, max_size=n))
    total = 2 * sum(rs)
    if total < L:
        # scale ranges up so the instance is coverable
        k = int(L / total) + 1
        rs = [r * k for r in rs]
    return LineInstance(sorted(xs), rs, L)


@st.composite
def cycle_instances(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    r = draw(ranges)
    L = draw(st.integers(max(1, n), int(8 * n * r)).map(lambda v: Fraction(v, 4)))
    slots = int(4 * L)
    picks = draw(st.lists(st.integers(0, slots - 1), min_size=n, max_size=n,
                          unique=True))
    return CycleInstance(sorted(Fraction(v, 4) for v in picks), r, L)
