"""Minimum max-movement barrier coverage, computed exactly.

Line barriers with arbitrary ranges (``solve``), equal ranges
(``solve_uniform``, ``solve_on_barrier``) and cycles with equal ranges
(``solve_cycle``).  All values are :class:`fractions.Fraction`.
"""
from .core import (BarrierError, CycleInstance, DecisionOutcome,
                   InfeasibleInstanceError, LineInstance, Movement,
                   SolverInvariantError, as_rational, format_rational,
                   verify_coverage, verify_cycle_coverage)
from .cycle import solve_cycle
from .decision import (PreprocessedInstance, decide_eq, decide_le, decide_lt,
                       preprocess)
from .optimize import solve
from .special import solve_on_barrier
from .uniform import (candidate_arrays, decide_uniform, decompose_groups,
                      solve_uniform)
from .search import search_sorted_arrays

__all__ = [
    "BarrierError", "CycleInstance", "DecisionOutcome", "InfeasibleInstanceError",
    "LineInstance", "Movement", "PreprocessedInstance", "SolverInvariantError",
    "as_rational", "candidate_arrays", "decide_eq", "decide_le", "decide_lt",
    "decide_uniform", "decompose_groups", "format_rational", "preprocess",
    "search_sorted_arrays", "solve", "solve_cycle", "solve_on_barrier",
    "solve_uniform", "verify_coverage", "verify_cycle_coverage",
]

__version__ = "0.1.0"
