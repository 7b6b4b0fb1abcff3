"""
Equal ranges, on a line and on a cycle
======================================

With one shared range the sensors can keep their order, and the optimum is
one of a small family of closed-form candidates.  The cycle version wraps
the same idea around.
"""

from barriercover import (CycleInstance, LineInstance, candidate_arrays,
                          solve_cycle, solve_on_barrier, solve_uniform)

line = LineInstance([1, 2, 6], [1, 1, 1], 6)
lam, move = solve_uniform(line)
print("line optimum", lam, [str(y) for y in move.destinations])

# every sensor already sits on [0, L], so the linear-time shortcut applies
print("shortcut     ", solve_on_barrier(line)[0])

# the candidate arrays the search runs over (scaled back to rationals)
for k, row in enumerate(candidate_arrays(line).materialize()):
    print(f"  array {k}:", [str(v) for v in row])

ring = CycleInstance([1, 2, 3, 4], 1, 8)
lam, move = solve_cycle(ring)
print("cycle optimum", lam, [str(y) for y in move.destinations])
