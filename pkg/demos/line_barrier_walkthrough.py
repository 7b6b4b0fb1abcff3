"""
Moving sensors onto a line barrier
==================================

Two sensors with different ranges have to cover the segment [0, 6].  We ask
the decision procedure about a few budgets, then let the optimiser find the
smallest one.
"""

from fractions import Fraction

from barriercover import LineInstance, decide_eq, decide_le, preprocess, solve

inst = LineInstance(positions=[1, 5], ranges=[1, 2], length=6)
pre = preprocess(inst)

# a budget of 3/4 is not enough: after the first sensor the frontier sits at 2
# and the second one cannot bring its left end back that far
for lam in [Fraction(3, 4), Fraction(1), Fraction(2)]:
    out = decide_le(pre, lam)
    print(f"lam = {lam}: {'feasible' if out else 'infeasible'}")
    if out:
        print("   destinations", [str(y) for y in out.movement.destinations])
        print("   cover order  ", out.critical, out.kinds)

lam_star, move = solve(pre)
print("optimum", lam_star, "exact:", decide_eq(pre, lam_star))
print("witness", [str(y) for y in move.destinations])
