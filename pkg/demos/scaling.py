"""
How the solvers scale
=====================

Random instances of growing size; the uniform and cycle solvers should look
close to linear, the general one grows faster.
"""

from barriercover.cli import bench_rows

for name, n, seconds in bench_rows([1000, 10000, 100000], 1,
                                   ["uniform", "special", "cycle"]):
    print(f"{name:8s} n={n:<7d} {seconds:.3f}s")

for name, n, seconds in bench_rows([250, 500, 1000, 2000], 1, ["general"]):
    print(f"{name:8s} n={n:<7d} {seconds:.3f}s")
