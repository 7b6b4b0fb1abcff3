"""Command line: solve, decide, verify, generate and bench.

Exit codes: 0 success, 1 usage or parse error, 2 instance cannot be covered
at all (2*sum(r) < L, or L > 2nr on a cycle), 3 a decision or check came out
negative.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .core import (BarrierError, CycleInstance, InfeasibleInstanceError,
                   as_rational, verify_coverage, verify_cycle_coverage)
from .cycle import solve_cycle
from .decision import decide_eq, decide_le, decide_lt, preprocess
from .generate import random_instance
from .io import dump_instance, dump_solution, load_instance, load_solution
from .optimize import solve
from .special import solve_on_barrier
from .uniform import solve_uniform

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE_INSTANCE, EXIT_NEGATIVE = 0, 1, 2, 3

ALGORITHMS = ("auto", "general", "uniform", "special", "cycle")


def pick_algorithm(instance, forced: str = "auto") -> str:
    if forced != "auto":
        return forced
    if isinstance(instance, CycleInstance):
        return "cycle"
    if instance.uniform:
        return "special" if instance.on_barrier else "uniform"
    return "general"


def run_solver(instance, algorithm: str):
    """``(lambda_star, Movement)`` with the named algorithm."""
    if isinstance(instance, CycleInstance) != (algorithm == "cycle"):
        raise BarrierError(f"algorithm {algorithm!r} does not fit this instance kind")
    if algorithm == "cycle":
        return solve_cycle(instance)
    if algorithm == "general":
        return solve(preprocess(instance))
    if algorithm == "uniform":
        return solve_uniform(instance)
    if algorithm == "special":
        return solve_on_barrier(instance)
    raise BarrierError(f"unknown algorithm {algorithm!r}")


def _verify_movement(instance, movement, lam) -> bool:
    if isinstance(instance, CycleInstance):
        return verify_cycle_coverage(instance, movement, lam)
    return verify_coverage(instance, movement, lam)


# --------------------------------------------------------------------------
# subcommands


def cmd_solve(args) -> int:
    instance = load_instance(args.instance)
    forced = "uniform" if args.uniform and args.force_algorithm == "auto" \
        else args.force_algorithm
    algorithm = pick_algorithm(instance, forced)
    t0 = time.perf_counter()
    lam, movement = run_solver(instance, algorithm)
    elapsed = time.perf_counter() - t0
    text = dump_solution(lam, movement, args.output)
    if args.output is None:
        sys.stdout.write(text)
    print(f"{algorithm}: n={instance.n} lambda*={lam} ({elapsed:.3f}s)",
          file=sys.stderr)
    return EXIT_OK


def cmd_decide(args) -> int:
    instance = load_instance(args.instance)
    lam = as_rational(args.lam)
    if isinstance(instance, CycleInstance):
        star = solve_cycle(instance)[0]
        le, lt = star <= lam, star < lam
    else:
        pre = preprocess(instance)
        le = decide_le(pre, lam).feasible
        lt = decide_lt(pre, lam) if (args.strict or args.exact) else None
    if args.exact:
        ok = le and not lt
        print(f"lambda-star equals {lam}" if ok else f"lambda-star differs from {lam}")
    elif args.strict:
        ok = bool(lt)
        print(f"lambda-star below {lam}" if ok else f"lambda-star not below {lam}")
    else:
        ok = le
        print("feasible" if ok else "infeasible")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _oracle_reference(instance, lam_star):
    """Yields ``(name, passed)`` for whichever oracles fit the instance."""
    from . import oracle

    if isinstance(instance, CycleInstance):
        best = max([Fraction(0)] + oracle.cycle_candidates(instance))
        yield "max over pairwise cycle candidates", best == lam_star
        if instance.n <= 6:
            yield "exhaustive cycle oracle feasible at lambda*", \
                oracle.feasible_cycle_exhaustive(instance, lam_star)
            if lam_star > 0:
                yield "exhaustive cycle oracle infeasible just below", \
                    not oracle.feasible_cycle_exhaustive(
                        instance, lam_star - Fraction(1, 2 ** 40))
        return
    pre = preprocess(instance)
    yield "decision procedure says lambda* is exact", decide_eq(pre, lam_star)
    if instance.n <= oracle.MAX_EXHAUSTIVE:
        approx = oracle.optimum_bisect(instance)
        yield "exhaustive bisection within 2^-39", \
            abs(approx - lam_star) <= Fraction(1, 2 ** 39)
    if instance.uniform and instance.n <= 200:
        yield "uniform candidate enumeration", \
            oracle.optimum_uniform_enumerate(instance) == lam_star


def cmd_verify(args) -> int:
    instance = load_instance(args.instance)
    algorithm = pick_algorithm(instance, args.force_algorithm)
    lam_star, movement = run_solver(instance, algorithm)
    checks = [("solver witness covers at lambda*",
               _verify_movement(instance, movement, lam_star))]
    if args.solution:
        lam, sol = load_solution(args.solution)
        if len(sol) != instance.n:
            checks.append(("solution has one destination per sensor", False))
        else:
            checks.append(("solution covers at its lambda",
                           _verify_movement(instance, sol, lam)))
            checks.append(("solution lambda equals lambda*", lam == lam_star))
    checks.extend(_oracle_reference(instance, lam_star))
    ok = True
    for name, passed in checks:
        ok &= bool(passed)
        print(f"{'PASS' if passed else 'FAIL'} {name}")
    print(f"lambda* = {lam_star} ({algorithm})")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_generate(args) -> int:
    instance = random_instance(args.n, args.kind, args.uniform, args.seed,
                               args.span, args.inside)
    text = dump_instance(instance, args.output)
    if args.output is None:
        sys.stdout.write(text)
    return EXIT_OK


BENCH_SETUPS = {
    "general": dict(kind="line", uniform=False),
    "uniform": dict(kind="line", uniform=True),
    "special": dict(kind="line", uniform=True, inside=True),
    "cycle": dict(kind="cycle", uniform=True),
    "decide": dict(kind="line", uniform=False, inside=True),
}


def bench_rows(sizes, repeats, algorithms, seed=0):
    """Yields ``(algorithm, n, seconds)``; the best of ``repeats`` runs."""
    for name in algorithms:
        for n in sizes:
            instance = random_instance(n, seed=seed, **BENCH_SETUPS[name])
            if name == "decide":
                pre = preprocess(instance)
                lam = Fraction(instance.length_scaled, instance.unit)

                def job():
                    decide_le(pre, lam)
            else:
                def job():
                    run_solver(instance, name)
            best = None
            for _ in range(repeats):
                t0 = time.perf_counter()
                job()
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            yield name, n, best


def cmd_bench(args) -> int:
    sizes = [int(float(s)) for s in args.sizes.split(",") if s.strip()]
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    for a in algorithms:
        if a not in BENCH_SETUPS:
            raise BarrierError(f"unknown algorithm {a!r} for bench")
    if args.repeats < 1 or any(n < 1 for n in sizes):
        raise BarrierError("sizes and repeats must be positive")
    print("algorithm,n,seconds")
    for name, n, seconds in bench_rows(sizes, args.repeats, algorithms, args.seed):
        print(f"{name},{n},{seconds:.6f}", flush=True)
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barriercover",
        description="Exact min-max sensor movement for barrier coverage.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute lambda* and a witness movement")
    p.add_argument("instance")
    p.add_argument("--force-algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--uniform", action="store_true",
                   help="shorthand for --force-algorithm uniform")
    p.add_argument("-o", "--output", help="write the solution file here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decide", help="compare lambda* with a given value")
    p.add_argument("instance")
    p.add_argument("--lambda", dest="lam", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", action="store_true", help="is lambda* < value")
    mode.add_argument("--exact", action="store_true", help="is lambda* == value")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="check solver output against the oracles")
    p.add_argument("instance")
    p.add_argument("--solution", help="also check this solution file")
    p.add_argument("--force-algorithm", choices=ALGORITHMS, default="auto")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("line", "cycle"), default="line")
    p.add_argument("--uniform", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--span", type=int, default=None,
                   help="coordinate span (default 4n)")
    p.add_argument("--inside", action="store_true",
                   help="keep every sensor inside [0, L]")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="time the solvers; CSV on stdout")
    p.add_argument("--sizes", default="1000,10000,100000")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--algorithms", default="uniform,special,cycle")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InfeasibleInstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE_INSTANCE
    except (BarrierError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
