"""Solve the reduced system for every admissible prime in a range and summarise."""
import argparse
import time

from cyclic3.arith import admissible_primes, build_context
from cyclic3.asymptotics import bound_suite
from cyclic3.solver import all_solutions, min_pairwise_distance, residual


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-max", type=int, default=10_000)
    ap.add_argument("--p-min", type=int, default=7)
    args = ap.parse_args()

    t0 = time.perf_counter()
    primes = admissible_primes(args.p_min, args.p_max)
    worst = (0.0, None)
    closest = (float("inf"), None)
    bad = []
    for p in primes:
        ctx = build_context(p)
        sols = all_solutions(ctx)
        res = max(residual(ctx, s) for s in sols)
        sep = min_pairwise_distance(sols)
        worst = max(worst, (res, p), key=lambda t: t[0])
        closest = min(closest, (sep, p), key=lambda t: t[0])
        split = (sum(s.is_unimodular() for s in sols), sum(s.is_real() for s in sols))
        if split != (12, 8) or not bound_suite(ctx).ok:
            bad.append(p)
    print(f"primes checked     {len(primes)}")
    print(f"worst residual     {worst[0]:.3e} at p={worst[1]}")
    print(f"min separation     {closest[0]:.3e} at p={closest[1]}")
    print(f"split/bound issues {bad or 'none'}")
    print(f"elapsed            {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
