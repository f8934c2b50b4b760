#!/usr/bin/env python3
"""Drive the full verification battery and print one summary line per stage.

This reproduces everything the acceptance suite checks, at adjustable
scales, without pytest. Useful for eyeballing timings or pushing the
sweeps past the default ranges:

    python3 scripts/run_verification.py
    python3 scripts/run_verification.py --kmax 40 --zdg-nmax 400 --omega-nmax 10000
"""

import argparse
import random
import sys
import time
from itertools import combinations

from boxlab import (
    ResourceBudgetError,
    boxicity_exact,
    clique_sum_lower_bound,
    compressed_box_bound,
    compressed_zn,
    expand_compressed,
    factor,
    generalized_join,
    graph_of_intervals,
    is_box_one,
    is_interval_graph,
    join_cover,
    make_graph,
    make_plan,
    omega_chi_certificate,
    prime_power_rep,
    verify_cover,
    zdg_zn,
    zn_join_cover,
)
from boxlab.circular import chi_cover, circular_chi


def stage(name):
    def wrap(fn):
        def run(args):
            t0 = time.time()
            detail = fn(args)
            print(f"{name:<42} ok  {time.time() - t0:6.1f}s  {detail}")
        return run
    return wrap


@stage("circular covers (chromatic size, verified)")
def circular_stage(args):
    cases = 0
    for d in range(2, args.dmax + 1):
        for k in range(2 * d, args.kmax + 1):
            cover = chi_cover(k, d)
            assert len(cover) == circular_chi(k, d)
            assert verify_cover(cover)[0]
            assert all(is_interval_graph(graph_of_intervals(r))[0] for r in cover.reps)
            cases += 1
    return f"{cases} (k,d) cases"


@stage("omega = chi certificates on divisor graphs")
def omega_stage(args):
    count = 0
    for n in range(4, args.omega_nmax + 1):
        f = factor(n)
        if f.is_prime:
            continue
        omega_chi_certificate(f)
        count += 1
    return f"{count} composite N"


@stage("interval characterization + expansions")
def interval_stage(args):
    count = 0
    for n in range(4, args.zdg_nmax + 1):
        f = factor(n)
        if f.is_prime:
            continue
        g, _ = zdg_zn(n)
        assert is_box_one(n) == is_interval_graph(g)[0]
        expand_compressed(compressed_zn(n))
        if f.is_prime_power:
            p, e = next(iter(f.exponents.items()))
            assert graph_of_intervals(prime_power_rep(p, e)) == g
        count += 1
    return f"{count} composite N"


@stage("divisor-class covers within bound")
def cover_stage(args):
    count = 0
    for n in range(4, args.cover_nmax + 1):
        f = factor(n)
        if f.is_prime or f.is_prime_power:
            continue
        cover = zn_join_cover(compressed_zn(n))
        assert verify_cover(cover)[0]
        assert len(cover) <= compressed_box_bound(f)
        count += 1
    return f"{count} composite non-prime-power N"


@stage("random join synthesis + oracle sandwich")
def join_stage(args):
    rng = random.Random(args.seed)

    def random_graph(n):
        pairs = list(combinations(range(n), 2))
        return make_graph(n, [e for e in pairs if rng.random() < 0.5])

    sandwiches = 0
    for _ in range(args.join_trials):
        outer = random_graph(rng.randint(1, 4))
        parts = [random_graph(rng.randint(1, 4)) for _ in range(outer.n)]
        plan = make_plan(outer, parts)
        cover = join_cover(plan)
        assert verify_cover(cover)[0]
        joined, _ = generalized_join(outer, parts)
        part_box = [(boxicity_exact(p, 4)[0], p.is_complete()) for p in parts]
        bound = clique_sum_lower_bound(outer, part_box)
        try:
            res = boxicity_exact(joined, max_l=8)
        except ResourceBudgetError:
            continue
        if res is not None:
            assert bound <= res[0] <= len(cover)
            sandwiches += 1
    return f"{args.join_trials} trials, {sandwiches} sandwiches"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dmax", type=int, default=6)
    parser.add_argument("--kmax", type=int, default=30)
    parser.add_argument("--omega-nmax", type=int, default=5000)
    parser.add_argument("--zdg-nmax", type=int, default=300)
    parser.add_argument("--cover-nmax", type=int, default=200)
    parser.add_argument("--join-trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=20250810)
    args = parser.parse_args()
    for runner in (circular_stage, omega_stage, interval_stage, cover_stage, join_stage):
        runner(args)
    print("all stages passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
