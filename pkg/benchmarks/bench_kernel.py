"""Compare the pure-Python and native bitset kernels on realistic workloads.

Usage (from the repository root, after building the extension in place):

    PYTHONPATH=src python benchmarks/bench_kernel.py
    PYTHONPATH=src python benchmarks/bench_kernel.py --objects 20000 --attributes 24

Three workloads, all dominated by the closure kernel:
  closures     raw close() throughput over random attribute sets
  enumerate    full concept enumeration including covering edges
  mine         level-wise itemset mining with exact support counts
"""

import argparse
import random
import time

from semlat import FormalContext, MiningParams, enumerate_concepts, mine_frequent_itemsets
from semlat._kernel import HAVE_NATIVE


def build_rows(rng, n_objects, n_attributes, density):
    rows = []
    for _ in range(n_objects):
        row = [rng.random() < density for _ in range(n_attributes)]
        if not any(row):
            row[rng.randrange(n_attributes)] = True
        rows.append(row)
    return rows


def make_context(rows, backend):
    n_attributes = len(rows[0])
    objects = [f"o{i}" for i in range(len(rows))]
    attributes = [f"m{j:02d}" for j in range(n_attributes)]
    return FormalContext.from_bools(objects, attributes, rows, backend=backend)


def timed(fn):
    started = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - started


def bench_closures(ctx, rng, repeats):
    kernel = ctx.kernel
    masks = [rng.getrandbits(ctx.n_attributes) for _ in range(repeats)]

    def run():
        total = 0
        for mask in masks:
            extent, intent = kernel.close(mask)
            total += intent.bit_count()
        return total

    return timed(run)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--objects", type=int, default=4000)
    parser.add_argument("--attributes", type=int, default=24)
    parser.add_argument("--density", type=float, default=0.1)
    parser.add_argument("--theta", type=int, default=12)
    parser.add_argument("--closures", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=20240817)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    rows = build_rows(rng, args.objects, args.attributes, args.density)
    backends = ["pure"] + (["native"] if HAVE_NATIVE else [])
    if not HAVE_NATIVE:
        print("native kernel not built; benchmarking the pure kernel only")

    params = MiningParams(theta=args.theta, min_size=2, max_size=4)
    results = {}
    for backend in backends:
        ctx = make_context(rows, backend)
        checks, times = {}, {}
        checks["closures"], times["closures"] = bench_closures(
            ctx, random.Random(args.seed + 1), args.closures
        )
        lattice, times["enumerate"] = timed(lambda: enumerate_concepts(ctx, 10**6))
        checks["enumerate"] = (len(lattice), len(lattice.edges))
        mined, times["mine"] = timed(lambda: mine_frequent_itemsets(ctx, params))
        checks["mine"] = len(mined)
        results[backend] = (checks, times)
        print(
            f"[{backend:^6}] context {args.objects}x{args.attributes} "
            f"density {args.density}: "
            f"{checks['enumerate'][0]} concepts, {checks['mine']} itemsets"
        )

    print()
    header = f"{'workload':<12}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for workload in ("closures", "enumerate", "mine"):
        row = f"{workload:<12}"
        for backend in backends:
            row += f"{results[backend][1][workload]:>11.3f}s"
        if len(backends) == 2:
            pure_t = results["pure"][1][workload]
            native_t = results["native"][1][workload]
            row += f"{pure_t / native_t:>9.2f}x"
        print(row)

    if len(backends) == 2:
        assert results["pure"][0] == results["native"][0], "backends disagree!"
        print("\nbackends agree on every result")


if __name__ == "__main__":
    main()
