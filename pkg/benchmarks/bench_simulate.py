"""Time the compiled and pure-Python simulation kernels on the same workloads.

    python benchmarks/bench_simulate.py --columns 100000 --repeat 3
"""

import argparse
import timeit

from carrychain import _pykernel
from carrychain.simulator import KERNELS

WORKLOADS = [(2, 2), (2, 3), (3, 3), (10, 2), (10, 8)]


def best_time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--columns", type=int, default=100_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    ckernel = KERNELS.get("cython")
    if ckernel is None:
        print("compiled kernel not available; timing pure Python only")

    print(f"{'base':>5} {'addends':>8} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for b, m in WORKLOADS:
        py = best_time(lambda: _pykernel.simulate_carries(b, m, args.columns, args.seed),
                       args.repeat)
        if ckernel is None:
            print(f"{b:>5} {m:>8} {py:>11.4f} {'-':>11} {'-':>8}")
            continue
        if ckernel.simulate_carries(b, m, 1000, args.seed) != _pykernel.simulate_carries(
                b, m, 1000, args.seed):
            raise SystemExit(f"kernels disagree for base {b}, {m} addends")
        cy = best_time(lambda: ckernel.simulate_carries(b, m, args.columns, args.seed),
                       args.repeat)
        print(f"{b:>5} {m:>8} {py:>11.4f} {cy:>11.4f} {py / cy:>7.0f}x")


if __name__ == "__main__":
    main()
