"""Compare the compiled and pure-Python kernels on seeded random graphs.

    python3 benchmarks/bench_kernels.py [--sizes 10 14 18] [--graphs 20]

Both backends are imported side by side, so one process times both.  Outputs are
checked for equality before any timing is reported.
"""

from __future__ import annotations

import argparse
import time

from kegraph.kernels import available_backends
from kegraph.search import erdos_renyi

KERNELS = {
    "omega": lambda k, adj: k.maximum_independent_sets(adj, 100_000),
    "independent": lambda k, adj: k.independent_sets(adj, False),
    "critical": lambda k, adj: k.critical_independent_sets(adj),
    "all-subsets d": lambda k, adj: k.max_difference_all_subsets(adj),
}


def timed(fn, graphs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for adj in graphs:
            fn(adj)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 14, 18])
    ap.add_argument("--graphs", type=int, default=20)
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is available")
    names = list(backends)
    print(f"{'kernel':<14} {'n':>3} " + " ".join(f"{b + ' (ms)':>14}" for b in names) + f" {'speedup':>9}")
    for n in args.sizes:
        graphs = [erdos_renyi(n, args.p, seed).adj for seed in range(args.graphs)]
        for kname, call in KERNELS.items():
            results = {b: [call(mod, adj) for adj in graphs] for b, mod in backends.items()}
            first = results[names[0]]
            if any(r != first for r in results.values()):
                raise SystemExit(f"backends disagree on {kname} at n={n}")
            times = {b: timed(lambda adj, m=mod: call(m, adj), graphs, args.repeat) for b, mod in backends.items()}
            ratio = times["python"] / times["cython"] if "cython" in times else 1.0
            cells = " ".join(f"{1000 * times[b]:>14.2f}" for b in names)
            print(f"{kname:<14} {n:>3} {cells} {ratio:>8.1f}x")


if __name__ == "__main__":
    main()
