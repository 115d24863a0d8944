"""Compare the compiled census kernel against the pure-Python fallback.

Both backends count the same lattice simplex; the compiled one releases the
GIL, so it also scales with --workers while the fallback does not.

Usage: python benchmarks/bench_census.py [--n N] [--max-x X] [--prime P]
"""

import argparse
import time

from braidstat import _census_py
from braidstat.arithstat import _partition_bounds, build_lambda_table

try:
    from braidstat import _census_cy
except ImportError:
    _census_cy = None


def run(kernel, table, m, x, workers):
    from concurrent.futures import ThreadPoolExecutor

    bounds = _partition_bounds(x, workers)
    start = time.perf_counter()
    if len(bounds) == 1:
        results = [kernel.count_range(table, m, x, *bounds[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
            results = list(pool.map(lambda b: kernel.count_range(table, m, x, *b), bounds))
    elapsed = time.perf_counter() - start
    hist = [0] * (x + 1)
    inf = 0
    for h, i in results:
        inf += i
        for idx, c in enumerate(h):
            hist[idx] += c
    return elapsed, (hist, inf)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--max-x", dest="x", type=int, default=3000)
    ap.add_argument("--prime", type=int, default=3)
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()

    m = args.n - 1
    table = build_lambda_table(args.x, args.prime)

    print(f"census kernel benchmark: n={args.n} p={args.prime} x={args.x}")
    t_py, out_py = run(_census_py, table, m, args.x, workers=1)
    tuples = sum(out_py[0]) + out_py[1]
    print(f"  pure python, 1 worker:  {t_py:8.3f}s  ({tuples/t_py:,.0f} tuples/s)")

    if _census_cy is None:
        print("  compiled kernel not built; install with Cython available")
        return
    t_cy, out_cy = run(_census_cy, table, m, args.x, workers=1)
    assert out_cy == out_py, "backends disagree"
    print(f"  compiled,    1 worker:  {t_cy:8.3f}s  ({tuples/t_cy:,.0f} tuples/s)")
    t_cyw, out_cyw = run(_census_cy, table, m, args.x, workers=args.workers)
    assert out_cyw == out_py, "backends disagree"
    print(
        f"  compiled, {args.workers:2d} workers:  {t_cyw:8.3f}s  "
        f"({tuples/t_cyw:,.0f} tuples/s)"
    )
    print(f"  speedup (1 worker): {t_py/t_cy:.1f}x; with threads: {t_py/t_cyw:.1f}x")


if __name__ == "__main__":
    main()
