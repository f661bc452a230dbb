"""Compare the compiled and pure-Python paths of the hot kernels.

    python3 benchmarks/bench_kernels.py --n 100000 --pure-n 20000

Both paths run in this process: the compiled kernel and its ``py_func``.
Outputs are compared on the common prefix before any timing is reported.
Set SCHURWEYL_DISABLE_NUMBA=1 to make the "compiled" column pure as well.
"""
import argparse
import json
import time

import numpy as np

from schurweyl import _jit
from schurweyl._kernels import bracket_kernel, youngize_kernel
from schurweyl.ergodic import BernoulliSpec, sample_dense


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases(seed):
    yield "youngize k=3", BernoulliSpec(3, 0, (0.5, 0.3, 0.2), seed=seed), 3, 0
    yield "youngize k=2 l=2", BernoulliSpec(2, 2, (0.4, 0.2), (0.3, 0.1), seed=seed), 2, 2


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=100_000, help="word length for the compiled path")
    ap.add_argument("--pure-n", type=int, default=20_000, help="word length for the pure path")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="print one JSON object per case")
    args = ap.parse_args(argv)
    empty = np.zeros(0, dtype=np.int64)

    rows = []
    for name, spec, k, l in cases(args.seed):
        word = sample_dense(spec, args.n)
        cap = 4 * (l + 2) ** 2 + 16
        youngize_kernel(word[:10], k, l, empty, cap)  # compile outside the timing
        fast_t, fast = best_of(lambda: youngize_kernel(word, k, l, empty, cap), args.repeat)
        short = word[:args.pure_n]
        slow_t, slow = best_of(lambda: youngize_kernel.py_func(short, k, l, empty, cap), 1)
        check = youngize_kernel(short, k, l, empty, cap)
        for a, b in zip(check, slow):
            np.testing.assert_array_equal(a, b)
        rows.append((name, args.n, fast_t, args.pure_n, slow_t))

    w = 1 + (sample_dense(BernoulliSpec(2, 0, (0.5, 0.5), seed=args.seed), args.n))
    bracket_kernel(w[:10])
    fast_t, fast = best_of(lambda: bracket_kernel(w), args.repeat)
    slow_t, slow = best_of(lambda: bracket_kernel.py_func(w[:args.pure_n]), 1)
    assert slow[2] == bracket_kernel(w[:args.pure_n])[2]
    rows.append(("bracket k=2", args.n, fast_t, args.pure_n, slow_t))

    print(f"numba enabled: {_jit.ENABLED}")
    for name, n, ft, pn, st in rows:
        # per-letter cost makes the two word lengths comparable
        speedup = (st / pn) / (ft / n) if ft > 0 else float("inf")
        if args.json:
            print(json.dumps({"case": name, "n": n, "compiled_s": ft, "pure_n": pn, "pure_s": st,
                              "speedup_per_letter": speedup}))
        else:
            print(f"{name:18s} compiled n={n:>8d} {ft:8.4f}s   pure n={pn:>7d} {st:8.3f}s   "
                  f"per-letter speedup {speedup:7.1f}x")


if __name__ == "__main__":
    main()
