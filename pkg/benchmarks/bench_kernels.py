"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py            # n = 6..9
    python benchmarks/bench_kernels.py --max-n 10 # adds n = 10 (pure Python takes a while)
"""

import argparse
import time

import numpy as np

from m0nflag import _pykernels
from m0nflag.splits import enumerate_stable_splits

try:
    from m0nflag import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if _ckernels is None:
        print("compiled kernels not built; timing the pure-Python fallback only")
    else:
        backends.insert(0, ("cython", _ckernels))

    print(f"{'n':>3} {'kernel':<22} {'backend':<8} {'seconds':>10} {'speedup':>8}")
    for n in range(args.min_n, args.max_n + 1):
        blocks = [s.block for s in enumerate_stable_splits(n)]
        adj = _pykernels.compatibility_matrix(blocks, n)
        np.fill_diagonal(adj, 0)
        for name, call in (
            ("compatibility_matrix", lambda k: k.compatibility_matrix(blocks, n)),
            ("clique_counts", lambda k: k.clique_counts(adj)),
        ):
            timings = {}
            outputs = {}
            for label, k in backends:
                repeat = 1 if (label == "python" and n >= 9) else args.repeat
                timings[label], outputs[label] = best_of(lambda: call(k), repeat)
            if len(outputs) == 2:
                a, b = outputs.values()
                same = np.array_equal(a, b) if isinstance(a, np.ndarray) else a == b
                assert same, f"backends disagree on {name} at n={n}"
            for label in timings:
                speed = timings["python"] / timings[label] if label != "python" else 1.0
                print(f"{n:>3} {name:<22} {label:<8} {timings[label]:>10.4f} {speed:>7.1f}x")
        if _ckernels is not None:
            print(f"{'':>3} total cliques = {sum(_ckernels.clique_counts(adj))}")


if __name__ == "__main__":
    main()
