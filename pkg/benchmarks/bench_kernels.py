"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 1]

Both backends run on the same inputs; results must agree before timings
are reported.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from lpa_lab import _pykernels, kernels
from lpa_lab.graph import _saturation_data, from_adjacency


def matrices(rng, count, n, lo=-9, hi=9):
    return [[[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)] for _ in range(count)]


def hs_inputs(rng, count, n):
    out = []
    for _ in range(count):
        g = from_adjacency([[rng.randint(1, 3) if rng.random() < 0.25 else 0 for _ in range(n)] for _ in range(n)])
        out.append((g.n, *_saturation_data(g)))
    return out


def bench(label, fn, inputs, repeat):
    best = min(timeit.repeat(lambda: [fn(*x) for x in inputs], number=1, repeat=repeat))
    return label, best / len(inputs) * 1e6


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if not kernels.COMPILED_AVAILABLE:
        print("compiled kernels not built; run `pip install --no-build-isolation -e .` first", file=sys.stderr)
        return 1
    compiled = kernels._compiled
    rng = random.Random(args.seed)
    cases = [
        ("snf 3x3", "snf", [(m,) for m in matrices(rng, 300, 3)]),
        ("snf 5x5", "snf", [(m,) for m in matrices(rng, 300, 5)]),
        ("det 4x4", "det", [(m,) for m in matrices(rng, 300, 4)]),
        ("det 6x6", "det", [(m,) for m in matrices(rng, 300, 6)]),
        ("hs_scan n=8", "hs_scan", hs_inputs(rng, 50, 8)),
        ("hs_scan n=12", "hs_scan", hs_inputs(rng, 10, 12)),
    ]
    print(f"{'kernel':<14}{'compiled us':>14}{'python us':>14}{'speedup':>10}")
    for label, name, inputs in cases:
        fc, fp = getattr(compiled, name), getattr(_pykernels, name)
        for x in inputs:
            if fc(*x) != fp(*x):
                print(f"{label}: backends disagree on {x}", file=sys.stderr)
                return 1
        _, tc = bench(label, fc, inputs, args.repeat)
        _, tp = bench(label, fp, inputs, args.repeat)
        print(f"{label:<14}{tc:>14.1f}{tp:>14.1f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
