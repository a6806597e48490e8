"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from bvfla import _pykernels

try:
    from bvfla import _ckernels
except ImportError:
    _ckernels = None


def workloads(mod):
    rng = random.Random(0)
    tables4 = mod.enumerate_tables(4, 0)[0]
    sample = [tables4[rng.randrange(len(tables4))] for _ in range(200)]
    degrees = [([rng.randint(0, 10) for _ in range(4)], [-rng.randint(0, 10) for _ in range(4)])
               for _ in range(200)]

    def enumerate4():
        mod.enumerate_tables(4, 0)

    def compose():
        for t, (p, q) in zip(sample, degrees):
            mod.compose(t, 4, p, q, p, q)

    def violation():
        for t, (p, q) in zip(sample, degrees):
            for kind in range(6):
                mod.violation(t, 4, kind, p, q)

    def close():
        for t, (p, q) in zip(sample, degrees):
            mod.close(t, 4, 31, p, q)

    def canonical():
        for t in sample:
            mod.canonical_form(t, 4)

    def laws():
        for t in sample:
            for law in range(6):
                mod.law_failure(t, 4, law)

    return {
        "enumerate order 4": enumerate4,
        "compose x200": compose,
        "violation x1200": violation,
        "close x200": close,
        "canonical form x200": canonical,
        "law checks x1200": laws,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = workloads(_pykernels)
    cy = workloads(_ckernels) if _ckernels is not None else {}
    print(f"{'workload':<22} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}")
    for name, fn in py.items():
        tp = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        if name in cy:
            tc = min(timeit.repeat(cy[name], number=1, repeat=args.repeat))
            print(f"{name:<22} {tp:>11.4f} {tc:>11.4f} {tp / tc:>7.1f}x")
        else:
            print(f"{name:<22} {tp:>11.4f} {'n/a':>11}")


if __name__ == "__main__":
    main()
