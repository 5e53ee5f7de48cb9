"""Time the compiled and pure-Python finite-field kernels side by side.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from nonassoc import GF
from nonassoc import fixtures as fx
from nonassoc import kernels
from nonassoc.algebra import Algebra


def random_algebra(p, dim, seed):
    rng = random.Random(seed)
    F = GF(p)
    table = [[[F(rng.randrange(p)) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
    return Algebra(F, [f"e{i}" for i in range(dim)], table)


def cases():
    yield "ExFlex1 GF(7)", fx.exflex1(GF(7), 2).algebra
    yield "Ex31i GF(7)", fx.ex31i(GF(7), 2, 3).algebra
    yield "Ex31ii GF(7)", fx.ex31ii(GF(7), 2).algebra
    yield "M2 GF(5)", fx.matrix_algebra(GF(5), 2).algebra
    yield "random dim 4 GF(5)", random_algebra(5, 4, 1)


KERNELS = [
    ("idempotents", lambda k, t: k.enumerate_idempotents(*t)),
    ("flexible scan", lambda k, t: k.first_flexible_failure(*t)),
    ("power scan", lambda k, t: k.first_power_failure(*t, 5)),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    py = kernels.backend("python")
    try:
        cy = kernels.backend("cython")
    except ImportError:
        cy = None
        print("compiled kernels not built; timing the fallback only")
    print(f"{'algebra':<20} {'kernel':<14} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, A in cases():
        t = (A.int_table(), A.dim, A.field.p)
        for kname, fn in KERNELS:
            tp = min(timeit.repeat(lambda: fn(py, t), number=1, repeat=args.repeat)) * 1e3
            if cy is None:
                print(f"{name:<20} {kname:<14} {tp:>10.2f}")
                continue
            tc = min(timeit.repeat(lambda: fn(cy, t), number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<20} {kname:<14} {tp:>10.2f} {tc:>10.3f} {tp / tc:>7.0f}x")


if __name__ == "__main__":
    main()
