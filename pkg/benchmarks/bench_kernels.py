"""Compare the compiled and pure-Python element kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--types F4,E6]
"""

import argparse
import random
import timeit

from stablepieces import _pykernels as py
from stablepieces.rootsys import build
from stablepieces.weyl import group_order

try:
    from stablepieces import _ckernels as cy
except ImportError:
    cy = None


def workloads(kern, rs, order, sample):
    cart, r = rs.cart_flat, rs.rank
    mats = [kern.from_word(w, cart, r) for w in sample]
    pairs = list(zip(mats, reversed(mats)))
    full = 1 << r
    return {
        "enumerate": lambda: kern.enumerate_subgroup(cart, r, full - 1, order),
        "length": lambda: [kern.length(m, cart, r) for m in mats],
        "reduced_word": lambda: [kern.reduced_word(m, cart, r) for m in mats],
        "inverse": lambda: [kern.inverse(m, cart, r) for m in mats],
        "mul": lambda: [kern.mul(a, b, r) for a, b in pairs],
        "bruhat_leq": lambda: [kern.bruhat_leq(a, b, cart, r) for a, b in pairs[:200]],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--types", default="B4,F4,E6")
    args = ap.parse_args()
    if cy is None:
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'type':<5} {'kernel':<13} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for t in args.types.split(","):
        rs = build(t)
        order = group_order(rs)
        rng = random.Random(0)
        sample = [tuple(rng.randrange(rs.rank) for _ in range(rng.randint(0, 3 * rs.rank)))
                  for _ in range(1000)]
        py_w = workloads(py, rs, order, sample)
        cy_w = workloads(cy, rs, order, sample) if cy else {}
        for name, fn in py_w.items():
            tp = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            if cy:
                tc = min(timeit.repeat(cy_w[name], number=1, repeat=args.repeat))
                print(f"{t:<5} {name:<13} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
            else:
                print(f"{t:<5} {name:<13} {tp:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
