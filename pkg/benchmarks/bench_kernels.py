"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is run on both backends; results must be bit-identical.
"""
import argparse
import importlib
import sys
import timeit

from fracbuckle import _kernels_py
from fracbuckle.rootfind import assumption_a_bound
from fracbuckle.series import truncation


def workloads():
    p = truncation(0.527, 14)
    big = truncation(0.526, 21)
    xmax = assumption_a_bound(0.526, 21)
    xs = [30.0 * i / 9999 for i in range(10000)]
    return {
        "horner_comp x10k (deg 14)": lambda k: k.horner_comp_many(p._c, xs),
        "first_sign_change (deg 21)": lambda k: k.first_sign_change(
            big._c, big._d, xmax, xmax / 1024, 10),
        "bisect to 1e-12 (deg 14)": lambda k: k.bisect(p._c, 17.0, 17.6, 1e-12, 200),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    try:
        compiled = importlib.import_module("fracbuckle._kernels")
    except ImportError:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'workload':32s} {'python [ms]':>12s} {'compiled [ms]':>14s} {'speedup':>8s}  equal")
    all_equal = True
    for name, fn in workloads().items():
        equal = fn(_kernels_py) == fn(compiled)
        all_equal &= equal
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:32s} {t_py * 1e3:12.3f} {t_c * 1e3:14.3f} {t_py / t_c:8.1f}  {equal}")
    return 0 if all_equal else 1


if __name__ == "__main__":
    sys.exit(main())
