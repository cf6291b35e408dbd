"""Benchmark the compiled convolution kernel against the pure-Python one.

Measures representative coefficient-box products (the hot operation behind
curve-polynomial powers) and one end-to-end matrix computation with each
backend.  Run as ``python3 benchmarks/bench_kernels.py [--repeats N]``.
"""

import argparse
import random
import time
from math import prod

from alcurves import kernels
from alcurves.cartier import cartier_manin
from alcurves.curve import validate
from alcurves.differentials import MODEL_CTILDE


def _random_box(rng, dims, p):
    return [rng.randrange(p) for _ in range(prod(dims))]


def _best_of(repeats, fn):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _kernel_cases():
    rng = random.Random(20_260_815)
    cases = []
    for label, dims_a, dims_b, p in [
        ("univariate deg 60 x deg 60, p=7", (61,), (61,), 7),
        ("univariate deg 300 x deg 300, p=13", (301,), (301,), 13),
        ("bivariate 41x11 squared, p=13", (41, 11), (41, 11), 13),
        ("trivariate 25x7x7 squared, p=11", (25, 7, 7), (25, 7, 7), 11),
        ("quadrivariate 13x5x5x5 squared, p=5", (13, 5, 5, 5), (13, 5, 5, 5), 5),
    ]:
        a = _random_box(rng, dims_a, p)
        b = _random_box(rng, dims_b, p)
        cases.append((label, a, dims_a, b, dims_b, p))
    return cases


def _end_to_end(repeats):
    spec = validate(13, 3, (1, 2, 2), (0, 1, "z"))
    rows = []
    saved = kernels._ext
    try:
        for backend, ext in (("compiled", saved), ("python", None)):
            if backend == "compiled" and saved is None:
                continue
            kernels._ext = ext
            t = _best_of(repeats, lambda: cartier_manin(spec, MODEL_CTILDE))
            rows.append((f"cartier_manin N=3 A=(1,2,2) p=13 [{backend}]", t))
    finally:
        kernels._ext = saved
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5, help="timing repeats, best taken")
    args = parser.parse_args()

    print(f"active backend: {kernels.BACKEND}")
    print()
    print(f"{'workload':<45} {'python':>10} {'compiled':>10} {'speedup':>8}")
    print("-" * 77)
    for label, a, da, b, db, p in _kernel_cases():
        t_py = _best_of(args.repeats, lambda: kernels.mul_dense_mod_py(a, da, b, db, p))
        if kernels.BACKEND == "compiled":
            out_fast = kernels.mul_dense_mod(a, da, b, db, p)
            assert out_fast == kernels.mul_dense_mod_py(a, da, b, db, p), label
            t_c = _best_of(args.repeats, lambda: kernels.mul_dense_mod(a, da, b, db, p))
            print(f"{label:<45} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms {t_py / t_c:>7.1f}x")
        else:
            print(f"{label:<45} {t_py * 1e3:>8.2f}ms {'-':>10} {'-':>8}")
    print()
    for label, t in _end_to_end(args.repeats):
        print(f"{label:<45} {t * 1e3:>8.2f}ms")


if __name__ == "__main__":
    main()
