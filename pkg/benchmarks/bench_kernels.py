"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import random
import timeit

from genus0._kernels import backends


def workloads():
    rng = random.Random(0)
    # truncated products of the size seen when expanding eta products at N = 25
    a = [rng.randint(-10**30, 10**30) for _ in range(200)]
    b = [rng.randint(-10**30, 10**30) for _ in range(200)]
    yield "mul_trunc 200x200 bigint", lambda m: m.mul_trunc(a, b, 200)
    small = [rng.randint(-10**6, 10**6) for _ in range(400)]
    yield "mul_trunc 400x400 small", lambda m: m.mul_trunc(small, small, 400)
    # unsolvable norm equations exhaust the whole search box
    yield "norm_search 2 over Q(sqrt 5), bound 200", lambda m: m.norm_search(2, 1, 5, 200)
    yield "norm_search 3 over Q(i), bound 300", lambda m: m.norm_search(3, 1, -1, 300)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = backends()
    if "cython" not in impls:
        print("compiled extension not built; only the Python backend is available")
    for label, fn in workloads():
        times = {}
        for name, mod in impls.items():
            times[name] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        row = "  ".join(f"{k}={v * 1e3:9.2f} ms" for k, v in times.items())
        if len(times) == 2:
            row += f"  speedup x{times['python'] / times['cython']:.1f}"
        print(f"{label:42s} {row}")


if __name__ == "__main__":
    main()
