"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--n 5] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from icnic import IC_PLANE, enumerate_maximal_small, gen_H_prime, gen_M_prime, kernels


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_faces(repeat):
    succs = [list(gen_H_prime(k).succ) for k in (5, 10)] + [list(gen_M_prime(10).succ)]

    def run():
        for _ in range(200):
            for s in succs:
                kernels.trace_faces(s)

    return _best(run, repeat)


def bench_enum(n, repeat):
    return _best(lambda: enumerate_maximal_small(n, IC_PLANE), repeat)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=5, help="vertex count for the enumeration run")
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    rows = []
    for name in kernels.available():
        kernels.use_backend(name)
        rows.append((name, bench_faces(args.repeat), bench_enum(args.n, args.repeat)))
    print(f"{'backend':10} {'trace_faces':>12} {'enum n=' + str(args.n):>12}")
    for name, tf, en in rows:
        print(f"{name:10} {tf:11.3f}s {en:11.3f}s")
    if len(rows) == 2:
        c, py = (r for r in sorted(rows))
        print(f"speedup    {py[1] / c[1]:11.1f}x {py[2] / c[2]:11.1f}x")


if __name__ == "__main__":
    main()
