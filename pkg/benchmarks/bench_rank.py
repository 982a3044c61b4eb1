"""Compare the compiled and pure-Python ranking kernels.

    python3 benchmarks/bench_rank.py --queries 500 --gallery 4000
"""
import argparse
import time

import numpy as np

from mtga.evalbench import rank


def make_problem(nq, ng, n_ids, n_cams, seed):
    rng = np.random.default_rng(seed)
    q_pids = rng.integers(n_ids, size=nq)
    g_pids = rng.integers(n_ids, size=ng)
    q_cams = rng.integers(n_cams, size=nq)
    g_cams = rng.integers(n_cams, size=ng)
    dist = rng.random((nq, ng))
    indices = np.argsort(dist, axis=1, kind="stable")
    return indices, q_pids, g_pids, q_cams, g_cams


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--queries", type=int, default=500)
    ap.add_argument("--gallery", type=int, default=4000)
    ap.add_argument("--ids", type=int, default=300)
    ap.add_argument("--cams", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    prob = make_problem(args.queries, args.gallery, args.ids, args.cams, args.seed)
    t_py, out_py = best_of(lambda: rank.eval_ranked(*prob, backend="python"), args.repeat)
    print(f"problem: {args.queries} queries x {args.gallery} gallery")
    print(f"python : {t_py * 1e3:9.2f} ms")
    if rank.BACKEND != "cython":
        print("cython : not built (pure-Python fallback active)")
        return
    t_cy, out_cy = best_of(lambda: rank.eval_ranked(*prob, backend="cython"), args.repeat)
    same = all(np.array_equal(a, b) for a, b in zip(out_py, out_cy))
    print(f"cython : {t_cy * 1e3:9.2f} ms  (x{t_py / t_cy:.1f}, identical output: {same})")


if __name__ == "__main__":
    main()
