"""Compiled vs pure-Python phase-I simplex on random feasibility problems.

Usage: python benchmarks/bench_simplex.py [--problems 200] [--dim 8] [--rows 24]

Both backends share the tableau construction; only the pivot loop differs.
The script also checks that they agree on feasibility and pivot counts.
"""
import argparse
import time

import numpy as np

from conpatt.reach import lp


def problems(count, dim, rows, seed):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        A = rng.normal(size=(rows, dim))
        # half the instances are shifted away from the origin to force infeasibility
        b = rng.normal(size=rows) + (0.5 if rng.random() < 0.5 else -2.0)
        out.append((A, b))
    return out


def run(backend, probs):
    t0 = time.perf_counter()
    res = [lp.phase_one(A, b, backend=backend) for A, b in probs]
    return time.perf_counter() - t0, res


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--problems", type=int, default=200)
    ap.add_argument("--dim", type=int, default=8)
    ap.add_argument("--rows", type=int, default=24)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    probs = problems(args.problems, args.dim, args.rows, args.seed)
    t_py, r_py = run("python", probs)
    print(f"python   {t_py:8.3f} s  ({1e3 * t_py / len(probs):.2f} ms/problem)")
    if lp._simplex_ext is None:
        print("compiled backend not built; install with a C compiler and Cython")
        return
    t_c, r_c = run("compiled", probs)
    print(f"compiled {t_c:8.3f} s  ({1e3 * t_c / len(probs):.2f} ms/problem)  speedup {t_py / t_c:.1f}x")
    agree = sum(a.feasible == b.feasible and a.pivots == b.pivots for a, b in zip(r_py, r_c))
    feas = sum(r.feasible for r in r_c)
    print(f"agreement {agree}/{len(probs)}  feasible {feas}/{len(probs)}")


if __name__ == "__main__":
    main()
