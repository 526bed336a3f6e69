"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is warmed up once (numba compiles on first call) and then timed
as the best of ``--repeat`` runs.
"""
import argparse
import time

import numpy as np

from wassbound import _kernels
from wassbound._accel import USE_NUMBA
from wassbound.innovations import InnovationModel
from wassbound.partitions import MIN2_EVEN, partition_labels


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    labels = partition_labels(4, 2, MIN2_EVEN)
    kappa = InnovationModel.student_t(9).cumulants()
    m, k = 12, 2
    L = m + k
    iu, ju = np.triu_indices(2 * L + 1)
    times = _kernels.pair_times(k, iu - L, ju - L)
    yield ("d_tilde table (m=12, k=2)",
           lambda use: _kernels.d_tilde_values(times, labels, 0.7, kappa, m, use_numba=use))

    eps = np.random.default_rng(0).standard_normal((20_000, 101 + 250))
    out = np.empty(eps.shape[0])
    yield ("ar1 statistics (20k paths, n=250)",
           lambda use: _kernels.ar1_statistics(eps, 0.7, 101, 250, 1, 0.0, out=out, use_numba=use))

    path_eps = np.random.default_rng(1).standard_normal(2_000_100)
    yield ("ar1 path (n=2e6)",
           lambda use: _kernels.ar1_path(path_eps, 0.7, 100, 2_000_000, use_numba=use))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not USE_NUMBA:
        print("numba unavailable or disabled; timing the numpy path only")
    print(f"{'kernel':38s} {'numpy [s]':>10s} {'numba [s]':>10s} {'speedup':>8s}")
    for name, fn in cases():
        t_np = best_of(lambda: fn(False), args.repeat)
        if USE_NUMBA:
            t_nb = best_of(lambda: fn(True), args.repeat)
            print(f"{name:38s} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:8.1f}x")
        else:
            print(f"{name:38s} {t_np:10.4f} {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
