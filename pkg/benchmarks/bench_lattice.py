"""Time the float64 lattice box sum with the numba and numpy kernels.

Usage: python3 benchmarks/bench_lattice.py [K ...]
"""

import sys
import time

from mixedberndt import kernels
from mixedberndt.berndt_integrals import A4, SIGMA_MIXED


def best_of(fn, repeat=3):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        times.append(time.perf_counter() - t0)
    return min(times), value


def main(argv):
    sizes = [int(k) for k in argv] or [10, 20, 40]
    a = [complex(x) for x in A4]
    if kernels.HAVE_NUMBA:
        kernels.lattice_box_sum_numba(a, SIGMA_MIXED, 2, 5, 2)  # compile outside the timing
    print(f"{'K':>4} {'numpy s':>10} {'numba s':>10} {'speedup':>8} {'|diff|':>10}")
    for K in sizes:
        t_np, v_np = best_of(lambda: kernels.lattice_box_sum_numpy(a, SIGMA_MIXED, 2, 5, K))
        if kernels.HAVE_NUMBA:
            t_nb, v_nb = best_of(lambda: kernels.lattice_box_sum_numba(a, SIGMA_MIXED, 2, 5, K))
            print(f"{K:>4} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.1f} {abs(v_np - v_nb):>10.2e}")
        else:
            print(f"{K:>4} {t_np:>10.4f} {'n/a':>10} {'n/a':>8} {'n/a':>10}")


if __name__ == "__main__":
    main(sys.argv[1:])
