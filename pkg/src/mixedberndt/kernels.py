"""Float64 brute-force kernels used as low-precision sanity oracles.

The box sum over ``[0, K]**N`` is the only hot inner loop that runs in
machine precision.  A numba-compiled version is used when numba imports and
``MIXEDBERNDT_NUMBA`` is not ``0``; otherwise the pure numpy path runs.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is an optional accelerator
    HAVE_NUMBA = False


def numba_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get("MIXEDBERNDT_NUMBA", "1") != "0"


def lattice_box_sum_numpy(a: np.ndarray, sigma: np.ndarray, omega: complex, s: int, K: int) -> complex:
    """``sum_{0 <= n_j <= K} prod sigma_j**n_j (omega + n.a)**(-s)``."""
    a = np.asarray(a, dtype=np.complex128)
    sigma = np.asarray(sigma, dtype=np.float64)
    N = a.shape[0]
    n = np.arange(K + 1)
    last = n[:, None] * a[-1] if N >= 1 else np.zeros((1, 1))
    last_sign = sigma[-1] ** n
    if N == 1:
        return complex(np.sum(last_sign * (omega + last[:, 0]) ** (-s)))
    grid = (n[:, None] * a[-2] + n[None, :] * a[-1]).ravel()
    grid_sign = (sigma[-2] ** n[:, None] * sigma[-1] ** n[None, :]).ravel()
    total = 0j
    for idx in np.ndindex(*([K + 1] * (N - 2))):
        base = omega + sum(i * a[j] for j, i in enumerate(idx))
        sign = np.prod([sigma[j] ** i for j, i in enumerate(idx)]) if idx else 1.0
        total += sign * np.sum(grid_sign * (base + grid) ** (-s))
    return complex(total)


if HAVE_NUMBA:
    @njit(cache=True, nogil=True)
    def _box_slice(a, sigma, base, sign0, s, K):
        # odometer over the trailing N-1 directions
        N = a.shape[0]
        idx = np.zeros(N, dtype=np.int64)
        total = 0j
        while True:
            z = base
            sign = sign0
            for j in range(1, N):
                z += idx[j] * a[j]
                if sigma[j] < 0 and idx[j] % 2 == 1:
                    sign = -sign
            w = 1.0 / z
            term = sign + 0j
            for _ in range(s):
                term *= w
            total += term
            j = N - 1
            while j >= 1:
                idx[j] += 1
                if idx[j] <= K:
                    break
                idx[j] = 0
                j -= 1
            if j < 1:
                break
        return total

    @njit(cache=True, nogil=True)
    def _lattice_box_sum_jit(a, sigma, omega, s, K):
        partial = np.zeros(K + 1, dtype=np.complex128)
        for i0 in range(K + 1):
            sign0 = -1.0 if (sigma[0] < 0 and i0 % 2 == 1) else 1.0
            partial[i0] = _box_slice(a, sigma, omega + i0 * a[0], sign0, s, K)
        return partial.sum()


def lattice_box_sum_numba(a, sigma, omega: complex, s: int, K: int) -> complex:
    if not HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    return complex(_lattice_box_sum_jit(
        np.asarray(a, dtype=np.complex128),
        np.asarray(sigma, dtype=np.float64),
        complex(omega), int(s), int(K),
    ))


def lattice_box_sum(a, sigma, omega: complex, s: int, K: int) -> complex:
    if numba_enabled():
        return lattice_box_sum_numba(a, sigma, omega, s, K)
    return lattice_box_sum_numpy(a, sigma, omega, s, K)
