"""Numba kernels for direct O(M^2) pairwise summation.

Direct summation is the deliberate choice here (no FFT / multipole
acceleration) and the main performance hotspot; the kernels specialize
the common exponents and accumulate per-row partial sums in a fixed
order so results are reproducible run to run.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def pair_power_sum(cells: np.ndarray, p: float) -> float:
    """Sum of |c_i - c_j|^p over unordered pairs i < j; cells is (M, N) float64.

    Row-major accumulation: each row i is summed sequentially over j > i,
    row results are added in index order (deterministic).
    """
    M, N = cells.shape
    total = 0.0
    if p == -1.0:
        for i in range(M):
            row = 0.0
            for j in range(i + 1, M):
                d2 = 0.0
                for k in range(N):
                    dk = cells[i, k] - cells[j, k]
                    d2 += dk * dk
                row += 1.0 / np.sqrt(d2)
            total += row
    elif p == -2.0:
        for i in range(M):
            row = 0.0
            for j in range(i + 1, M):
                d2 = 0.0
                for k in range(N):
                    dk = cells[i, k] - cells[j, k]
                    d2 += dk * dk
                row += 1.0 / d2
            total += row
    else:
        half_p = 0.5 * p
        for i in range(M):
            row = 0.0
            for j in range(i + 1, M):
                d2 = 0.0
                for k in range(N):
                    dk = cells[i, k] - cells[j, k]
                    d2 += dk * dk
                row += d2**half_p
            total += row
    return total


@njit(cache=True)
def pair_distance_minmax(cells: np.ndarray) -> tuple:
    """(min, max) pair distance over i < j; cells is (M, N) float64."""
    M, N = cells.shape
    d2min = np.inf
    d2max = 0.0
    for i in range(M):
        for j in range(i + 1, M):
            d2 = 0.0
            for k in range(N):
                dk = cells[i, k] - cells[j, k]
                d2 += dk * dk
            if d2 < d2min:
                d2min = d2
            if d2 > d2max:
                d2max = d2
    return np.sqrt(d2min), np.sqrt(d2max)


@njit(cache=True)
def pair_distance_counts(cells: np.ndarray, edges: np.ndarray) -> np.ndarray:
    """Histogram of pair distances over i < j.

    Returns counts of length len(edges) + 1: slot 0 is d < edges[0], slot k
    is edges[k-1] <= d < edges[k], the last slot is d >= edges[-1].
    """
    M, N = cells.shape
    E = edges.shape[0]
    counts = np.zeros(E + 1, dtype=np.int64)
    for i in range(M):
        for j in range(i + 1, M):
            d2 = 0.0
            for k in range(N):
                dk = cells[i, k] - cells[j, k]
                d2 += dk * dk
            d = np.sqrt(d2)
            lo = 0
            hi = E
            while lo < hi:  # first edge index with d < edges[idx]
                mid = (lo + hi) // 2
                if d < edges[mid]:
                    hi = mid
                else:
                    lo = mid + 1
            counts[lo] += 1
    return counts
