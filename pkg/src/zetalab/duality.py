"""Truncated explicit-formula detectors on uniform grids.

Two directions of the same duality: a cosine sum over zero ordinates whose
maxima sit at prime powers, and a von Mangoldt weighted cosine sum over
prime powers whose maxima sit at zero ordinates.  Signs are folded so the
targets appear as peaks.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .primes import primes_up_to
from .sums import pairwise_sum, parallel_map
from .zeros import ZeroTable

_GRID_CHUNK = 512


class Direction(enum.Enum):
    zeros_to_primes = "zeros_to_primes"
    primes_to_zeros = "primes_to_zeros"


@dataclass(frozen=True)
class DualitySeries:
    grid: np.ndarray
    values: np.ndarray
    truncation: int
    direction: Direction


def _make_grid(lo: float, hi: float, step: float) -> np.ndarray:
    if step <= 0:
        raise ValueError("step must be positive")
    if hi < lo:
        raise ValueError("empty grid")
    n = int(math.floor((hi - lo) / step * (1.0 + 1e-12))) + 1
    return lo + step * np.arange(n)


def _evaluate(grid, freqs, weights, workers):
    """-sum_k weights_k cos(grid_i * freqs_k), chunked over the grid."""
    def work(sl):
        phase = np.multiply.outer(grid[sl], freqs)
        if weights is None:
            return -pairwise_sum(np.cos(phase))
        return -pairwise_sum(np.cos(phase) * weights)

    slices = [slice(k, k + _GRID_CHUNK) for k in range(0, len(grid),
                                                       _GRID_CHUNK)]
    parts = parallel_map(work, slices, workers)
    return np.concatenate(parts) if parts else np.zeros(0)


def zeros_to_primes_series(zeros: ZeroTable, count: int, x_min: float,
                           x_max: float, step: float,
                           workers: int = 1) -> DualitySeries:
    """Detector -sum_{n<=count} cos(t_n log x); maxima mark prime powers."""
    if count < 0 or count > len(zeros):
        raise ValueError(f"count must be in [0, {len(zeros)}]")
    if x_min <= 1.0:
        raise ValueError("x_min must exceed 1")
    grid = _make_grid(x_min, x_max, step)
    t = zeros.ordinates[:count]
    vals = _evaluate(np.log(grid), t, None, workers)
    return DualitySeries(grid, vals, count, Direction.zeros_to_primes)


def primes_to_zeros_series(bound: int, t_min: float, t_max: float,
                           step: float, workers: int = 1) -> DualitySeries:
    """Detector -sum_{n<=bound} Lambda(n) n^{-1/2} cos(t log n).

    Prime powers are enumerated exactly by sieving, so the von Mangoldt
    support never depends on floating-point log comparisons.
    """
    if bound < 1:
        raise ValueError("prime power bound must be >= 1")
    if t_min < 0:
        raise ValueError("t_min must be >= 0")
    grid = _make_grid(t_min, t_max, step)
    freqs, weights = [], []
    for p in primes_up_to(bound):
        lp = math.log(p)
        pm = p
        while pm <= bound:
            freqs.append(math.log(pm))
            weights.append(lp / math.sqrt(pm))
            pm *= p
    vals = _evaluate(grid, np.array(freqs), np.array(weights), workers)
    return DualitySeries(grid, vals, bound, Direction.primes_to_zeros)


def find_peaks(series: DualitySeries, min_prominence: float = 0.0):
    """Interior points strictly above both neighbors by >= min_prominence."""
    if min_prominence < 0:
        raise ValueError("min_prominence must be >= 0")
    v = series.values
    g = series.grid
    if v.size < 3:
        raise ValueError("series needs at least 3 points")
    mid = v[1:-1]
    ok = ((mid > v[:-2]) & (mid > v[2:])
          & (mid - v[:-2] >= min_prominence)
          & (mid - v[2:] >= min_prominence))
    return [(float(g[i + 1]), float(v[i + 1])) for i in np.nonzero(ok)[0]]
