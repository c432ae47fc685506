"""Per-prime unit-circle samples over a zero table, and their statistics.

For prime p each ordinate t maps to p^{it} on the circle; the matching
point on [0,1) is frac(t*log p / (2*pi*q_c)) where q_c >= 1 stretches the
reduction window so q_c fundamental periods fold into one histogram.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .primes import is_prime
from .zeros import TWO_PI, ZeroTable


@dataclass(frozen=True)
class SectorSample:
    prime: int
    compression: int
    values: np.ndarray   # complex, unit modulus
    reduced: np.ndarray  # floats in [0,1)

    def __len__(self) -> int:
        return int(self.values.size)


def sector_sample(zeros: ZeroTable, p: int, compression: int = 1) -> SectorSample:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if compression < 1:
        raise ValueError("compression must be a positive integer")
    t = zeros.ordinates
    phase = t * math.log(p)
    values = np.exp(1j * phase)
    reduced = np.mod(phase / (TWO_PI * compression), 1.0)
    values.setflags(write=False)
    reduced.setflags(write=False)
    return SectorSample(p, compression, values, reduced)


@dataclass(frozen=True)
class Histogram:
    bin_count: int
    edges: np.ndarray
    counts: np.ndarray
    total: int


def histogram(values, bins: int) -> Histogram:
    """Counts over the uniform partition of [0,1) into ``bins`` cells.

    Bin membership is decided against the actual float edges k/bins, not
    by multiply-and-floor, so values sitting exactly on an edge land in
    the bin whose closed left end they equal.
    """
    if bins < 1:
        raise ValueError("bins must be >= 1")
    v = np.asarray(values, dtype=np.float64)
    if v.size and (v.min() < 0.0 or v.max() >= 1.0):
        raise ValueError("histogram input outside [0,1)")
    edges = np.arange(bins + 1, dtype=np.float64) / bins
    idx = np.searchsorted(edges, v, side="right") - 1
    counts = np.bincount(idx, minlength=bins).astype(np.int64)
    edges.setflags(write=False)
    counts.setflags(write=False)
    return Histogram(bins, edges, counts, int(v.size))


def histogram_entropy(h: Histogram) -> float:
    """Shannon entropy of the bin frequencies, in nats."""
    if h.total <= 0:
        raise ValueError("entropy of an empty histogram")
    p = h.counts[h.counts > 0] / h.total
    return float(-np.sum(p * np.log(p)))


@dataclass(frozen=True)
class BiDistribution:
    primes: tuple[int, int]
    transform: tuple[tuple[int, int], tuple[int, int]]
    alpha: tuple[float, float]
    points: np.ndarray  # shape (N, 2), both coordinates in [0,1)
    grid: np.ndarray    # bins x bins counts, row index = x bin


def bi_distribution(zeros: ZeroTable, p1: int, p2: int, matrix,
                    bins: int = 50) -> BiDistribution:
    """Joint fractional parts of (a1*t, a2*t) where M a = (log p1, log p2)/2pi.

    The 2x2 integer system is inverted exactly (adjugate over determinant)
    before any floating arithmetic touches it.
    """
    for p in (p1, p2):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    if bins < 1:
        raise ValueError("bins must be >= 1")
    (a, b), (c, d) = matrix
    for entry in (a, b, c, d):
        if entry != int(entry):
            raise ValueError("transform entries must be integers")
    a, b, c, d = int(a), int(b), int(c), int(d)
    det = a * d - b * c
    if det == 0:
        raise ValueError("transform matrix is singular")
    l1, l2 = math.log(p1), math.log(p2)
    alpha1 = (d * l1 - b * l2) / (TWO_PI * det)
    alpha2 = (a * l2 - c * l1) / (TWO_PI * det)
    t = zeros.ordinates
    # mod of a tiny negative value can round up to exactly 1.0; fold it back
    x = np.mod(alpha1 * t, 1.0)
    y = np.mod(alpha2 * t, 1.0)
    x = np.where(x == 1.0, 0.0, x)
    y = np.where(y == 1.0, 0.0, y)
    edges = np.arange(bins + 1, dtype=np.float64) / bins
    ix = np.searchsorted(edges, x, side="right") - 1
    iy = np.searchsorted(edges, y, side="right") - 1
    grid = np.bincount(ix * bins + iy, minlength=bins * bins)
    grid = grid.reshape(bins, bins).astype(np.int64)
    points = np.column_stack([x, y])
    points.setflags(write=False)
    grid.setflags(write=False)
    return BiDistribution((p1, p2), ((a, b), (c, d)), (alpha1, alpha2),
                          points, grid)
