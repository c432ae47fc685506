"""Deterministic reductions shared by every numeric module.

The reduction tree of ``pairwise_sum`` depends only on the length of the
summed axis, never on how callers chunk the surrounding work.  That is what
makes results bit-identical across worker counts.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np


def pairwise_sum(x, axis: int = -1):
    """Sum along ``axis`` by folding a zero-padded power-of-two tree.

    Accuracy is O(eps * log n) relative, like numpy's own pairwise scheme,
    but the tree shape here is fixed, so partial sums can never be
    re-associated by chunking decisions made elsewhere.
    """
    a = np.asarray(x)
    if a.dtype.kind != "c":
        a = a.astype(np.float64, copy=False)
    a = np.moveaxis(a, axis, -1)
    n = a.shape[-1]
    if n == 0:
        return np.zeros(a.shape[:-1], dtype=a.dtype)
    size = 1 << (n - 1).bit_length()
    if size != n:
        pad = [(0, 0)] * (a.ndim - 1) + [(0, size - n)]
        a = np.pad(a, pad)
    while a.shape[-1] > 1:
        a = a[..., 0::2] + a[..., 1::2]
    return a[..., 0]


def pairwise_mean(x, axis: int = -1):
    a = np.asarray(x)
    n = a.shape[axis]
    if n == 0:
        raise ValueError("mean of an empty axis")
    return pairwise_sum(a, axis=axis) / n


def parallel_map(fn, items, workers: int = 1):
    """Apply fn to each item in order; plain loop unless workers > 1."""
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
