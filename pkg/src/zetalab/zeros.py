"""Zero-ordinate tables and the smoothed counting estimate.

Tables are plain text, one ordinate per line, strictly increasing.  A
1000-line fixture ships with the package; larger tables are supplied by
the user via ``--zeros-file`` or the RSPEC_ZEROS_FILE environment variable.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

TWO_PI = 2.0 * math.pi

# the lowest ordinate is 14.13...; anything at or below 14 is bad data
MIN_ORDINATE = 14.0


class ZeroTableError(ValueError):
    """Malformed, unordered, or empty ordinate data."""


class ZeroParseError(ZeroTableError):
    """A line that does not parse as a decimal number."""


@dataclass(frozen=True)
class ZeroTable:
    """Immutable, strictly increasing ordinates with a provenance label."""

    ordinates: np.ndarray
    source_label: str = ""

    def __post_init__(self):
        arr = np.array(self.ordinates, dtype=np.float64, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "ordinates", arr)
        if arr.ndim != 1:
            raise ZeroTableError("ordinates must be one-dimensional")
        if arr.size == 0:
            raise ZeroTableError("empty ordinate table")
        if not np.isfinite(arr).all():
            i = int(np.nonzero(~np.isfinite(arr))[0][0])
            raise ZeroTableError(f"non-finite ordinate at index {i + 1}")
        low = np.nonzero(arr <= MIN_ORDINATE)[0]
        if low.size:
            i = int(low[0])
            raise ZeroTableError(
                f"ordinate {arr[i]!r} at index {i + 1} is <= {MIN_ORDINATE}")
        drops = np.nonzero(np.diff(arr) <= 0)[0]
        if drops.size:
            i = int(drops[0])
            raise ZeroTableError(f"not strictly increasing at index {i + 2}")

    def __len__(self) -> int:
        return int(self.ordinates.size)

    def truncated(self, n: int) -> "ZeroTable":
        """Table of the first n ordinates."""
        if n < 1:
            raise ZeroTableError("truncation length must be >= 1")
        if n >= len(self):
            return self
        return ZeroTable(self.ordinates[:n], self.source_label)


def parse_zero_table(stream, source_label: str = "<stream>") -> ZeroTable:
    """Parse one-number-per-line text; blank lines are skipped."""
    lines = stream.splitlines() if isinstance(stream, str) else stream
    vals = []
    for lineno, raw in enumerate(lines, start=1):
        tok = raw.strip()
        if not tok:
            continue
        try:
            vals.append(float(tok))
        except ValueError:
            raise ZeroParseError(
                f"line {lineno}: not a number: {tok!r}") from None
    if not vals:
        raise ZeroTableError("no ordinates in input")
    return ZeroTable(np.array(vals, dtype=np.float64), source_label)


def load_zero_table(path, limit: int | None = None) -> ZeroTable:
    path = os.fspath(path)
    with open(path, "r", encoding="utf-8") as fh:
        table = parse_zero_table(fh, source_label=path)
    if limit is not None:
        table = table.truncated(limit)
    return table


def fixture_path() -> str:
    """Location of the bundled 1000-ordinate fixture."""
    return str(Path(__file__).parent / "data" / "zeros_1k.txt")


def count_zeros_below(table: ZeroTable, T: float) -> int:
    """Number of ordinates <= T."""
    if T <= 0:
        raise ValueError("T must be positive")
    return int(np.searchsorted(table.ordinates, T, side="right"))


def riemann_vonmangoldt_estimate(T: float) -> float:
    """Smoothed zero count (T/2pi)(log(T/2pi) - 1), remainder omitted."""
    if T <= 0:
        raise ValueError("T must be positive")
    y = T / TWO_PI
    return y * (math.log(y) - 1.0)


def information_integral(y: float) -> float:
    """Closed form y(log y - 1) of the integral of log x from 0 to y."""
    if y <= 0:
        raise ValueError("y must be positive")
    return y * (math.log(y) - 1.0)
