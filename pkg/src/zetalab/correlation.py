"""Sector pair correlations, matrices, and outlier detection.

The headline quantity is the modulus of the normalized Hermitian inner
product of two unit-circle samples ("raw" mode).  A centered complex
Pearson coefficient is available behind a flag.  Outliers of a row are
scored against the row's own baseline and annotated with divisibility
relations between the primes involved.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .primes import is_poset_related, is_prime, poset_predecessors
from .sectors import SectorSample, sector_sample
from .sums import pairwise_sum, parallel_map
from .zeros import ZeroTable

_PAIR_CHUNK = 128


class DegenerateSampleError(ValueError):
    """Centered correlation of a zero-variance sample."""


class InsufficientBaselineError(ValueError):
    """Too few baseline entries to estimate mean and spread."""


@dataclass
class CorrelationConfig:
    mode: str = "raw"
    zero_count: int = 1000
    small_prime_floor: int = 50
    resonance_z: float = 3.0

    def __post_init__(self):
        if self.mode not in ("raw", "centered"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.zero_count < 2:
            raise ValueError("zero_count must be >= 2")
        if self.small_prime_floor < 0:
            raise ValueError("small_prime_floor must be >= 0")
        if self.resonance_z <= 0:
            raise ValueError("resonance_z must be positive")


def _check_pair(a: SectorSample, b: SectorSample) -> None:
    if len(a) != len(b):
        raise ValueError("samples built over different ordinate counts")
    if a.compression != 1 or b.compression != 1:
        raise ValueError("correlations are defined for compression 1 samples")
    if len(a) == 0:
        raise ValueError("empty samples")


def _complex_sum(z: np.ndarray) -> complex:
    return complex(pairwise_sum(z.real), pairwise_sum(z.imag))


def inner_product(a: SectorSample, b: SectorSample) -> complex:
    """Mean of a_n * conj(b_n); depends on the primes only through p_a/p_b."""
    _check_pair(a, b)
    if a.prime == b.prime:
        # unit modulus times own conjugate is 1 termwise; skip the rounding
        return 1.0 + 0.0j
    if a.prime > b.prime:
        # evaluate one canonical orientation per pair, so the Hermitian
        # symmetry <a,b> = conj(<b,a>) holds to the last bit
        return inner_product(b, a).conjugate()
    z = a.values * np.conj(b.values)
    return _complex_sum(z) / len(a)


def correlation(a: SectorSample, b: SectorSample, mode: str = "raw") -> float:
    if mode == "raw":
        return abs(inner_product(a, b))
    if mode != "centered":
        raise ValueError(f"unknown mode {mode!r}")
    _check_pair(a, b)
    n = len(a)
    ma = _complex_sum(a.values) / n
    mb = _complex_sum(b.values) / n
    da = a.values - ma
    db = b.values - mb
    va = float(pairwise_sum(da.real ** 2 + da.imag ** 2))
    vb = float(pairwise_sum(db.real ** 2 + db.imag ** 2))
    if va == 0.0 or vb == 0.0:
        raise DegenerateSampleError("zero variance sample in centered mode")
    num = _complex_sum(da * np.conj(db))
    return abs(num) / math.sqrt(va * vb)


def _prepared_table(zeros: ZeroTable, cfg: CorrelationConfig) -> ZeroTable:
    if len(zeros) < cfg.zero_count:
        raise ValueError(
            f"table has {len(zeros)} ordinates, config wants {cfg.zero_count}")
    return zeros.truncated(cfg.zero_count)


def correlation_row(zeros: ZeroTable, p: int, qs, config=None):
    """c(p, q) for each q, with the q = p entry reset to 0 by convention."""
    cfg = config or CorrelationConfig()
    qs = list(qs)
    if not qs:
        raise ValueError("no comparison primes given")
    table = _prepared_table(zeros, cfg)
    base = sector_sample(table, p)
    row = []
    for q in qs:
        if q == p:
            row.append((q, 0.0))
            continue
        row.append((q, correlation(base, sector_sample(table, q), cfg.mode)))
    return row


@dataclass(frozen=True)
class CorrelationMatrix:
    primes: tuple[int, ...]
    entries: np.ndarray
    config: CorrelationConfig


def correlation_matrix(zeros: ZeroTable, primes, config=None,
                       workers: int = 1) -> CorrelationMatrix:
    """Full symmetric matrix, identical bytes for every worker count.

    Raw mode avoids building per-prime samples: the (i, j) cell only needs
    the log ratio d = log p_i - log p_j, so cells are evaluated in chunks
    of pairs as |sum exp(i t d)| / N with the fixed-tree reduction.
    """
    cfg = config or CorrelationConfig()
    primes = list(primes)
    if not primes:
        raise ValueError("no primes given")
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    table = _prepared_table(zeros, cfg)
    t = table.ordinates
    n = len(table)
    count = len(primes)
    entries = np.zeros((count, count), dtype=np.float64)
    pairs = [(i, j) for i in range(count) for j in range(i + 1, count)]
    chunks = [pairs[k:k + _PAIR_CHUNK]
              for k in range(0, len(pairs), _PAIR_CHUNK)]

    if cfg.mode == "raw":
        np.fill_diagonal(entries, 1.0)
        logs = [math.log(p) for p in primes]

        def work(chunk):
            d = np.array([logs[i] - logs[j] for i, j in chunk])
            phase = np.multiply.outer(d, t)
            re = pairwise_sum(np.cos(phase))
            im = pairwise_sum(np.sin(phase))
            return np.hypot(re, im) / n
    else:
        samples = {p: sector_sample(table, p) for p in primes}

        def work(chunk):
            return [correlation(samples[primes[i]], samples[primes[j]],
                                "centered") for i, j in chunk]
        for i in range(count):
            entries[i, i] = correlation(samples[primes[i]], samples[primes[i]],
                                        "centered")

    for chunk, vals in zip(chunks, parallel_map(work, chunks, workers)):
        for (i, j), v in zip(chunk, vals):
            entries[i, j] = entries[j, i] = float(v)
    entries.setflags(write=False)
    return CorrelationMatrix(tuple(primes), entries, cfg)


@dataclass(frozen=True)
class ResonanceRow:
    q: int
    c_value: float
    z_score: float
    is_resonant: bool
    q_divides_p_minus_1: bool
    p_divides_q_minus_1: bool
    shared_predecessors: frozenset


@dataclass(frozen=True)
class ResonanceReport:
    base_prime: int
    baseline_mean: float
    baseline_std: float
    rows: tuple[ResonanceRow, ...]

    def resonant(self) -> tuple[ResonanceRow, ...]:
        return tuple(r for r in self.rows if r.is_resonant)


def detect_resonances(row, p: int, config=None) -> ResonanceReport:
    """Score a correlation row against its own large-q baseline.

    Baseline statistics use the population spread of entries with
    q > small_prime_floor and q != p; small primes ride a systematic
    envelope and would inflate the spread.  Every entry gets a z-score
    and divisibility annotations; entries at or above resonance_z are
    marked resonant.  A flat baseline yields all-zero scores.
    """
    cfg = config or CorrelationConfig()
    row = list(row)
    if not row:
        raise ValueError("empty correlation row")
    base_vals = np.array([c for q, c in row
                          if q > cfg.small_prime_floor and q != p])
    if base_vals.size < 3:
        raise InsufficientBaselineError(
            f"only {base_vals.size} baseline entries above floor "
            f"{cfg.small_prime_floor}")
    mean = float(base_vals.mean())
    std = float(base_vals.std())
    out = []
    preds_p = poset_predecessors(p)
    for q, c in row:
        z = 0.0 if std == 0.0 else (c - mean) / std
        preds_q = poset_predecessors(q)
        out.append(ResonanceRow(
            q=q,
            c_value=float(c),
            z_score=z,
            is_resonant=z >= cfg.resonance_z,
            q_divides_p_minus_1=is_poset_related(q, p) if q != p else False,
            p_divides_q_minus_1=is_poset_related(p, q) if q != p else False,
            shared_predecessors=frozenset(preds_p & preds_q),
        ))
    out.sort(key=lambda r: (-r.c_value, r.q))
    return ResonanceReport(p, mean, std, tuple(out))
