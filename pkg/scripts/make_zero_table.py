#!/usr/bin/env python3
"""Regenerate the bundled tables of Riemann zero ordinates.

Builds data/riemann_zeros_100k.txt (first 100,000 ordinates, one per line,
9 decimal places) and the 1,000-line fixture bundled with the package.
The workbench itself never computes zeros; this script exists so the
repository's data files are reproducible from scratch.

Method: Z(t) is evaluated on a fine grid and sign changes are refined by
vectorized bisection.  For t below the crossover, zeta(1/2+it) comes from
an Euler-Maclaurin sum; above it, from the Riemann-Siegel main sum plus
asymptotic correction terms whose coefficient functions are tabulated
numerically against mpmath's float-precision siegelz.  Completeness is
checked with the smoothed counting function theta(t)/pi (the residual
drifts by one the moment a zero is missed), and positions are verified
against mpmath on random samples.

Runtime: a few minutes single-core.  Requires numpy and mpmath.

Usage:
    python scripts/make_zero_table.py --count 100000 \
        --out data/riemann_zeros_100k.txt --fixture src/zetalab/data/zeros_1k.txt
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import mpmath
import numpy as np

TWO_PI = 2.0 * math.pi
EM_CROSSOVER = 2500.0  # Euler-Maclaurin below, Riemann-Siegel above
SCAN_STEP = 0.004      # smaller than any gap among the first 100k zeros


def theta(t):
    """Riemann-Siegel theta, asymptotic expansion (t >= 10)."""
    t = np.asarray(t, dtype=float)
    return (t / 2.0 * np.log(t / TWO_PI) - t / 2.0 - math.pi / 8.0
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t ** 3)
            + 31.0 / (80640.0 * t ** 5))


_BERN = [float(mpmath.bernoulli(2 * j)) for j in range(0, 16)]
_FACT = [float(mpmath.factorial(2 * j)) for j in range(0, 16)]


def zeta_em(t, n_corr=12):
    """zeta(1/2+it) for a vector t by Euler-Maclaurin, cutoff K ~ 0.85*t."""
    t = np.asarray(t, dtype=float)
    K = max(64, int(0.85 * float(t.max())) + 1)
    s = 0.5 + 1j * t
    n = np.arange(1, K)
    ln_n = np.log(n)
    # sum_{n<K} n^{-s}, split into amplitude and phase
    phase = np.outer(t, ln_n)
    amp = n ** -0.5
    main = (amp * np.cos(phase)).sum(axis=1) - 1j * (amp * np.sin(phase)).sum(axis=1)
    lnK = math.log(K)
    Kms = np.exp(-0.5 * lnK) * np.exp(-1j * t * lnK)  # K^{-s}
    total = main + K * Kms / (s - 1.0) + 0.5 * Kms
    poch = s.copy()           # s(s+1)...(s+2j-2), updated incrementally
    Kpow = Kms / K            # K^{-s-2j+1} at j=1
    for j in range(1, n_corr + 1):
        total += (_BERN[j] / _FACT[j]) * poch * Kpow
        poch = poch * (s + (2 * j - 1)) * (s + 2 * j)
        Kpow = Kpow / (K * K)
    return total


def z_em(t):
    """Z(t) via Euler-Maclaurin zeta; imaginary part must vanish."""
    t = np.asarray(t, dtype=float)
    v = np.exp(1j * theta(t)) * zeta_em(t)
    if v.size and np.abs(v.imag).max() > 1e-9:
        raise RuntimeError("Z(t) not real: EM evaluation inconsistent")
    return v.real


def rs_main_sum(t):
    """Riemann-Siegel main sum 2 sum_{n<=m} n^{-1/2} cos(theta - t log n)."""
    t = np.asarray(t, dtype=float)
    a = np.sqrt(t / TWO_PI)
    m = np.floor(a).astype(int)
    m_max = int(m.max())
    n = np.arange(1, m_max + 1)
    phase = theta(t)[:, None] - np.outer(t, np.log(n))
    terms = (n ** -0.5) * np.cos(phase)
    terms[n[None, :] > m[:, None]] = 0.0
    return 2.0 * terms.sum(axis=1)


class RsCorrection:
    """Correction coefficients c0..c3 on a grid of p = frac(sqrt(t/2pi)).

    Extracted by solving, for each grid p, the 4x4 Vandermonde system
    E(a) = c0 + c1/a + c2/a^2 + c3/a^3 where E is the scaled difference
    between mpmath's siegelz and the bare main sum at a = N + p.
    """

    N_VALUES = (40, 56, 72, 88)
    GRID = 2048

    def __init__(self):
        grid = (np.arange(self.GRID) + 0.5) / self.GRID
        a_all = []
        for p in grid:
            for N in self.N_VALUES:
                a_all.append(N + p)
        a_all = np.array(a_all)
        t_all = TWO_PI * a_all ** 2
        main = np.concatenate([rs_main_sum(chunk) for chunk in np.array_split(t_all, 64)])
        E = np.empty_like(a_all)
        for i, (ai, ti) in enumerate(zip(a_all, t_all)):
            zf = mpmath.fp.siegelz(float(ti))
            sign = -1.0 if int(ai) % 2 == 0 else 1.0  # (-1)^(N-1)
            E[i] = (zf - main[i]) * sign * math.sqrt(ai)
        E = E.reshape(self.GRID, len(self.N_VALUES))
        A = a_all.reshape(self.GRID, len(self.N_VALUES))
        self.coef = np.empty((self.GRID, 4))
        for g in range(self.GRID):
            V = np.vander(1.0 / A[g], 4, increasing=True)
            self.coef[g] = np.linalg.solve(V, E[g])
        self.grid = grid

    def __call__(self, p, a):
        c = np.empty((len(p), 4))
        for k in range(4):
            c[:, k] = np.interp(p, self.grid, self.coef[:, k], period=1.0)
        inv = 1.0 / a
        return c[:, 0] + inv * (c[:, 1] + inv * (c[:, 2] + inv * c[:, 3]))


def make_z_rs(corr):
    def z_rs(t):
        t = np.asarray(t, dtype=float)
        a = np.sqrt(t / TWO_PI)
        N = np.floor(a).astype(int)
        p = a - N
        sign = np.where(N % 2 == 1, 1.0, -1.0)
        return rs_main_sum(t) + sign * a ** -0.5 * corr(p, a)
    return z_rs


def chunked(fn, t, size=4096):
    out = np.empty_like(t)
    for i in range(0, len(t), size):
        out[i:i + size] = fn(t[i:i + size])
    return out


def scan_zeros(zfunc, lo, hi, step=SCAN_STEP):
    """Bracket sign changes of zfunc on [lo, hi], refine by bisection.

    The grid ends exactly at hi so adjacent zones tile without overlap.
    """
    grid = lo + step * np.arange(int((hi - lo) / step) + 1)
    if grid[-1] < hi:
        grid = np.append(grid, hi)
    else:
        grid[-1] = hi
    vals = chunked(zfunc, grid)
    sgn = np.sign(vals)
    idx = np.nonzero(sgn[:-1] * sgn[1:] < 0)[0]
    lo_b, hi_b = grid[idx].copy(), grid[idx + 1].copy()
    lo_v = vals[idx].copy()
    for _ in range(48):
        mid = 0.5 * (lo_b + hi_b)
        mv = chunked(zfunc, mid)
        left = lo_v * mv > 0
        lo_b = np.where(left, mid, lo_b)
        lo_v = np.where(left, mv, lo_v)
        hi_b = np.where(left, hi_b, mid)
    return 0.5 * (lo_b + hi_b)


def verify_positions(zeros, sample, label, report):
    """Compare a random sample of located zeros against mpmath.fp.siegelz roots."""
    rng = np.random.default_rng(7)
    pick = rng.choice(len(zeros), size=min(sample, len(zeros)), replace=False)
    worst = 0.0
    for i in pick:
        t0 = zeros[i]
        lo, hi = t0 - 2e-3, t0 + 2e-3
        flo = mpmath.fp.siegelz(lo)
        fhi = mpmath.fp.siegelz(hi)
        if flo * fhi >= 0:
            continue
        for _ in range(45):
            mid = 0.5 * (lo + hi)
            fm = mpmath.fp.siegelz(mid)
            if flo * fm > 0:
                lo, flo = mid, fm
            else:
                hi = mid
        worst = max(worst, abs(0.5 * (lo + hi) - t0))
    report[label] = worst
    return worst


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100000)
    ap.add_argument("--out", default="data/riemann_zeros_100k.txt")
    ap.add_argument("--fixture", default="src/zetalab/data/zeros_1k.txt")
    ap.add_argument("--fixture-count", type=int, default=1000)
    args = ap.parse_args(argv)

    report = {}
    t0 = time.time()

    print("building Riemann-Siegel correction tables ...", flush=True)
    corr = RsCorrection()
    z_rs = make_z_rs(corr)

    # cross-validate both evaluators against mpmath before trusting them
    rng = np.random.default_rng(1)
    t_lo = rng.uniform(14.5, EM_CROSSOVER, 200)
    err_em = max(abs(z_em(np.array([t])) [0] - mpmath.fp.siegelz(float(t))) for t in t_lo)
    t_hi = rng.uniform(EM_CROSSOVER, 75000.0, 400)
    err_rs = max(abs(z_rs(np.array([t]))[0] - mpmath.fp.siegelz(float(t))) for t in t_hi)
    report["z_em_max_err_vs_mpmath"] = err_em
    report["z_rs_max_err_vs_mpmath"] = err_rs
    print(f"  EM evaluator max |dZ| = {err_em:.3g}, RS evaluator max |dZ| = {err_rs:.3g}",
          flush=True)
    if err_em > 1e-8 or err_rs > 1e-6:
        raise SystemExit("Z evaluators disagree with mpmath; aborting")

    # generous upper bound for t_count, trimmed after the scan
    target = args.count
    hi = 75100.0
    # the zone boundary must not sit on top of a zero, and both evaluators
    # must agree on the sign there, or the seam could double-count
    boundary = EM_CROSSOVER + SCAN_STEP
    while True:
        b_em = z_em(np.array([boundary]))[0]
        b_rs = z_rs(np.array([boundary]))[0]
        if abs(b_em) > 1e-3 and b_em * b_rs > 0:
            break
        boundary += 0.1
    report["zone_boundary"] = boundary
    print("scanning Euler-Maclaurin zone ...", flush=True)
    zeros_lo = scan_zeros(z_em, 14.0, boundary)
    print(f"  {len(zeros_lo)} zeros below {EM_CROSSOVER}", flush=True)
    print("scanning Riemann-Siegel zone ...", flush=True)
    zeros_hi = scan_zeros(z_rs, boundary, hi)
    print(f"  {len(zeros_hi)} zeros in RS zone", flush=True)
    zeros = np.concatenate([zeros_lo, zeros_hi])
    zeros.sort()

    # completeness: residual between achieved index and the smoothed count
    mids = 0.5 * (zeros[:-1] + zeros[1:])
    resid = np.arange(1, len(zeros)) - (theta(mids) / math.pi + 1.0)
    win = 501
    kernel = np.ones(win) / win
    drift = np.convolve(resid, kernel, mode="valid")
    report["count_residual_max_drift"] = float(np.abs(drift).max())
    print(f"  max windowed count residual drift = {report['count_residual_max_drift']:.3f}",
          flush=True)
    if np.abs(drift).max() > 0.6:
        raise SystemExit("count residual drifts: zeros missed or spurious; aborting")

    if len(zeros) < target:
        raise SystemExit(f"only {len(zeros)} zeros found, need {target}")
    zeros = zeros[:target]

    # spot anchors
    anchors = {1: None, 2: None, 3: None, 1000: None, 10000: None}
    for n in list(anchors):
        if n <= len(zeros):
            print(f"  mpmath.zetazero({n}) ...", flush=True)
            tz = float(mpmath.zetazero(n).imag)
            anchors[n] = (tz, float(zeros[n - 1]), abs(tz - zeros[n - 1]))
    report["anchors"] = anchors

    verify_positions(zeros[zeros < EM_CROSSOVER], 60, "sample_err_em_zone", report)
    verify_positions(zeros[zeros >= EM_CROSSOVER], 200, "sample_err_rs_zone", report)
    print(f"  sampled position error: EM {report['sample_err_em_zone']:.3g}, "
          f"RS {report['sample_err_rs_zone']:.3g}", flush=True)

    counts = {T: int((zeros <= T).sum()) for T in (100, 1000, 10000)}
    report["counts"] = counts
    print(f"  N(100)={counts[100]} N(1000)={counts[1000]} N(10000)={counts[10000]}",
          flush=True)
    if counts[100] != 29 or counts[1000] != 649:
        raise SystemExit("zero counts disagree with the known values; aborting")

    np.savetxt(args.out, zeros, fmt="%.9f")
    np.savetxt(args.fixture, zeros[:args.fixture_count], fmt="%.9f")
    report["elapsed_s"] = time.time() - t0
    with open(args.out + ".report.json", "w") as fh:
        json.dump(report, fh, indent=2)
    print(f"wrote {args.out} ({target} ordinates) and {args.fixture} "
          f"({args.fixture_count}) in {report['elapsed_s']:.0f}s", flush=True)


if __name__ == "__main__":
    sys.exit(main())
