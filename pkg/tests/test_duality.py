import math

import numpy as np
import pytest

import zetalab as zl
from zetalab.duality import Direction, DualitySeries

# single-point anchors, mpmath 40 digit
Z2P_X2_C3 = 1.2946306843926345       # -sum_{n<=3} cos(t_n log 2)
P2Z_T0_X10 = -3.537502814266249      # -sum Lambda(n)/sqrt(n), n <= 10


def test_zeros_to_primes_zero_truncation(fixture_table):
    s = zl.zeros_to_primes_series(fixture_table, 0, 1.5, 3.0, 0.5)
    assert np.all(s.values == 0.0)
    assert s.truncation == 0
    assert s.direction is Direction.zeros_to_primes


def test_zeros_to_primes_single_point(fixture_table):
    s = zl.zeros_to_primes_series(fixture_table, 3, 2.0, 2.0, 0.1)
    assert len(s.grid) == 1
    assert s.grid[0] == 2.0
    assert s.values[0] == pytest.approx(Z2P_X2_C3, abs=1e-12)


def test_primes_to_zeros_single_point():
    s = zl.primes_to_zeros_series(10, 0.0, 0.0, 1.0)
    assert len(s.grid) == 1
    assert s.values[0] == pytest.approx(P2Z_T0_X10, abs=1e-12)


def test_primes_to_zeros_trivial_bound():
    # no prime powers below 2, so the detector is identically zero
    s = zl.primes_to_zeros_series(1, 10.0, 11.0, 0.5)
    assert np.all(s.values == 0.0)


def test_zeros_to_primes_linear_in_truncation(fixture_table):
    kw = dict(x_min=1.5, x_max=6.0, step=0.01)
    a = zl.zeros_to_primes_series(fixture_table, 40, **kw)
    b = zl.zeros_to_primes_series(fixture_table, 100, **kw)
    # the first 40 terms of the 100-term sum are exactly the 40-term sum
    head = zl.zeros_to_primes_series(fixture_table.truncated(40), 40, **kw)
    assert np.allclose(a.values, head.values, atol=0)
    tail_t = fixture_table.ordinates[40:100]
    direct = -np.cos(np.multiply.outer(np.log(a.grid), tail_t)).sum(axis=1)
    assert np.max(np.abs((a.values + direct) - b.values)) < 1e-9


def test_grid_is_uniform_and_inclusive(fixture_table):
    s = zl.zeros_to_primes_series(fixture_table, 10, 1.5, 10.5, 0.001)
    assert len(s.grid) == 9001
    steps = np.diff(s.grid)
    assert np.max(np.abs(steps - 0.001)) < 1e-12
    assert s.grid[-1] == pytest.approx(10.5, abs=1e-9)


def test_series_validation(fixture_table):
    with pytest.raises(ValueError):
        zl.zeros_to_primes_series(fixture_table, 2000, 1.5, 3.0, 0.1)
    with pytest.raises(ValueError):
        zl.zeros_to_primes_series(fixture_table, 10, 0.9, 3.0, 0.1)
    with pytest.raises(ValueError):
        zl.zeros_to_primes_series(fixture_table, 10, 3.0, 1.5, 0.1)
    with pytest.raises(ValueError):
        zl.zeros_to_primes_series(fixture_table, 10, 1.5, 3.0, 0.0)
    with pytest.raises(ValueError):
        zl.primes_to_zeros_series(0, 0.0, 5.0, 0.1)
    with pytest.raises(ValueError):
        zl.primes_to_zeros_series(10, -1.0, 5.0, 0.1)


def test_workers_do_not_change_bits(fixture_table):
    one = zl.zeros_to_primes_series(fixture_table, 500, 1.5, 10.5, 0.01,
                                    workers=1)
    four = zl.zeros_to_primes_series(fixture_table, 500, 1.5, 10.5, 0.01,
                                     workers=4)
    assert np.array_equal(one.values, four.values)


def test_find_peaks_basic():
    s = DualitySeries(np.array([0.0, 1.0, 2.0]), np.array([0.0, 1.0, 0.0]),
                      0, Direction.zeros_to_primes)
    assert zl.find_peaks(s, 0.5) == [(1.0, 1.0)]
    assert zl.find_peaks(s, 1.5) == []


def test_find_peaks_monotone_has_none():
    s = DualitySeries(np.arange(5.0), np.arange(5.0), 0,
                      Direction.zeros_to_primes)
    assert zl.find_peaks(s) == []


def test_find_peaks_validation():
    s = DualitySeries(np.array([0.0, 1.0]), np.array([0.0, 1.0]), 0,
                      Direction.zeros_to_primes)
    with pytest.raises(ValueError):
        zl.find_peaks(s)
    ok = DualitySeries(np.arange(3.0), np.arange(3.0), 0,
                       Direction.zeros_to_primes)
    with pytest.raises(ValueError):
        zl.find_peaks(ok, -0.1)


def test_prime_power_peaks(fixture_table):
    s = zl.zeros_to_primes_series(fixture_table, 200, 1.5, 9.5, 0.001)
    peaks = zl.find_peaks(s, 0.0)
    tops = sorted(peaks, key=lambda pv: -pv[1])[:7]
    found = sorted(x for x, _ in tops)
    for target in (2, 3, 4, 5, 7, 8, 9):
        assert min(abs(x - target) for x in found) < 0.02, target


def test_peak_contrast_on_versus_off(fixture_table):
    s = zl.zeros_to_primes_series(fixture_table, 1000, 4.9, 5.6, 0.001)
    at = {round(float(x), 3): float(v) for x, v in zip(s.grid, s.values)}
    assert at[5.0] / abs(at[5.5]) > 3.0 or at[5.0] > 3.0 * abs(at[5.5])


def test_peak_refinement_stability(fixture_table):
    coarse = zl.zeros_to_primes_series(fixture_table, 300, 1.8, 3.4, 0.002)
    fine = zl.zeros_to_primes_series(fixture_table, 300, 1.8, 3.4, 0.001)
    for target in (2.0, 3.0):
        pc = min(zl.find_peaks(coarse, 0.0),
                 key=lambda pv: abs(pv[0] - target))[0]
        pf = min(zl.find_peaks(fine, 0.0),
                 key=lambda pv: abs(pv[0] - target))[0]
        assert abs(pc - pf) <= 0.002 + 1e-12


def test_zero_ordinate_peak():
    s = zl.primes_to_zeros_series(10000, 10.0, 16.0, 0.005)
    x, v = max(zl.find_peaks(s, 0.0), key=lambda pv: pv[1])
    assert abs(x - 14.134725) < 0.05
    assert v > 0


def test_growing_truncation_sharpens_prime_peak(fixture_table):
    # detector value at x = 2 grows as zeros accumulate
    levels = []
    for count in (100, 300, 1000):
        s = zl.zeros_to_primes_series(fixture_table, count, 2.0, 2.0, 0.1)
        levels.append(float(s.values[0]))
    assert levels[0] > 0
    assert levels == sorted(levels)
