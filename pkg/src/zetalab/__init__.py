"""Workbench for zero-ordinate tables, prime order structure, sector
statistics, correlations, and explicit-formula duality sums."""

__version__ = "0.1.0"

from .correlation import (CorrelationConfig, CorrelationMatrix,
                          DegenerateSampleError, InsufficientBaselineError,
                          ResonanceReport, ResonanceRow, correlation,
                          correlation_matrix, correlation_row,
                          detect_resonances, inner_product)
from .duality import (Direction, DualitySeries, find_peaks,
                      primes_to_zeros_series, zeros_to_primes_series)
from .primes import (EuclidCandidate, PrattTree, euclid_generate,
                     factor_string, factorize, first_primes, is_poset_related,
                     is_prime, poset_predecessors, pratt_tree, primes_up_to)
from .sectors import (BiDistribution, Histogram, SectorSample,
                      bi_distribution, histogram, histogram_entropy,
                      sector_sample)
from .sums import pairwise_mean, pairwise_sum, parallel_map
from .zeros import (TWO_PI, ZeroParseError, ZeroTable, ZeroTableError,
                    count_zeros_below, fixture_path, information_integral,
                    load_zero_table, parse_zero_table,
                    riemann_vonmangoldt_estimate)

__all__ = [
    "TWO_PI", "BiDistribution", "CorrelationConfig", "CorrelationMatrix",
    "DegenerateSampleError", "Direction", "DualitySeries", "EuclidCandidate",
    "Histogram", "InsufficientBaselineError", "PrattTree", "ResonanceReport",
    "ResonanceRow", "SectorSample", "ZeroParseError", "ZeroTable",
    "ZeroTableError", "bi_distribution", "correlation", "correlation_matrix",
    "correlation_row", "count_zeros_below", "detect_resonances",
    "euclid_generate", "factor_string", "factorize", "find_peaks",
    "first_primes", "fixture_path", "histogram", "histogram_entropy",
    "information_integral", "inner_product", "is_poset_related", "is_prime",
    "load_zero_table", "pairwise_mean", "pairwise_sum", "parallel_map",
    "parse_zero_table", "poset_predecessors", "pratt_tree",
    "primes_to_zeros_series", "primes_up_to", "riemann_vonmangoldt_estimate",
    "sector_sample", "zeros_to_primes_series",
]
