#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wsnet/graph.hpp"
#include "wsnet/rng.hpp"

namespace wsnet {

// Hurwitz zeta: sum over i >= 0 of (a+i)^-s, for s > 1 and a >= 1.
double hurwitz_zeta(double s, double a);

// Flat multiset of positive degrees.
struct DegreeSample {
    std::vector<std::uint64_t> degrees;
};

// Expansion drops degree-0 nodes; collection rebuilds the table.
DegreeSample expand_histogram(const DegreeHistogram& hist);
DegreeHistogram collect_histogram(const DegreeSample& sample);

// Discrete maximum-likelihood exponent of the tail k >= k_min, maximized
// over gamma in (1, 10]. Needs at least 50 tail observations.
double mle_gamma(const DegreeSample& sample, std::uint64_t k_min);

// Max over observed tail degrees of |empirical tail CDF - model CDF| for the
// discrete power law (gamma, k_min).
double ks_distance(const DegreeSample& sample, double gamma, std::uint64_t k_min);

struct PowerLawFit {
    double gamma = 0.0;
    std::uint64_t k_min = 1;
    double ks_stat = 0.0;
    std::uint64_t n_tail = 0;
    // Magnitude of the log-log pmf slope over degrees below k_min; NaN when
    // fewer than 3 distinct degrees lie below it.
    double slope_before_kmin = 0.0;
    bool degenerate = false; // gamma pinned at the search bound
    double p_value = 0.0;    // NaN unless bootstrap replicates were requested
};

struct FitOptions {
    // Fraction of the sorted distinct-degree list admitted as k_min
    // candidates; trims the most expensive tail of the scan.
    double candidate_fraction = 0.9;
    std::uint64_t min_tail = 50;
    double gamma_max = 10.0;
    // Goodness-of-fit bootstrap (semi-parametric resampling); 0 skips it.
    std::uint64_t bootstrap_replicates = 0;
    std::uint64_t bootstrap_seed = 0;
};

// Scan k_min over distinct observed degrees, fit gamma by maximum likelihood
// at each, keep the (ks, k_min)-lexicographically smallest. Deterministic
// for a given histogram.
PowerLawFit fit_power_law(const DegreeHistogram& hist, const FitOptions& options = {});

// Magnitude of the unweighted least-squares slope of log P_k vs log k over
// 1 <= k < k_min. Needs at least 3 distinct degrees below k_min.
double slope_before_kmin(const DegreeHistogram& hist, std::uint64_t k_min);

// n i.i.d. draws from the discrete power law on k >= k_min by inverse CDF.
DegreeSample sample_power_law(double gamma, std::uint64_t k_min, std::size_t n,
                              RngStream& rng);

} // namespace wsnet
