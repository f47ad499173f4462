#pragma once

// Statistical helpers shared by the tests: chi-square critical values, a
// two-sample Kolmogorov-Smirnov test on degree histograms, and simple
// moments.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "wsnet/graph.hpp"

namespace testutil {

// Standard normal quantile of 0.999.
inline constexpr double kZ999 = 3.090232306167813;

// Upper chi-square critical value by the Wilson-Hilferty cube
// approximation; z is the standard normal quantile of the target level.
inline double chi_square_critical(double df, double z) {
    const double c = 2.0 / (9.0 * df);
    const double base = 1.0 - c + z * std::sqrt(c);
    return df * base * base * base;
}

// Pearson statistic; every expected entry must be positive.
inline double chi_square_stat(const std::vector<double>& observed,
                              const std::vector<double>& expected) {
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double diff = observed[i] - expected[i];
        stat += diff * diff / expected[i];
    }
    return stat;
}

// Kolmogorov tail probability Q(lambda) = 2 sum_j (-1)^(j-1) exp(-2 j^2 lambda^2).
inline double kolmogorov_q(double lambda) {
    if (lambda <= 0.0)
        return 1.0;
    double sum = 0.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += (j % 2 == 1) ? term : -term;
        if (term < 1e-16)
            break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

struct KsResult {
    double d = 0.0;
    double p = 1.0;
};

// Two-sample KS distance between degree histograms with the asymptotic
// p-value. Ties are common for discrete degrees, which only makes the
// p-value conservative.
inline KsResult two_sample_ks(const wsnet::DegreeHistogram& a, const wsnet::DegreeHistogram& b) {
    const double na = static_cast<double>(a.total_nodes());
    const double nb = static_cast<double>(b.total_nodes());
    double ca = 0.0;
    double cb = 0.0;
    double d = 0.0;
    auto ia = a.counts().begin();
    auto ib = b.counts().begin();
    while (ia != a.counts().end() || ib != b.counts().end()) {
        std::uint64_t k;
        if (ib == b.counts().end() || (ia != a.counts().end() && ia->first < ib->first))
            k = ia->first;
        else if (ia == a.counts().end() || ib->first < ia->first)
            k = ib->first;
        else
            k = ia->first;
        if (ia != a.counts().end() && ia->first == k)
            ca += static_cast<double>((ia++)->second);
        if (ib != b.counts().end() && ib->first == k)
            cb += static_cast<double>((ib++)->second);
        d = std::max(d, std::fabs(ca / na - cb / nb));
    }
    const double ne = na * nb / (na + nb);
    const double root = std::sqrt(ne);
    const double lambda = (root + 0.12 + 0.11 / root) * d;
    return {d, kolmogorov_q(lambda)};
}

inline double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (const double x : v)
        s += x;
    return s / static_cast<double>(v.size());
}

} // namespace testutil
