#include "wsnet/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "wsnet/errors.hpp"

namespace wsnet {

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0))
        throw ConfigError("hurwitz zeta needs s > 1");
    if (!(a >= 1.0))
        throw ConfigError("hurwitz zeta needs a >= 1");
    // Euler-Maclaurin: direct terms out to b >= s + 20, then the integral,
    // the half-sample correction, and four Bernoulli terms. Pushing b past
    // s + 20 keeps the omitted remainder below 1e-16 of the total.
    double sum = 0.0;
    double x = a;
    while (x < s + 20.0) {
        sum += std::pow(x, -s);
        x += 1.0;
    }
    const double b = x;
    const double inv = 1.0 / b;
    const double bs = std::pow(b, -s);
    double tail = b * bs / (s - 1.0) + 0.5 * bs;
    double deriv = s * inv * bs;
    tail += deriv / 12.0;
    deriv *= (s + 1.0) * (s + 2.0) * inv * inv;
    tail -= deriv / 720.0;
    deriv *= (s + 3.0) * (s + 4.0) * inv * inv;
    tail += deriv / 30240.0;
    deriv *= (s + 5.0) * (s + 6.0) * inv * inv;
    tail -= deriv / 1209600.0;
    return sum + tail;
}

DegreeSample expand_histogram(const DegreeHistogram& hist) {
    DegreeSample sample;
    sample.degrees.reserve(hist.total_nodes() - hist.count(0));
    for (const auto& [k, c] : hist.counts()) {
        if (k == 0)
            continue;
        sample.degrees.insert(sample.degrees.end(), c, k);
    }
    return sample;
}

DegreeHistogram collect_histogram(const DegreeSample& sample) {
    DegreeHistogram hist;
    for (const std::uint64_t k : sample.degrees)
        hist.add(k);
    return hist;
}

namespace {

// Distinct observed degrees with per-degree counts plus suffix statistics,
// so every k_min candidate reads its tail size and tail log-sum in O(1).
struct TailStats {
    std::vector<std::uint64_t> degrees; // ascending, zeros excluded
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> tail_n;
    std::vector<double> tail_slog;
};

TailStats tail_stats(const DegreeHistogram& hist) {
    TailStats s;
    for (const auto& [k, c] : hist.counts()) {
        if (k == 0)
            continue;
        s.degrees.push_back(k);
        s.counts.push_back(c);
    }
    const std::size_t d = s.degrees.size();
    s.tail_n.assign(d, 0);
    s.tail_slog.assign(d, 0.0);
    std::uint64_t n = 0;
    double slog = 0.0;
    for (std::size_t i = d; i-- > 0;) {
        n += s.counts[i];
        slog += static_cast<double>(s.counts[i]) * std::log(static_cast<double>(s.degrees[i]));
        s.tail_n[i] = n;
        s.tail_slog[i] = slog;
    }
    return s;
}

// The log-likelihood -n log zeta(g, k_min) - g * slog is strictly concave
// in g, so golden-section search on the bracket finds its maximizer.
double maximize_gamma(double n, double slog, std::uint64_t k_min, double gamma_max) {
    const double a = static_cast<double>(k_min);
    const auto loglik = [&](double g) {
        return -n * std::log(hurwitz_zeta(g, a)) - g * slog;
    };
    double lo = 1.0 + 1e-8;
    double hi = gamma_max;
    const double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = loglik(x1);
    double f2 = loglik(x2);
    for (int it = 0; it < 100; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = loglik(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = loglik(x1);
        }
    }
    return 0.5 * (lo + hi);
}

// KS distance of the tail starting at distinct-degree index i against the
// discrete power law with the given gamma. The empirical CDF is evaluated
// after each jump.
double suffix_ks(const TailStats& ts, std::size_t i, double gamma) {
    const double z0 = hurwitz_zeta(gamma, static_cast<double>(ts.degrees[i]));
    const double n = static_cast<double>(ts.tail_n[i]);
    double cum = 0.0;
    double worst = 0.0;
    for (std::size_t j = i; j < ts.degrees.size(); ++j) {
        cum += static_cast<double>(ts.counts[j]);
        const double model =
            1.0 - hurwitz_zeta(gamma, static_cast<double>(ts.degrees[j]) + 1.0) / z0;
        worst = std::max(worst, std::abs(cum / n - model));
    }
    return worst;
}

void validate_options(const FitOptions& options) {
    if (!(options.candidate_fraction > 0.0 && options.candidate_fraction <= 1.0))
        throw ConfigError("candidate_fraction must lie in (0, 1]");
    if (!(options.gamma_max > 1.0 + 1e-6))
        throw ConfigError("gamma_max must exceed 1");
}

struct ScanBest {
    double gamma = 0.0;
    std::uint64_t k_min = 0;
    double ks = std::numeric_limits<double>::infinity();
    std::uint64_t n_tail = 0;
    bool found = false;
};

ScanBest scan_k_min(const TailStats& ts, const FitOptions& options) {
    if (ts.degrees.size() < 2)
        throw DataError("degree histogram has a single distinct degree; nothing to fit");
    std::size_t admitted = static_cast<std::size_t>(
        std::ceil(options.candidate_fraction * static_cast<double>(ts.degrees.size())));
    admitted = std::min(std::max<std::size_t>(admitted, 1), ts.degrees.size());

    ScanBest best;
    for (std::size_t i = 0; i < admitted; ++i) {
        if (ts.tail_n[i] < options.min_tail)
            break; // tails only shrink from here on
        const double gamma = maximize_gamma(static_cast<double>(ts.tail_n[i]),
                                            ts.tail_slog[i], ts.degrees[i],
                                            options.gamma_max);
        const double ks = suffix_ks(ts, i, gamma);
        if (!best.found || ks < best.ks ||
            (ks == best.ks && ts.degrees[i] < best.k_min)) {
            best = {gamma, ts.degrees[i], ks, ts.tail_n[i], true};
        }
    }
    if (!best.found)
        throw DataError("no k_min candidate keeps at least " +
                        std::to_string(options.min_tail) + " tail observations");
    return best;
}

// Inverse-CDF sampler for the discrete power law on k >= k_min. A table
// covers all but 1e-12 of the mass (capped at 2^20 entries); draws past the
// table fall back to bisection on the zeta survival function.
struct ZipfSampler {
    double gamma;
    std::uint64_t k_min;
    double z0;
    std::vector<double> cdf;

    ZipfSampler(double gamma_, std::uint64_t k_min_) : gamma(gamma_), k_min(k_min_) {
        if (!(gamma > 1.0))
            throw ConfigError("power-law sampling needs gamma > 1");
        if (k_min < 1)
            throw ConfigError("power-law sampling needs k_min >= 1");
        z0 = hurwitz_zeta(gamma, static_cast<double>(k_min));
        double c = 0.0;
        for (std::size_t i = 0; i < (std::size_t{1} << 20); ++i) {
            c += std::pow(static_cast<double>(k_min + i), -gamma) / z0;
            cdf.push_back(c);
            if (1.0 - c < 1e-12)
                break;
        }
    }

    double survival(std::uint64_t k) const {
        return hurwitz_zeta(gamma, static_cast<double>(k)) / z0;
    }

    std::uint64_t draw(RngStream& rng) const {
        const double u = rng.uniform01();
        if (u < cdf.back()) {
            const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
            return k_min + static_cast<std::uint64_t>(it - cdf.begin());
        }
        // smallest k with survival(k + 1) <= 1 - u, found by doubling then
        // bisection; the 1e18 cap is unreachable in any sane draw
        std::uint64_t lo = k_min + cdf.size() - 1;
        std::uint64_t hi = lo;
        while (survival(hi + 1) > 1.0 - u && hi < std::uint64_t{1} << 60)
            hi *= 2;
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (survival(mid + 1) > 1.0 - u)
                lo = mid;
            else
                hi = mid;
        }
        return survival(lo + 1) <= 1.0 - u ? lo : hi;
    }
};

} // namespace

double mle_gamma(const DegreeSample& sample, std::uint64_t k_min) {
    if (k_min < 1)
        throw ConfigError("k_min must be at least 1");
    std::uint64_t n = 0;
    double slog = 0.0;
    for (const std::uint64_t k : sample.degrees) {
        if (k < k_min)
            continue;
        ++n;
        slog += std::log(static_cast<double>(k));
    }
    if (n < 50)
        throw DataError("power-law tail at k_min " + std::to_string(k_min) + " has " +
                        std::to_string(n) + " observations; need 50");
    return maximize_gamma(static_cast<double>(n), slog, k_min, 10.0);
}

double ks_distance(const DegreeSample& sample, double gamma, std::uint64_t k_min) {
    if (!(gamma > 1.0))
        throw ConfigError("ks distance needs gamma > 1");
    DegreeHistogram tail;
    for (const std::uint64_t k : sample.degrees)
        if (k >= k_min)
            tail.add(k);
    if (tail.empty())
        throw DataError("no observations at or above k_min");
    const TailStats ts = tail_stats(tail);
    // the histogram was already restricted, so the tail starts at index 0,
    // but the model anchors at the requested k_min
    const double z0 = hurwitz_zeta(gamma, static_cast<double>(k_min));
    const double n = static_cast<double>(ts.tail_n[0]);
    double cum = 0.0;
    double worst = 0.0;
    for (std::size_t j = 0; j < ts.degrees.size(); ++j) {
        cum += static_cast<double>(ts.counts[j]);
        const double model =
            1.0 - hurwitz_zeta(gamma, static_cast<double>(ts.degrees[j]) + 1.0) / z0;
        worst = std::max(worst, std::abs(cum / n - model));
    }
    return worst;
}

double slope_before_kmin(const DegreeHistogram& hist, std::uint64_t k_min) {
    const std::uint64_t nonzero = hist.total_nodes() - hist.count(0);
    if (nonzero == 0)
        throw DataError("histogram has no nonzero-degree nodes");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::uint64_t points = 0;
    for (const auto& [k, c] : hist.counts()) {
        if (k == 0 || k >= k_min)
            continue;
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(static_cast<double>(c) / static_cast<double>(nonzero));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++points;
    }
    if (points < 3)
        throw DataError("slope below k_min needs at least 3 distinct degrees; have " +
                        std::to_string(points));
    const double n = static_cast<double>(points);
    return std::abs((n * sxy - sx * sy) / (n * sxx - sx * sx));
}

PowerLawFit fit_power_law(const DegreeHistogram& hist, const FitOptions& options) {
    validate_options(options);
    const std::uint64_t nonzero = hist.total_nodes() - hist.count(0);
    if (nonzero < 100)
        throw DataError("power-law fit needs at least 100 nonzero-degree nodes; have " +
                        std::to_string(nonzero));
    const TailStats ts = tail_stats(hist);
    const ScanBest best = scan_k_min(ts, options);

    PowerLawFit fit;
    fit.gamma = best.gamma;
    fit.k_min = best.k_min;
    fit.ks_stat = best.ks;
    fit.n_tail = best.n_tail;
    fit.degenerate =
        best.gamma > options.gamma_max - 1e-6 || best.gamma < 1.0 + 1e-6;
    fit.p_value = std::numeric_limits<double>::quiet_NaN();

    std::uint64_t below = 0;
    for (const auto& [k, c] : hist.counts())
        if (k >= 1 && k < fit.k_min && c > 0)
            ++below;
    fit.slope_before_kmin = below >= 3
                                ? slope_before_kmin(hist, fit.k_min)
                                : std::numeric_limits<double>::quiet_NaN();

    if (options.bootstrap_replicates > 0) {
        // semi-parametric resampling: body values are redrawn from the
        // data below k_min, tail values from the fitted law, and each
        // replicate is refit with the same scan settings
        std::vector<std::uint64_t> body;
        for (const auto& [k, c] : hist.counts())
            if (k >= 1 && k < fit.k_min)
                body.insert(body.end(), c, k);
        const double p_tail =
            static_cast<double>(fit.n_tail) / static_cast<double>(nonzero);
        const ZipfSampler sampler(fit.gamma, fit.k_min);
        RngStream rng(options.bootstrap_seed);
        FitOptions inner = options;
        inner.bootstrap_replicates = 0;
        std::uint64_t exceed = 0;
        for (std::uint64_t rep = 0; rep < options.bootstrap_replicates; ++rep) {
            DegreeHistogram resampled;
            for (std::uint64_t i = 0; i < nonzero; ++i) {
                if (body.empty() || rng.uniform01() < p_tail)
                    resampled.add(sampler.draw(rng));
                else
                    resampled.add(body[rng.uniform_below(body.size())]);
            }
            try {
                const ScanBest rb = scan_k_min(tail_stats(resampled), inner);
                if (rb.ks > fit.ks_stat)
                    ++exceed;
            } catch (const DataError&) {
                ++exceed; // a replicate too degenerate to fit counts against
            }
        }
        fit.p_value = static_cast<double>(exceed) /
                      static_cast<double>(options.bootstrap_replicates);
    }
    return fit;
}

DegreeSample sample_power_law(double gamma, std::uint64_t k_min, std::size_t n,
                              RngStream& rng) {
    const ZipfSampler sampler(gamma, k_min);
    DegreeSample sample;
    sample.degrees.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        sample.degrees.push_back(sampler.draw(rng));
    return sample;
}

} // namespace wsnet
