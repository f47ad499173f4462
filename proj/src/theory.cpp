#include "wsnet/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "wsnet/errors.hpp"

namespace wsnet {

double ba_pk(std::uint64_t k) {
    if (k < 1)
        throw ConfigError("ba_pk needs k >= 1");
    const double kd = static_cast<double>(k);
    return 4.0 / (kd * (kd + 1.0) * (kd + 2.0));
}

double stationary_p1(std::uint64_t alpha) {
    const double a = static_cast<double>(alpha);
    return 2.0 * (a + 1.0) / (4.0 * a * a + 6.0 * a + 3.0);
}

double stationary_ratio(std::uint64_t alpha, std::uint64_t k) {
    if (k < 2)
        throw ConfigError("rank ratio needs k >= 2");
    const double a = static_cast<double>(alpha);
    const double kd = static_cast<double>(k);
    return (kd + 4.0 * a * a + 4.0 * a - 1.0) / (kd + 4.0 * a * a + 6.0 * a + 2.0);
}

double stationary_pk(std::uint64_t alpha, std::uint64_t k) {
    if (k < 1)
        throw ConfigError("stationary_pk needs k >= 1");
    // Telescoped product of the rank ratios. With A = 4a^2 + 4a - 1 each
    // ratio is (j + A) / (j + A + 2a + 3), so interior factors cancel and
    // only 2a + 3 boundary factors survive. Keeps the error at a few ulp
    // for any k instead of compounding over k multiplications.
    const double a = static_cast<double>(alpha);
    const double A = 4.0 * a * a + 4.0 * a - 1.0;
    const double kd = static_cast<double>(k);
    double value = stationary_p1(alpha);
    const std::uint64_t span = 2 * alpha + 3;
    for (std::uint64_t d = 1; d <= span; ++d) {
        const double dd = static_cast<double>(d);
        value *= (A + 1.0 + dd) / (A + kd + dd);
    }
    return value;
}

double slope_delta(std::uint64_t alpha, std::uint64_t k) {
    if (k < 2)
        throw ConfigError("slope_delta needs k >= 2");
    const double a = static_cast<double>(alpha);
    const double B = 4.0 * a * a + 6.0 * a + 2.0;
    const double drop = (2.0 * a + 3.0) / (static_cast<double>(k) + B);
    return std::log1p(-drop) / std::log1p(1.0 / (static_cast<double>(k) - 1.0));
}

double slope_asymptote(std::uint64_t alpha) {
    return -(2.0 * static_cast<double>(alpha) + 3.0);
}

std::uint64_t RankDistribution::max_rank() const {
    for (std::size_t k = ranks.size(); k-- > 1;)
        if (ranks[k] > 0.0)
            return k;
    return 0;
}

std::vector<double> integrate_node_step(const RankDistribution& state) {
    if (state.edges == 0) {
        if (state.t != 1)
            throw ConfigError("node step without edges is defined for the single-node state only");
        // the arrival attaches to the lone node, leaving two degree-1 nodes
        return {0.0, 2.0};
    }
    const double t = static_cast<double>(state.t);
    const double two_m = 2.0 * static_cast<double>(state.edges);
    const std::uint64_t top = state.max_rank();
    std::vector<double> counts(top + 2, 0.0);
    for (std::uint64_t k = 1; k <= top; ++k) {
        const double nk = state.p(k) * t;
        const double flow = nk * (static_cast<double>(k) / two_m);
        counts[k] += nk - flow;
        counts[k + 1] += flow;
    }
    counts[1] += 1.0; // the arrival itself
    return counts;
}

void integrate_edge_step(std::vector<double>& counts, std::uint64_t dm, std::uint64_t t) {
    if (t < 1)
        throw ConfigError("edge step needs t >= 1");
    const double phi = 2.0 / (static_cast<double>(t) + 1.0);
    const double psi = 1.0 - phi;
    for (std::uint64_t l = 0; l < dm; ++l) {
        counts.push_back(0.0);
        for (std::size_t k = counts.size() - 1; k >= 2; --k)
            counts[k] = psi * counts[k] + phi * counts[k - 1];
        if (counts.size() > 1)
            counts[1] *= psi;
    }
}

EdgeStepCoefficients edge_step_coefficients(std::uint64_t dm, std::uint64_t t,
                                            std::uint64_t n_max) {
    if (t < 1)
        throw ConfigError("edge step needs t >= 1");
    const double phi = 2.0 / (static_cast<double>(t) + 1.0);
    const double psi = 1.0 - phi;
    EdgeStepCoefficients out{dm, t, {}};
    const std::uint64_t support = std::min(n_max, dm);
    out.weights.reserve(support + 1);
    if (psi == 0.0) {
        // two-node graph: every iteration shifts deterministically
        for (std::uint64_t n = 0; n <= support; ++n)
            out.weights.push_back(n == dm ? 1.0 : 0.0);
        return out;
    }
    double w = std::pow(psi, static_cast<double>(dm));
    for (std::uint64_t n = 0;; ++n) {
        out.weights.push_back(w);
        if (n == support)
            break;
        w *= static_cast<double>(dm - n) / static_cast<double>(n + 1) * phi / psi;
    }
    return out;
}

namespace {

// Expected-count state tracked up to rank k_max. counts[k] holds the
// expected number of degree-k nodes; mass that crosses k_max accumulates in
// lost and never returns, since both update steps move mass upward only.
struct TruncatedState {
    std::vector<double> counts;
    std::uint64_t top = 0; // highest rank currently nonzero
    std::uint64_t k_max = 0;
    double lost = 0.0;

    void prune_dust() {
        while (top > 1 && counts[top] < 1e-300) {
            lost += counts[top];
            counts[top] = 0.0;
            --top;
        }
    }
};

void node_step_update(TruncatedState& s, std::uint64_t m) {
    const double two_m = 2.0 * static_cast<double>(m);
    // descending scatter, so each outflow reads the pre-step value
    for (std::uint64_t k = s.top; k >= 1; --k) {
        const double flow = s.counts[k] * (static_cast<double>(k) / two_m);
        s.counts[k] -= flow;
        if (k < s.k_max)
            s.counts[k + 1] += flow;
        else
            s.lost += flow;
    }
    s.counts[1] += 1.0;
    if (s.top < s.k_max && s.counts[s.top + 1] > 0.0)
        ++s.top;
}

void edge_step_sequential(TruncatedState& s, std::uint64_t dm, double phi, double psi) {
    for (std::uint64_t l = 0; l < dm; ++l) {
        if (s.top == s.k_max)
            s.lost += phi * s.counts[s.top];
        const std::uint64_t reach = std::min(s.top + 1, s.k_max);
        for (std::uint64_t k = reach; k >= 2; --k)
            s.counts[k] = psi * s.counts[k] + phi * s.counts[k - 1];
        s.counts[1] *= psi;
        s.top = reach;
    }
}

// All dm iterations share one phi, so their composition is a binomial
// mixture over the shift count n. Weights below 1e-16 of tail probability
// are dropped and charged to the escaped mass, which keeps the per-step
// cost at O(top * n_eff) instead of O(top * dm).
void edge_step_mixture(TruncatedState& s, std::uint64_t dm, double phi, double psi) {
    std::vector<double> w;
    w.reserve(32);
    double acc = 0.0;
    double cur = std::pow(psi, static_cast<double>(dm));
    for (std::uint64_t n = 0;; ++n) {
        w.push_back(cur);
        acc += cur;
        if (n == dm || 1.0 - acc < 1e-16 || w.size() > 512)
            break;
        cur *= static_cast<double>(dm - n) / static_cast<double>(n + 1) * phi / psi;
    }
    const std::uint64_t shift_max = w.size() - 1;

    double total = 0.0;
    for (std::uint64_t k = 1; k <= s.top; ++k)
        total += s.counts[k];
    s.lost += std::max(0.0, 1.0 - acc) * total;

    if (s.top + shift_max > s.k_max) {
        // ranks close to the boundary leak part of their shift past k_max
        std::vector<double> suffix(w.size() + 1, 0.0);
        for (std::size_t n = w.size(); n-- > 0;)
            suffix[n] = suffix[n + 1] + w[n];
        for (std::uint64_t k = s.top; k >= 1; --k) {
            if (s.k_max - k + 1 > shift_max)
                break;
            s.lost += s.counts[k] * suffix[s.k_max - k + 1];
        }
    }

    const std::uint64_t new_top = std::min(s.top + shift_max, s.k_max);
    for (std::uint64_t k = new_top; k >= 1; --k) {
        const std::uint64_t n_hi = std::min<std::uint64_t>(shift_max, k - 1);
        double v = 0.0;
        for (std::uint64_t n = 0; n <= n_hi; ++n)
            v += w[n] * s.counts[k - n];
        s.counts[k] = v;
    }
    s.top = new_top;
}

RankDistribution normalized_state(const TruncatedState& s, std::uint64_t t, std::uint64_t m) {
    RankDistribution rd;
    rd.t = t;
    rd.edges = m;
    rd.ranks.assign(s.counts.begin(),
                    s.counts.begin() + static_cast<std::ptrdiff_t>(s.top) + 1);
    const double tn = static_cast<double>(t);
    for (double& x : rd.ranks)
        x /= tn;
    rd.tail_mass = s.lost / tn;
    return rd;
}

} // namespace

IntegrateResult integrate_recurrence(const GrowthConfig& config,
                                     const IntegrateOptions& options) {
    config.validate();
    if (config.mode == GrowthMode::BaBaseline)
        throw ConfigError("integration covers fixed_alpha and variable_beta modes");
    if (!config.initiator_edges.empty())
        throw ConfigError("integration assumes the default single-node initiator");
    if (options.k_max < 2)
        throw ConfigError("k_max must be at least 2");

    // Exact state after completing step t=2: the first arrival attaches to
    // the lone initiator node, and every edge-step edge at two nodes joins
    // the same pair, so both nodes end at degree 1 + dm_1.
    const std::uint64_t dm1 = delta_m_value(config, 0, 1);
    const std::uint64_t first_rank = 1 + dm1;
    if (first_rank > options.k_max)
        throw ConfigError("k_max cannot hold the two-node starting state");

    TruncatedState s;
    s.counts.assign(options.k_max + 1, 0.0);
    s.counts[first_rank] = 2.0;
    s.top = first_rank;
    s.k_max = options.k_max;
    std::uint64_t m = 1 + dm1;

    std::vector<std::uint64_t> times(options.snapshot_times);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    std::size_t next_time = 0;
    while (next_time < times.size() && times[next_time] < 2)
        ++next_time; // times before the bootstrap state cannot be served

    IntegrateResult result;
    std::uint64_t t = 2;
    auto bookkeeping = [&] {
        if (options.record_p1)
            result.p1_series.emplace_back(t, s.counts[1] / static_cast<double>(t));
        while (next_time < times.size() && times[next_time] == t) {
            result.snapshots.push_back(normalized_state(s, t, m));
            ++next_time;
        }
    };
    bookkeeping();

    while (t < config.t_max) {
        const std::uint64_t dm = delta_m_value(config, m, t);
        node_step_update(s, m);
        ++m;
        const double phi = 2.0 / (static_cast<double>(t) + 1.0);
        const double psi = 1.0 - phi;
        if (dm > 0) {
            // the mixture needs a modest shift spread to stay cheap and
            // well-conditioned; tiny or violent widths run sequentially
            if (dm <= 8 || static_cast<double>(dm) * phi > 8.0)
                edge_step_sequential(s, dm, phi, psi);
            else
                edge_step_mixture(s, dm, phi, psi);
        }
        m += dm;
        ++t;
        s.prune_dust();
        bookkeeping();
    }

    result.final = normalized_state(s, t, m);
    result.truncation_warning = result.final.tail_mass > 1e-9;
    return result;
}

GrowthExponentFit fit_log_growth(const std::vector<std::pair<double, double>>& points) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::uint64_t n = 0;
    for (const auto& [t, m] : points) {
        if (t < 2.0 || m <= 0.0)
            continue;
        const double x = std::log(t);
        const double y = std::log(m);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2)
        throw DataError("growth fit needs at least two usable (t, m) points");
    const double nd = static_cast<double>(n);
    const double denom = nd * sxx - sx * sx;
    if (denom <= 0.0)
        throw DataError("growth fit needs at least two distinct t values");
    GrowthExponentFit fit;
    fit.beta_hat = (nd * sxy - sx * sy) / denom;
    fit.m1_hat = std::exp((sy - fit.beta_hat * sx) / nd);
    return fit;
}

GrowthExponentFit growth_exponent_fit(const GrowthTrace& trace) {
    const auto& records = trace.records;
    if (records.size() < 4)
        throw DataError("growth trace too short to fit");
    std::vector<std::pair<double, double>> points;
    points.reserve(records.size() - records.size() / 2);
    for (std::size_t i = records.size() / 2; i < records.size(); ++i)
        points.emplace_back(static_cast<double>(records[i].t),
                            static_cast<double>(records[i].edges));
    return fit_log_growth(points);
}

} // namespace wsnet
