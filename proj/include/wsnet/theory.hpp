#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wsnet/generator.hpp"

namespace wsnet {

// Stationary degree fraction P_k of plain preferential attachment with one
// edge per arrival: 4 / (k (k+1) (k+2)).
double ba_pk(std::uint64_t k);

// Stationary P_1 = 2(alpha+1) / (4 alpha^2 + 6 alpha + 3).
double stationary_p1(std::uint64_t alpha);

// Consecutive-rank ratio P_k / P_{k-1} =
// (k + 4a^2 + 4a - 1) / (k + 4a^2 + 6a + 2), k >= 2.
double stationary_ratio(std::uint64_t alpha, std::uint64_t k);

// Stationary P_k from P_1 and the rank ratio, evaluated in closed form.
double stationary_pk(std::uint64_t alpha, std::uint64_t k);

// Local log-log slope of the stationary distribution between ranks k-1 and
// k; requires k >= 2. Tends to -(2 alpha + 3) for large k and flattens
// toward 0 near k = 2.
double slope_delta(std::uint64_t alpha, std::uint64_t k);

double slope_asymptote(std::uint64_t alpha);

// Expected degree distribution at one time step.
struct RankDistribution {
    std::uint64_t t = 1;
    std::uint64_t edges = 0;
    std::vector<double> ranks; // ranks[k] = P_k; index 0 unused
    double tail_mass = 0.0;    // fraction of nodes beyond the tracked range

    double p(std::uint64_t k) const {
        return k < ranks.size() ? ranks[k] : 0.0;
    }
    std::uint64_t max_rank() const;
};

// One node-step applied to expected counts. Returns counts over t+1 nodes
// (unnormalized); entry k is the expected number of degree-k nodes after a
// new node attaches preferentially.
std::vector<double> integrate_node_step(const RankDistribution& state);

// dm edge-step iterations applied in place to expected counts over t+1
// nodes. Each iteration maps N_k to psi N_k + phi N_{k-1} with
// phi = 2/(t+1); the vector grows as mass shifts upward.
void integrate_edge_step(std::vector<double>& counts, std::uint64_t dm, std::uint64_t t);

// Binomial mixture weights equivalent to dm stacked edge-step iterations:
// weights[n] = C(dm, n) psi^(dm-n) phi^n for n = 0..min(n_max, dm).
struct EdgeStepCoefficients {
    std::uint64_t dm = 0;
    std::uint64_t t = 0;
    std::vector<double> weights;
};
EdgeStepCoefficients edge_step_coefficients(std::uint64_t dm, std::uint64_t t,
                                            std::uint64_t n_max);

struct IntegrateOptions {
    // Degrees above k_max leave the tracked window; the escaped share is
    // reported as tail_mass. Mass only ever flows upward, so ranks at or
    // below k_max are unaffected by the cutoff.
    std::uint64_t k_max = 10000;
    std::vector<std::uint64_t> snapshot_times; // ascending
    bool record_p1 = false;                    // keep the whole P_1 trajectory
};

struct IntegrateResult {
    RankDistribution final;
    std::vector<RankDistribution> snapshots;
    std::vector<std::pair<std::uint64_t, double>> p1_series;
    bool truncation_warning = false; // final tail_mass above 1e-9
};

// Deterministic expected-value integration of the growth process from the
// exact two-node state at t=2 out to config.t_max. FixedAlpha and
// VariableBeta only.
IntegrateResult integrate_recurrence(const GrowthConfig& config,
                                     const IntegrateOptions& options = {});

struct GrowthExponentFit {
    double beta_hat = 0.0;
    double m1_hat = 0.0; // prefactor, exp of the intercept
};

// Least-squares fit of log m against log t over the last half of the trace.
GrowthExponentFit growth_exponent_fit(const GrowthTrace& trace);

// Same fit on raw (t, m) pairs; entries with t < 2 or m == 0 are skipped.
GrowthExponentFit fit_log_growth(const std::vector<std::pair<double, double>>& points);

} // namespace wsnet
