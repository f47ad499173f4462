#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "wsnet/errors.hpp"
#include "wsnet/theory.hpp"

using namespace wsnet;
using boost::multiprecision::cpp_rational;

namespace {

// Independent evaluation of the stationary law: P_1 and the consecutive-rank
// ratios multiplied out in exact rational arithmetic.
double exact_stationary_pk(std::uint64_t alpha, std::uint64_t k) {
    const long long a = static_cast<long long>(alpha);
    const long long A = 4 * a * a + 4 * a - 1;
    const long long B = 4 * a * a + 6 * a + 2;
    cpp_rational p(2 * (a + 1), 4 * a * a + 6 * a + 3);
    for (long long j = 2; j <= static_cast<long long>(k); ++j)
        p *= cpp_rational(j + A, j + B);
    return p.convert_to<double>();
}

} // namespace

TEST_CASE("plain preferential attachment fractions") {
    CHECK(std::fabs(ba_pk(1) - 2.0 / 3.0) < 1e-15);
    CHECK(std::fabs(ba_pk(2) - 1.0 / 6.0) < 1e-15);
    CHECK(std::fabs(ba_pk(3) - 1.0 / 15.0) < 1e-15);
    CHECK(std::fabs(ba_pk(100) - 4.0 / (100.0 * 101.0 * 102.0)) < 1e-18);
    CHECK_THROWS_AS(ba_pk(0), ConfigError);

    double sum = 0.0;
    for (std::uint64_t k = 1; k <= 1000000; ++k)
        sum += ba_pk(k);
    CHECK(std::fabs(sum - 1.0) < 1e-9);
}

TEST_CASE("stationary head fraction") {
    CHECK(std::fabs(stationary_p1(0) - 2.0 / 3.0) < 1e-15);
    CHECK(std::fabs(stationary_p1(1) - 4.0 / 13.0) < 1e-15);
    CHECK(std::fabs(stationary_p1(3) - 8.0 / 57.0) < 1e-15);
    CHECK(std::fabs(stationary_p1(5) - 12.0 / 133.0) < 1e-15);
    for (std::uint64_t a = 0; a < 50; ++a)
        CHECK(stationary_p1(a + 1) < stationary_p1(a));
}

TEST_CASE("stationary law matches its exact rational form") {
    for (const std::uint64_t alpha : {0ULL, 1ULL, 2ULL, 3ULL, 6ULL}) {
        for (std::uint64_t k = 1; k <= 64; ++k) {
            const double expect = exact_stationary_pk(alpha, k);
            const double got = stationary_pk(alpha, k);
            CHECK(std::fabs(got - expect) <= 1e-13 * expect);
        }
    }
    const double far = exact_stationary_pk(2, 200);
    CHECK(std::fabs(stationary_pk(2, 200) - far) <= 1e-13 * far);
}

TEST_CASE("stationary consecutive-rank ratio") {
    for (const std::uint64_t alpha : {0ULL, 2ULL, 7ULL}) {
        for (const std::uint64_t k : {2ULL, 3ULL, 10ULL, 100ULL, 10000ULL}) {
            const double ratio = stationary_pk(alpha, k) / stationary_pk(alpha, k - 1);
            CHECK(std::fabs(ratio - stationary_ratio(alpha, k)) <=
                  1e-12 * stationary_ratio(alpha, k));
        }
    }
    CHECK_THROWS_AS(stationary_ratio(1, 1), ConfigError);
    CHECK_THROWS_AS(stationary_pk(1, 0), ConfigError);
}

TEST_CASE("stationary law at alpha zero collapses to the plain form") {
    for (std::uint64_t k = 1; k <= 1000; ++k) {
        const double expect = ba_pk(k);
        CHECK(std::fabs(stationary_pk(0, k) - expect) <= 1e-14 * expect);
    }
}

TEST_CASE("stationary law is normalized") {
    for (const std::uint64_t alpha : {1ULL, 2ULL}) {
        double sum = 0.0;
        for (std::uint64_t k = 1; k <= 1000000; ++k)
            sum += stationary_pk(alpha, k);
        CHECK(std::fabs(sum - 1.0) < 1e-5);
    }
}

TEST_CASE("log-log slope values and limit") {
    CHECK(std::fabs(slope_delta(3, 100000) + 9.0) < 0.18);
    CHECK(std::fabs(slope_delta(0, 1000000) + 3.0) < 1e-3);
    CHECK(slope_delta(5, 2) == doctest::Approx(-0.147234).epsilon(1e-4));

    CHECK(slope_asymptote(0) == -3.0);
    CHECK(slope_asymptote(1) == -5.0);
    CHECK(slope_asymptote(10) == -23.0);
    CHECK(slope_asymptote(100) == -203.0);
    for (const std::uint64_t alpha : {0ULL, 1ULL, 4ULL})
        CHECK(std::fabs(slope_delta(alpha, 10000000) - slope_asymptote(alpha)) < 0.01);

    CHECK_THROWS_AS(slope_delta(1, 1), ConfigError);
}

TEST_CASE("expected node step on small states") {
    RankDistribution two;
    two.t = 2;
    two.edges = 1;
    two.ranks = {0.0, 1.0};
    const std::vector<double> counts = integrate_node_step(two);
    REQUIRE(counts.size() >= 3);
    CHECK(counts[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(counts[2] == doctest::Approx(1.0).epsilon(1e-14));
    double mass = 0.0;
    double degree = 0.0;
    for (std::size_t k = 1; k < counts.size(); ++k) {
        mass += counts[k];
        degree += static_cast<double>(k) * counts[k];
    }
    CHECK(mass == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(degree == doctest::Approx(4.0).epsilon(1e-14)); // 2 (m + 1)

    RankDistribution seed;
    seed.t = 1;
    seed.edges = 0;
    seed.ranks = {0.0, 1.0};
    const std::vector<double> first = integrate_node_step(seed);
    REQUIRE(first.size() >= 2);
    CHECK(first[1] == doctest::Approx(2.0).epsilon(1e-14));

    RankDistribution bad;
    bad.t = 3;
    bad.edges = 0;
    bad.ranks = {0.0, 1.0};
    CHECK_THROWS_AS(integrate_node_step(bad), ConfigError);
}

TEST_CASE("expected edge step moves mass upward at rate 2/(t+1)") {
    std::vector<double> counts = {0.0, 6.0};
    integrate_edge_step(counts, 1, 9);
    REQUIRE(counts.size() == 3);
    CHECK(counts[1] == doctest::Approx(4.8).epsilon(1e-14));
    CHECK(counts[2] == doctest::Approx(1.2).epsilon(1e-14));

    std::vector<double> frozen = {0.0, 1.0, 2.0};
    integrate_edge_step(frozen, 0, 9);
    CHECK(frozen == std::vector<double>{0.0, 1.0, 2.0});

    CHECK_THROWS_AS(integrate_edge_step(counts, 1, 0), ConfigError);
}

TEST_CASE("edge step at two nodes is a pure shift") {
    // with two nodes phi = 1, so dm iterations move all mass up dm ranks
    std::vector<double> counts = {0.0, 2.0};
    integrate_edge_step(counts, 3, 1);
    REQUIRE(counts.size() == 5);
    CHECK(counts[4] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(counts[1] == 0.0);
    CHECK(counts[2] == 0.0);
    CHECK(counts[3] == 0.0);

    const EdgeStepCoefficients shift = edge_step_coefficients(3, 1, 3);
    REQUIRE(shift.weights.size() == 4);
    CHECK(shift.weights[0] == 0.0);
    CHECK(shift.weights[1] == 0.0);
    CHECK(shift.weights[2] == 0.0);
    CHECK(shift.weights[3] == 1.0);
}

TEST_CASE("edge-step mixture weights are binomial") {
    const EdgeStepCoefficients c = edge_step_coefficients(4, 9, 4);
    REQUIRE(c.weights.size() == 5);
    // phi = 0.2, psi = 0.8
    CHECK(std::fabs(c.weights[0] - 0.4096) < 1e-15);
    CHECK(std::fabs(c.weights[1] - 0.4096) < 1e-15);
    CHECK(std::fabs(c.weights[2] - 0.1536) < 1e-15);
    CHECK(std::fabs(c.weights[3] - 0.0256) < 1e-15);
    CHECK(std::fabs(c.weights[4] - 0.0016) < 1e-15);
    double sum = 0.0;
    for (const double w : c.weights)
        sum += w;
    CHECK(std::fabs(sum - 1.0) < 1e-15);

    const EdgeStepCoefficients cut = edge_step_coefficients(4, 9, 2);
    CHECK(cut.weights.size() == 3);
    CHECK(cut.weights[2] == doctest::Approx(0.1536).epsilon(1e-14));

    CHECK_THROWS_AS(edge_step_coefficients(1, 0, 1), ConfigError);
}

TEST_CASE("stacked edge steps equal their binomial mixture") {
    std::vector<double> base(13, 0.0);
    for (std::size_t k = 1; k <= 12; ++k)
        base[k] = 1.0 + std::fmod(static_cast<double>(k) * 2.7, 5.0);

    for (const std::uint64_t t : {9ULL, 99ULL, 999ULL}) {
        for (std::uint64_t dm = 1; dm <= 6; ++dm) {
            std::vector<double> iterated = base;
            integrate_edge_step(iterated, dm, t);

            const EdgeStepCoefficients c = edge_step_coefficients(dm, t, dm);
            std::vector<double> mixed(base.size() + dm, 0.0);
            for (std::size_t k = 1; k < mixed.size(); ++k) {
                double acc = 0.0;
                for (std::uint64_t n = 0; n <= dm && n < k; ++n) {
                    const std::size_t src = k - n;
                    if (src < base.size())
                        acc += c.weights[n] * base[src];
                }
                mixed[k] = acc;
            }

            REQUIRE(iterated.size() == mixed.size());
            for (std::size_t k = 1; k < mixed.size(); ++k)
                CHECK(std::fabs(iterated[k] - mixed[k]) <= 1e-12);
        }
    }
}

TEST_CASE("recurrence approaches the stationary law") {
    GrowthConfig cfg;
    cfg.mode = GrowthMode::FixedAlpha;
    cfg.alpha = 0;
    cfg.t_max = 10000;
    IntegrateOptions opts;
    opts.k_max = 128;
    const IntegrateResult res = integrate_recurrence(cfg, opts);
    CHECK(res.final.t == cfg.t_max);
    CHECK(std::fabs(res.final.p(1) - 2.0 / 3.0) < 1e-3);
    CHECK(std::fabs(res.final.p(2) / res.final.p(1) - 0.25) < 1e-2);

    cfg.alpha = 1;
    opts.k_max = 256;
    const IntegrateResult res1 = integrate_recurrence(cfg, opts);
    CHECK(std::fabs(res1.final.p(1) - 4.0 / 13.0) < 3e-3);
    CHECK(std::fabs(res1.final.p(2) / res1.final.p(1) - 9.0 / 14.0) < 1e-2);
    CHECK(res1.final.edges == 2 * (cfg.t_max - 1));
}

TEST_CASE("rank cutoff only sheds upward flow") {
    GrowthConfig cfg;
    cfg.mode = GrowthMode::FixedAlpha;
    cfg.alpha = 2;
    cfg.t_max = 2000;

    IntegrateOptions tight;
    tight.k_max = 16;
    const IntegrateResult cut = integrate_recurrence(cfg, tight);
    IntegrateOptions wide;
    wide.k_max = 2048;
    const IntegrateResult full = integrate_recurrence(cfg, wide);

    for (std::uint64_t k = 1; k <= 16; ++k) {
        const double a = cut.final.p(k);
        const double b = full.final.p(k);
        CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)));
    }
    CHECK(cut.final.tail_mass > 0.01);
    CHECK(cut.final.tail_mass < 0.5);
    CHECK(cut.truncation_warning);
    CHECK_FALSE(full.truncation_warning);
}

TEST_CASE("recurrence conserves mass and degree") {
    GrowthConfig cfg;
    cfg.mode = GrowthMode::FixedAlpha;
    cfg.alpha = 1;
    cfg.t_max = 300;
    IntegrateOptions opts;
    opts.k_max = 700; // generous, nothing can escape
    opts.snapshot_times = {150};
    const IntegrateResult res = integrate_recurrence(cfg, opts);

    // nothing escapes the window; only denormal-scale dust pruning remains
    CHECK(res.final.tail_mass < 1e-290);
    CHECK(res.final.edges == 2 * (cfg.t_max - 1));
    double mass = 0.0;
    double degree = 0.0;
    for (std::uint64_t k = 1; k <= res.final.max_rank(); ++k) {
        mass += res.final.p(k);
        degree += static_cast<double>(k) * res.final.p(k) * static_cast<double>(cfg.t_max);
    }
    CHECK(std::fabs(mass - 1.0) < 1e-12);
    const double expected_degree = 2.0 * static_cast<double>(res.final.edges);
    CHECK(std::fabs(degree - expected_degree) <= 1e-9 * expected_degree);

    REQUIRE(res.snapshots.size() == 1);
    const RankDistribution& snap = res.snapshots[0];
    CHECK(snap.t == 150);
    double snapmass = snap.tail_mass;
    for (std::uint64_t k = 1; k <= snap.max_rank(); ++k)
        snapmass += snap.p(k);
    CHECK(std::fabs(snapmass - 1.0) < 1e-12);
}

TEST_CASE("truncated mass is tracked through the mixture path") {
    GrowthConfig cfg;
    cfg.mode = GrowthMode::VariableBeta;
    cfg.beta = 1.5;
    cfg.t_max = 3000;
    IntegrateOptions opts;
    opts.k_max = 64;
    const IntegrateResult res = integrate_recurrence(cfg, opts);
    double mass = res.final.tail_mass;
    for (std::uint64_t k = 1; k <= res.final.max_rank(); ++k)
        mass += res.final.p(k);
    CHECK(std::fabs(mass - 1.0) < 1e-11);
}

TEST_CASE("recurrence follows the generator edge trajectory") {
    GrowthConfig cfg;
    cfg.mode = GrowthMode::VariableBeta;
    cfg.beta = 1.6;
    cfg.t_max = 2000;
    cfg.seed = 5;
    const GenerationResult gen = generate_wsm(cfg);

    IntegrateOptions opts;
    opts.k_max = 128;
    opts.snapshot_times = {500, 1000, 2000};
    const IntegrateResult res = integrate_recurrence(cfg, opts);

    CHECK(res.final.edges == gen.graph.edge_count());
    REQUIRE(res.snapshots.size() == 3);
    for (const RankDistribution& snap : res.snapshots) {
        const TraceRecord& rec = gen.trace.records.at(snap.t - 1);
        CHECK(rec.t == snap.t);
        CHECK(rec.edges == snap.edges);
    }
}

TEST_CASE("head trajectory recording and snapshot scheduling") {
    GrowthConfig cfg;
    cfg.mode = GrowthMode::FixedAlpha;
    cfg.alpha = 0;
    cfg.t_max = 100;
    IntegrateOptions opts;
    opts.k_max = 64;
    opts.record_p1 = true;
    opts.snapshot_times = {50, 10, 10, 1, 150};
    const IntegrateResult res = integrate_recurrence(cfg, opts);

    REQUIRE(res.p1_series.size() == 99);
    CHECK(res.p1_series.front().first == 2);
    CHECK(res.p1_series.front().second == 1.0);
    CHECK(res.p1_series.back().first == 100);

    // duplicate and out-of-range times are dropped, the rest are sorted
    REQUIRE(res.snapshots.size() == 2);
    CHECK(res.snapshots[0].t == 10);
    CHECK(res.snapshots[1].t == 50);
}

TEST_CASE("recurrence rejects unsupported configurations") {
    GrowthConfig cfg;
    cfg.mode = GrowthMode::BaBaseline;
    cfg.w = 2;
    cfg.t_max = 100;
    CHECK_THROWS_AS(integrate_recurrence(cfg), ConfigError);

    cfg.mode = GrowthMode::FixedAlpha;
    cfg.initiator_edges = {{0, 1}};
    CHECK_THROWS_AS(integrate_recurrence(cfg), ConfigError);
    cfg.initiator_edges.clear();

    IntegrateOptions tiny;
    tiny.k_max = 1;
    CHECK_THROWS_AS(integrate_recurrence(cfg, tiny), ConfigError);

    cfg.alpha = 10;
    IntegrateOptions low;
    low.k_max = 8; // cannot hold the rank-11 starting state
    CHECK_THROWS_AS(integrate_recurrence(cfg, low), ConfigError);
}

TEST_CASE("log growth fit recovers exact power laws") {
    std::vector<std::pair<double, double>> pts;
    for (std::uint64_t t = 2; t <= 4000; ++t)
        pts.emplace_back(static_cast<double>(t),
                         3.0 * std::pow(static_cast<double>(t), 1.7));
    const GrowthExponentFit fit = fit_log_growth(pts);
    CHECK(std::fabs(fit.beta_hat - 1.7) < 1e-9);
    CHECK(std::fabs(fit.m1_hat - 3.0) < 1e-8);

    // unusable entries are skipped, the rest fit the line through them
    const std::vector<std::pair<double, double>> sparse = {{1.0, 5.0}, {2.0, 12.0}, {4.0, 39.0}};
    const GrowthExponentFit two = fit_log_growth(sparse);
    CHECK(two.beta_hat == doctest::Approx(std::log(39.0 / 12.0) / std::log(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(fit_log_growth({{1.0, 5.0}}), DataError);
    CHECK_THROWS_AS(fit_log_growth({{2.0, 5.0}, {2.0, 7.0}}), DataError);
}

TEST_CASE("trace growth fit uses the last half") {
    GrowthConfig cfg;
    cfg.mode = GrowthMode::FixedAlpha;
    cfg.alpha = 2;
    cfg.t_max = 2000;
    cfg.seed = 1;
    const GenerationResult res = generate_wsm(cfg);
    const GrowthExponentFit fit = growth_exponent_fit(res.trace);
    CHECK(fit.beta_hat > 0.97);
    CHECK(fit.beta_hat < 1.03);

    GrowthTrace stub;
    stub.records = {{1, 1, 0, 0}, {2, 2, 1, 0}, {3, 3, 2, 0}};
    CHECK_THROWS_AS(growth_exponent_fit(stub), DataError);
}
