#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "wsnet/errors.hpp"
#include "wsnet/generator.hpp"
#include "wsnet/graph.hpp"
#include "wsnet/ingest.hpp"
#include "wsnet/powerlaw.hpp"
#include "wsnet/theory.hpp"

namespace fs = std::filesystem;

using wsnet::ConfigError;
using wsnet::DataError;
using wsnet::DegreeHistogram;
using wsnet::IoError;

namespace {

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

std::ifstream open_in(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string() + " for reading");
    return in;
}

std::uint64_t fnv1a64_file(const fs::path& path) {
    std::ifstream in = open_in(path);
    std::uint64_t h = 14695981039346656037ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
        if (got < static_cast<std::streamsize>(sizeof buf))
            break;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

// Every command records its full configuration plus a checksum per written
// artifact, so reruns can be compared file-for-file.
void write_manifest(const fs::path& dir, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& entries,
                    const std::vector<std::string>& artifacts) {
    std::ofstream out = open_out(dir / "manifest.txt");
    out << "command=" << command << '\n';
    for (const auto& [key, value] : entries)
        out << key << '=' << value << '\n';
    for (const std::string& name : artifacts)
        out << "checksum." << name << '=' << hex64(fnv1a64_file(dir / name)) << '\n';
    if (!out)
        throw IoError("manifest write failed");
}

fs::path prepare_out_dir(const std::string& out_dir) {
    fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + dir.string());
    return dir;
}

std::vector<std::pair<std::string, std::string>> config_entries(const wsnet::GrowthConfig& c) {
    std::ostringstream buf;
    c.write_key_values(buf);
    std::vector<std::pair<std::string, std::string>> entries;
    std::istringstream lines(buf.str());
    std::string line;
    while (std::getline(lines, line)) {
        const auto eq = line.find('=');
        entries.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return entries;
}

// Degree data arrives either as a raw edge list or as a previously exported
// distribution; the file is told apart by its header line.
DegreeHistogram load_degree_file(const fs::path& path, std::ostream& log) {
    {
        std::ifstream probe = open_in(path);
        std::string first;
        std::getline(probe, first);
        if (!first.empty() && first.back() == '\r')
            first.pop_back();
        if (first == "k,count,pk,cdf") {
            std::ifstream in = open_in(path);
            DegreeHistogram hist = wsnet::import_distribution(in);
            log << path.string() << ": distribution table, " << hist.total_nodes()
                << " nodes\n";
            return hist;
        }
    }
    std::ifstream in = open_in(path);
    const wsnet::EdgeListData data = wsnet::parse_edge_list(in);
    log << path.string() << ": edge list, " << data.node_count << " nodes, "
        << data.edge_count << " edges";
    if (data.self_loop_count > 0)
        log << ", " << data.self_loop_count << " self-loops";
    log << '\n';
    return data.histogram;
}

void write_distribution_file(const DegreeHistogram& hist, const fs::path& path) {
    std::ofstream out = open_out(path);
    wsnet::export_distribution(hist, out);
}

struct CdfSeries {
    std::vector<std::uint64_t> ks;
    std::vector<double> cdf;
};

CdfSeries cdf_series(const DegreeHistogram& hist) {
    CdfSeries s;
    const double total = static_cast<double>(hist.total_nodes());
    std::uint64_t running = 0;
    for (const auto& [k, c] : hist.counts()) {
        running += c;
        s.ks.push_back(k);
        s.cdf.push_back(static_cast<double>(running) / total);
    }
    return s;
}

double cdf_at(const CdfSeries& s, std::uint64_t k) {
    const auto it = std::upper_bound(s.ks.begin(), s.ks.end(), k);
    if (it == s.ks.begin())
        return 0.0;
    return s.cdf[static_cast<std::size_t>(it - s.ks.begin()) - 1];
}

int cmd_generate(const std::string& out_dir, const wsnet::GrowthConfig& base,
                 std::uint64_t seed_count) {
    const fs::path dir = prepare_out_dir(out_dir);
    std::vector<std::string> artifacts;

    if (seed_count <= 1) {
        wsnet::GrowthConfig config = base;
        config.keep_edges = true;
        const wsnet::GenerationResult result = wsnet::generate(config);

        {
            std::ofstream out = open_out(dir / "edges.txt");
            for (const auto& [u, v] : result.graph.edges())
                out << u << ' ' << v << '\n';
            if (!out)
                throw IoError("edge list write failed");
        }
        write_distribution_file(wsnet::degree_histogram(result.graph),
                                dir / "distribution.csv");
        {
            std::ofstream out = open_out(dir / "trace.csv");
            out << "t,nodes,edges,delta_m\n";
            for (const wsnet::TraceRecord& r : result.trace.records)
                out << r.t << ',' << r.nodes << ',' << r.edges << ',' << r.delta_m << '\n';
            if (!out)
                throw IoError("trace write failed");
        }
        artifacts = {"edges.txt", "distribution.csv", "trace.csv"};
        if (config.snapshot_stride > 0) {
            std::ofstream out = open_out(dir / "snapshots.csv");
            out << "t,k,count\n";
            for (const auto& [t, hist] : result.trace.snapshots)
                for (const auto& [k, c] : hist.counts())
                    out << t << ',' << k << ',' << c << '\n';
            if (!out)
                throw IoError("snapshot write failed");
            artifacts.push_back("snapshots.csv");
        }
        std::cout << "generated " << result.graph.node_count() << " nodes, "
                  << result.graph.edge_count() << " edges (seed " << config.seed << ")\n";
    } else {
        // ensemble run: one histogram per seed, merged in seed order so the
        // result does not depend on thread scheduling
        std::vector<std::future<DegreeHistogram>> jobs;
        jobs.reserve(seed_count);
        for (std::uint64_t i = 0; i < seed_count; ++i) {
            wsnet::GrowthConfig config = base;
            config.seed = base.seed + i;
            jobs.push_back(std::async(std::launch::async, [config] {
                return wsnet::degree_histogram(wsnet::generate(config).graph);
            }));
        }
        DegreeHistogram merged;
        for (auto& job : jobs)
            merged.merge(job.get());
        write_distribution_file(merged, dir / "distribution.csv");
        artifacts = {"distribution.csv"};
        std::cout << "generated " << seed_count << " runs of " << base.t_max
                  << " nodes (seeds " << base.seed << ".." << base.seed + seed_count - 1
                  << "), merged histogram over " << merged.total_nodes() << " nodes\n";
    }

    auto entries = config_entries(base);
    entries.emplace_back("seeds", std::to_string(seed_count));
    write_manifest(dir, "generate", entries, artifacts);
    return 0;
}

std::vector<std::uint64_t> doubling_times(std::uint64_t t_max) {
    std::vector<std::uint64_t> times;
    for (std::uint64_t t = 2; t < t_max; t *= 2)
        times.push_back(t);
    times.push_back(t_max);
    return times;
}

// Log-spaced degree grid for slope tables: dense at the flat small-k end,
// geometric afterwards out to k_hi.
std::vector<std::uint64_t> slope_grid(std::uint64_t k_hi) {
    if (k_hi < 2)
        throw ConfigError("slope tables need a largest degree of at least 2");
    std::vector<std::uint64_t> ks;
    for (std::uint64_t k = 2; k <= std::min<std::uint64_t>(10, k_hi); ++k)
        ks.push_back(k);
    double k = 10.0;
    while (ks.back() < k_hi) {
        k *= 1.25;
        ks.push_back(std::min(static_cast<std::uint64_t>(k), k_hi));
    }
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

void write_slope_table(std::uint64_t alpha, std::uint64_t k_hi, const fs::path& path) {
    std::ofstream out = open_out(path);
    out << "k,delta\n";
    for (const std::uint64_t k : slope_grid(k_hi))
        out << k << ',' << wsnet::format_float6(wsnet::slope_delta(alpha, k)) << '\n';
    if (!out)
        throw IoError("slope table write failed");
}

int cmd_theory(const std::string& out_dir, bool have_alpha, std::uint64_t alpha,
               bool have_beta, double beta, std::uint64_t t_max, std::uint64_t k_max,
               bool stationary_only, bool slopes, std::uint64_t rows,
               std::uint64_t slope_k_hi) {
    const fs::path dir = prepare_out_dir(out_dir);
    std::vector<std::pair<std::string, std::string>> entries;
    std::vector<std::string> artifacts;

    if (slopes && !have_alpha)
        throw ConfigError("slope tables need --alpha");

    if (have_alpha) {
        entries.emplace_back("alpha", std::to_string(alpha));
    } else {
        entries.emplace_back("beta", wsnet::format_float6(beta));
    }

    if (stationary_only) {
        if (!have_alpha)
            throw ConfigError("the stationary table needs --alpha");
        std::ofstream out = open_out(dir / "stationary.csv");
        out << "k,pk\n";
        for (std::uint64_t k = 1; k <= rows; ++k)
            out << k << ',' << wsnet::format_float6(wsnet::stationary_pk(alpha, k)) << '\n';
        if (!out)
            throw IoError("stationary table write failed");
        artifacts.push_back("stationary.csv");
        entries.emplace_back("rows", std::to_string(rows));
        std::cout << "stationary P1 = " << wsnet::format_float6(wsnet::stationary_p1(alpha))
                  << '\n';
    } else {
        if (t_max < 2)
            throw ConfigError("--t-max is required unless --stationary-only is given");
        wsnet::GrowthConfig config;
        config.mode = have_beta ? wsnet::GrowthMode::VariableBeta
                                : wsnet::GrowthMode::FixedAlpha;
        config.alpha = alpha;
        config.beta = beta;
        config.t_max = t_max;
        wsnet::IntegrateOptions options;
        options.k_max = k_max;
        options.snapshot_times = doubling_times(t_max);
        const wsnet::IntegrateResult result = wsnet::integrate_recurrence(config, options);

        std::ofstream out = open_out(dir / "trajectory.csv");
        out << "t,k,pk\n";
        for (const wsnet::RankDistribution& snap : result.snapshots)
            for (std::uint64_t k = 1; k < snap.ranks.size(); ++k)
                if (snap.ranks[k] > 0.0)
                    out << snap.t << ',' << k << ',' << wsnet::format_float6(snap.ranks[k])
                        << '\n';
        if (!out)
            throw IoError("trajectory write failed");
        artifacts.push_back("trajectory.csv");
        entries.emplace_back("t_max", std::to_string(t_max));
        entries.emplace_back("k_max", std::to_string(k_max));

        std::cout << "P1(" << t_max << ") = " << wsnet::format_float6(result.final.p(1))
                  << ", tail mass " << wsnet::format_float6(result.final.tail_mass) << '\n';
        if (result.truncation_warning)
            std::cout << "warning: tail mass above 1e-9; consider raising --k-max\n";
    }

    if (slopes) {
        write_slope_table(alpha, slope_k_hi, dir / "slopes.csv");
        artifacts.push_back("slopes.csv");
        entries.emplace_back("slope_k_max", std::to_string(slope_k_hi));
        std::cout << "slope asymptote = " << wsnet::format_float6(wsnet::slope_asymptote(alpha))
                  << '\n';
    }

    write_manifest(dir, "theory", entries, artifacts);
    return 0;
}

int cmd_fit(const std::string& out_dir, const std::string& input,
            const wsnet::FitOptions& options) {
    const fs::path dir = prepare_out_dir(out_dir);
    const DegreeHistogram hist = load_degree_file(input, std::cout);
    const wsnet::PowerLawFit fit = wsnet::fit_power_law(hist, options);

    {
        std::ofstream out = open_out(dir / "fit.csv");
        out << "gamma,k_min,ks,n_tail,slope_before_kmin\n";
        out << wsnet::format_float6(fit.gamma) << ',' << fit.k_min << ','
            << wsnet::format_float6(fit.ks_stat) << ',' << fit.n_tail << ','
            << wsnet::format_float6(fit.slope_before_kmin) << '\n';
        if (!out)
            throw IoError("fit write failed");
    }

    std::cout << "gamma = " << wsnet::format_float6(fit.gamma) << ", k_min = " << fit.k_min
              << ", ks = " << wsnet::format_float6(fit.ks_stat) << ", tail n = " << fit.n_tail
              << '\n';
    if (fit.degenerate)
        std::cout << "warning: gamma pinned at the search bound; no power-law structure\n";
    if (options.bootstrap_replicates > 0)
        std::cout << "bootstrap p = " << wsnet::format_float6(fit.p_value) << " ("
                  << options.bootstrap_replicates << " replicates)\n";

    std::vector<std::pair<std::string, std::string>> entries{
        {"input", input},
        {"min_tail", std::to_string(options.min_tail)},
        {"candidate_fraction", wsnet::format_float6(options.candidate_fraction)},
        {"gamma_max", wsnet::format_float6(options.gamma_max)},
        {"bootstrap_replicates", std::to_string(options.bootstrap_replicates)},
        {"bootstrap_seed", std::to_string(options.bootstrap_seed)},
    };
    write_manifest(dir, "fit", entries, {"fit.csv"});
    return 0;
}

int cmd_compare(const std::string& out_dir, const std::string& real_path,
                const std::string& wsm_path, const std::string& ba_path, bool auto_mode,
                std::uint64_t seed) {
    const fs::path dir = prepare_out_dir(out_dir);
    if (!auto_mode && wsm_path.empty() && ba_path.empty())
        throw ConfigError("compare needs --auto or at least one of --wsm and --ba");
    if (auto_mode && (!wsm_path.empty() || !ba_path.empty()))
        throw ConfigError("--auto excludes --wsm and --ba");

    std::vector<std::pair<std::string, std::string>> entries{{"real", real_path}};

    std::ifstream real_in = open_in(real_path);
    const wsnet::EdgeListData real = wsnet::parse_edge_list(real_in);
    std::cout << real_path << ": " << real.node_count << " nodes, " << real.edge_count
              << " edges\n";

    std::optional<DegreeHistogram> wsm;
    std::optional<DegreeHistogram> ba;
    if (auto_mode) {
        const std::uint64_t alpha = wsnet::estimate_alpha(real.node_count, real.edge_count);
        const std::uint64_t w = std::max<std::uint64_t>(1, alpha + 1);
        wsnet::GrowthConfig wsm_config;
        wsm_config.mode = wsnet::GrowthMode::FixedAlpha;
        wsm_config.alpha = alpha;
        wsm_config.t_max = real.node_count;
        wsm_config.seed = seed;
        wsnet::GrowthConfig ba_config;
        ba_config.mode = wsnet::GrowthMode::BaBaseline;
        ba_config.w = w;
        ba_config.t_max = real.node_count;
        ba_config.seed = seed + 1;
        wsm = wsnet::degree_histogram(wsnet::generate(wsm_config).graph);
        ba = wsnet::degree_histogram(wsnet::generate(ba_config).graph);
        entries.emplace_back("alpha", std::to_string(alpha));
        entries.emplace_back("w", std::to_string(w));
        entries.emplace_back("seed", std::to_string(seed));
        std::cout << "matched generation: alpha = " << alpha << ", w = " << w << ", "
                  << real.node_count << " nodes\n";
    } else {
        if (!wsm_path.empty()) {
            wsm = load_degree_file(wsm_path, std::cout);
            entries.emplace_back("wsm", wsm_path);
        }
        if (!ba_path.empty()) {
            ba = load_degree_file(ba_path, std::cout);
            entries.emplace_back("ba", ba_path);
        }
    }

    // aligned CDF table over the union of observed degrees
    const CdfSeries real_cdf = cdf_series(real.histogram);
    std::optional<CdfSeries> wsm_cdf;
    std::optional<CdfSeries> ba_cdf;
    std::vector<std::uint64_t> union_ks(real_cdf.ks);
    if (wsm) {
        wsm_cdf = cdf_series(*wsm);
        union_ks.insert(union_ks.end(), wsm_cdf->ks.begin(), wsm_cdf->ks.end());
    }
    if (ba) {
        ba_cdf = cdf_series(*ba);
        union_ks.insert(union_ks.end(), ba_cdf->ks.begin(), ba_cdf->ks.end());
    }
    std::sort(union_ks.begin(), union_ks.end());
    union_ks.erase(std::unique(union_ks.begin(), union_ks.end()), union_ks.end());

    {
        std::ofstream out = open_out(dir / "cdf.csv");
        out << "k,cdf_real";
        if (wsm_cdf)
            out << ",cdf_wsm";
        if (ba_cdf)
            out << ",cdf_ba";
        out << '\n';
        for (const std::uint64_t k : union_ks) {
            out << k << ',' << wsnet::format_float6(cdf_at(real_cdf, k));
            if (wsm_cdf)
                out << ',' << wsnet::format_float6(cdf_at(*wsm_cdf, k));
            if (ba_cdf)
                out << ',' << wsnet::format_float6(cdf_at(*ba_cdf, k));
            out << '\n';
        }
        if (!out)
            throw IoError("cdf table write failed");
    }

    {
        std::ofstream out = open_out(dir / "ks.csv");
        out << "pair,ks\n";
        if (wsm) {
            const double d = wsnet::compare_cdf(real.histogram, *wsm);
            out << "real_wsm," << wsnet::format_float6(d) << '\n';
            std::cout << "ks(real, wsm) = " << wsnet::format_float6(d) << '\n';
        }
        if (ba) {
            const double d = wsnet::compare_cdf(real.histogram, *ba);
            out << "real_ba," << wsnet::format_float6(d) << '\n';
            std::cout << "ks(real, ba) = " << wsnet::format_float6(d) << '\n';
        }
        if (wsm && ba)
            out << "wsm_ba," << wsnet::format_float6(wsnet::compare_cdf(*wsm, *ba)) << '\n';
        if (!out)
            throw IoError("ks table write failed");
    }

    write_manifest(dir, "compare", entries, {"cdf.csv", "ks.csv"});
    return 0;
}

int cmd_slopes(const std::string& out_dir, std::uint64_t alpha, std::uint64_t k_hi) {
    const fs::path dir = prepare_out_dir(out_dir);
    write_slope_table(alpha, k_hi, dir / "slopes.csv");
    std::cout << "slope asymptote = " << wsnet::format_float6(wsnet::slope_asymptote(alpha))
              << '\n';
    write_manifest(dir, "slopes",
                   {{"alpha", std::to_string(alpha)}, {"k_max", std::to_string(k_hi)}},
                   {"slopes.csv"});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weakly scale-free network generation, theory, and fitting"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "grow a network and export it");
    std::uint64_t gen_alpha = 0;
    double gen_beta = 1.5;
    std::uint64_t gen_w = 1;
    std::uint64_t gen_nodes = 0;
    std::uint64_t gen_seed = 1;
    std::uint64_t gen_seeds = 1;
    std::uint64_t gen_snapshots = 0;
    std::string gen_out = ".";
    auto* gen_mode = gen->add_option_group("mode", "growth mode");
    auto* opt_alpha = gen_mode->add_option("--alpha", gen_alpha,
                                           "fixed edge-step width per time step");
    auto* opt_beta = gen_mode->add_option("--beta", gen_beta,
                                          "variable edge-step growth exponent in (1,2)");
    auto* opt_w = gen_mode->add_option("--ba-w", gen_w,
                                       "plain preferential attachment, w edges per arrival");
    gen_mode->require_option(1);
    gen->add_option("--nodes", gen_nodes, "target node count")->required();
    gen->add_option("--seed", gen_seed, "base random seed");
    gen->add_option("--seeds", gen_seeds, "number of seeds; above 1 merges histograms")
        ->check(CLI::PositiveNumber);
    gen->add_option("--snapshots", gen_snapshots, "histogram snapshot stride (0 disables)");
    gen->add_option("--out-dir", gen_out, "output directory");

    // theory
    auto* theory = app.add_subcommand("theory", "closed forms and recurrence integration");
    std::uint64_t th_alpha = 0;
    double th_beta = 1.5;
    std::uint64_t th_tmax = 0;
    std::uint64_t th_kmax = 10000;
    std::uint64_t th_rows = 100;
    std::uint64_t th_slope_k = 1000000;
    bool th_stationary = false;
    bool th_slopes = false;
    std::string th_out = ".";
    auto* th_mode = theory->add_option_group("mode", "growth mode");
    auto* th_opt_alpha = th_mode->add_option("--alpha", th_alpha, "fixed edge-step width");
    th_mode->add_option("--beta", th_beta, "variable edge-step growth exponent");
    th_mode->require_option(1);
    theory->add_option("--t-max", th_tmax, "integration horizon (node count)");
    theory->add_option("--k-max", th_kmax, "tracked degree cutoff for the integrator");
    theory->add_option("--rows", th_rows, "stationary table length");
    theory->add_option("--slope-k-max", th_slope_k, "largest degree in the slope table");
    theory->add_flag("--stationary-only", th_stationary, "write the stationary table only");
    theory->add_flag("--slopes", th_slopes, "also write the local slope table");
    theory->add_option("--out-dir", th_out, "output directory");

    // fit
    auto* fit = app.add_subcommand("fit", "fit a discrete power law to degree data");
    std::string fit_input;
    std::string fit_out = ".";
    wsnet::FitOptions fit_options;
    fit->add_option("--input", fit_input, "edge list or distribution csv")->required();
    fit->add_option("--min-tail", fit_options.min_tail, "smallest admissible tail size");
    fit->add_option("--fraction", fit_options.candidate_fraction,
                    "fraction of distinct degrees admitted as k_min candidates");
    fit->add_option("--gamma-max", fit_options.gamma_max, "upper end of the gamma search");
    fit->add_option("--bootstrap", fit_options.bootstrap_replicates,
                    "goodness-of-fit bootstrap replicates (0 skips)");
    fit->add_option("--bootstrap-seed", fit_options.bootstrap_seed, "bootstrap seed");
    fit->add_option("--out-dir", fit_out, "output directory");

    // compare
    auto* compare = app.add_subcommand("compare", "compare degree CDFs against a real network");
    std::string cmp_real;
    std::string cmp_wsm;
    std::string cmp_ba;
    bool cmp_auto = false;
    std::uint64_t cmp_seed = 1;
    std::string cmp_out = ".";
    compare->add_option("--real", cmp_real, "real edge list")->required();
    compare->add_option("--wsm", cmp_wsm, "generated network (edge list or distribution)");
    compare->add_option("--ba", cmp_ba, "baseline network (edge list or distribution)");
    compare->add_flag("--auto", cmp_auto,
                      "derive alpha and w from the real network and generate both");
    compare->add_option("--seed", cmp_seed, "seed for --auto generation");
    compare->add_option("--out-dir", cmp_out, "output directory");

    // slopes
    auto* slopes = app.add_subcommand("slopes", "local log-log slope table of the stationary law");
    std::uint64_t sl_alpha = 0;
    std::uint64_t sl_khi = 1000000;
    std::string sl_out = ".";
    slopes->add_option("--alpha", sl_alpha, "fixed edge-step width")->required();
    slopes->add_option("--k-max", sl_khi, "largest degree in the table");
    slopes->add_option("--out-dir", sl_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            wsnet::GrowthConfig config;
            if (*opt_alpha) {
                config.mode = wsnet::GrowthMode::FixedAlpha;
                config.alpha = gen_alpha;
            } else if (*opt_beta) {
                config.mode = wsnet::GrowthMode::VariableBeta;
                config.beta = gen_beta;
            } else if (*opt_w) {
                config.mode = wsnet::GrowthMode::BaBaseline;
                config.w = gen_w;
            }
            config.t_max = gen_nodes;
            config.seed = gen_seed;
            config.snapshot_stride = gen_snapshots;
            config.validate();
            return cmd_generate(gen_out, config, gen_seeds);
        }
        if (theory->parsed())
            return cmd_theory(th_out, static_cast<bool>(*th_opt_alpha), th_alpha,
                              !static_cast<bool>(*th_opt_alpha), th_beta, th_tmax, th_kmax,
                              th_stationary, th_slopes, th_rows, th_slope_k);
        if (fit->parsed())
            return cmd_fit(fit_out, fit_input, fit_options);
        if (compare->parsed())
            return cmd_compare(cmp_out, cmp_real, cmp_wsm, cmp_ba, cmp_auto, cmp_seed);
        if (slopes->parsed())
            return cmd_slopes(sl_out, sl_alpha, sl_khi);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
