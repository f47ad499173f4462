#include "wsnet/generator.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "wsnet/errors.hpp"

namespace wsnet {

const char* to_string(GrowthMode mode) {
    switch (mode) {
    case GrowthMode::FixedAlpha:
        return "fixed_alpha";
    case GrowthMode::VariableBeta:
        return "variable_beta";
    case GrowthMode::BaBaseline:
        return "ba";
    }
    return "unknown";
}

GrowthMode growth_mode_from_string(const std::string& name) {
    if (name == "fixed_alpha")
        return GrowthMode::FixedAlpha;
    if (name == "variable_beta")
        return GrowthMode::VariableBeta;
    if (name == "ba")
        return GrowthMode::BaBaseline;
    throw ConfigError("unknown growth mode '" + name + "'");
}

void GrowthConfig::validate() const {
    if (t_max < 2)
        throw ConfigError("t_max must be at least 2");
    if (t_max > static_cast<std::uint64_t>(std::numeric_limits<NodeId>::max()))
        throw ConfigError("t_max exceeds the node id range");
    if (mode == GrowthMode::VariableBeta && !(beta > 1.0 && beta < 2.0))
        throw ConfigError("beta must lie in (1, 2)");
    if (mode == GrowthMode::BaBaseline && w == 0)
        throw ConfigError("w must be at least 1");
    for (const auto& [u, v] : initiator_edges)
        if (u == v)
            throw ConfigError("initiator contains a self-loop");
}

void GrowthConfig::write_key_values(std::ostream& out) const {
    out << "mode=" << to_string(mode) << '\n';
    out << "alpha=" << alpha << '\n';
    out << "beta=" << beta << '\n';
    out << "w=" << w << '\n';
    out << "t_max=" << t_max << '\n';
    out << "seed=" << seed << '\n';
    out << "snapshot_stride=" << snapshot_stride << '\n';
}

GrowthConfig GrowthConfig::from_key_values(std::istream& in) {
    GrowthConfig config;
    bool saw_mode = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        std::string key = line.substr(start, eq - start);
        std::string value = line.substr(eq + 1);
        // strip surrounding blanks
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
            key.pop_back();
        const auto vstart = value.find_first_not_of(" \t");
        const auto vend = value.find_last_not_of(" \t\r");
        value = vstart == std::string::npos ? "" : value.substr(vstart, vend - vstart + 1);

        try {
            if (key == "mode") {
                config.mode = growth_mode_from_string(value);
                saw_mode = true;
            } else if (key == "alpha") {
                config.alpha = std::stoull(value);
            } else if (key == "beta") {
                config.beta = std::stod(value);
            } else if (key == "w") {
                config.w = std::stoull(value);
            } else if (key == "t_max") {
                config.t_max = std::stoull(value);
            } else if (key == "seed") {
                config.seed = std::stoull(value);
            } else if (key == "snapshot_stride") {
                config.snapshot_stride = std::stoull(value);
            } else {
                throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("config line " + std::to_string(line_no) + ": bad value '" + value +
                              "' for key '" + key + "'");
        }
    }
    if (!saw_mode)
        throw ConfigError("config is missing the mode key");
    config.validate();
    return config;
}

std::uint64_t delta_m_value(const GrowthConfig& config, std::uint64_t edges, std::uint64_t t) {
    switch (config.mode) {
    case GrowthMode::FixedAlpha:
        return config.alpha;
    case GrowthMode::VariableBeta: {
        if (t == 0)
            throw ConfigError("delta_m needs t >= 1");
        const double target =
            std::ceil(config.beta * static_cast<double>(edges) / static_cast<double>(t));
        // target - 1 extra edges, never negative
        return target <= 1.0 ? 0 : static_cast<std::uint64_t>(target) - 1;
    }
    case GrowthMode::BaBaseline:
        break;
    }
    throw ConfigError("delta_m is defined for the growth modes only");
}

std::uint64_t delta_m(const GrowthConfig& config, const Graph& g, std::uint64_t t) {
    return delta_m_value(config, g.edge_count(), t);
}

void run_node_step(Graph& g, RngStream& rng) {
    NodeId target;
    if (g.total_degree() == 0) {
        if (g.node_count() != 1)
            throw DegenerateGraphError("node step: edgeless graph with several nodes");
        target = 0; // the unique existing node
    } else {
        target = g.sample_preferential(rng);
    }
    const NodeId arrival = g.add_node();
    g.add_edge(arrival, target);
}

void run_edge_step(Graph& g, std::uint64_t dm, RngStream& rng) {
    for (std::uint64_t i = 0; i < dm; ++i) {
        const auto [x, y] = g.sample_uniform_pair(rng);
        g.add_edge(x, y);
    }
}

namespace {

Graph build_initiator(const GrowthConfig& config) {
    if (config.initiator_edges.empty())
        return Graph(1, config.keep_edges);
    NodeId max_id = 0;
    for (const auto& [u, v] : config.initiator_edges)
        max_id = std::max({max_id, u, v});
    Graph g(static_cast<std::uint64_t>(max_id) + 1, config.keep_edges);
    for (const auto& [u, v] : config.initiator_edges)
        g.add_edge(u, v);
    return g;
}

void maybe_snapshot(const GrowthConfig& config, const Graph& g, GrowthTrace& trace) {
    if (config.snapshot_stride != 0 && g.node_count() % config.snapshot_stride == 0)
        trace.snapshots.emplace_back(g.node_count(), degree_histogram(g));
}

} // namespace

GenerationResult generate_wsm(const GrowthConfig& config) {
    config.validate();
    if (config.mode == GrowthMode::BaBaseline)
        throw ConfigError("generate_wsm covers fixed_alpha and variable_beta modes");
    RngStream rng(config.seed);
    Graph g = build_initiator(config);
    if (g.node_count() > config.t_max)
        throw ConfigError("initiator already has more than t_max nodes");

    GrowthTrace trace;
    while (g.node_count() < config.t_max) {
        const std::uint64_t t = g.node_count();
        const std::uint64_t dm = delta_m_value(config, g.edge_count(), t);
        trace.records.push_back({t, g.node_count(), g.edge_count(), dm});
        run_node_step(g, rng);
        run_edge_step(g, dm, rng);
        maybe_snapshot(config, g, trace);
    }
    trace.records.push_back({g.node_count(), g.node_count(), g.edge_count(),
                             delta_m_value(config, g.edge_count(), g.node_count())});
    return {std::move(g), std::move(trace)};
}

namespace {

Graph grow_ba(const GrowthConfig& config, RngStream& rng, GrowthTrace* trace) {
    const std::uint64_t w = config.w;
    Graph g = [&] {
        if (!config.initiator_edges.empty())
            return build_initiator(config);
        // default seed: clique on max(2, w+1) nodes, so every seed node
        // already has degree >= w
        const std::uint64_t s = std::max<std::uint64_t>(2, w + 1);
        Graph clique(s, config.keep_edges);
        for (NodeId i = 0; i < s; ++i)
            for (NodeId j = i + 1; j < s; ++j)
                clique.add_edge(i, j);
        return clique;
    }();

    std::uint64_t eligible = 0;
    for (const std::uint32_t d : g.degrees())
        if (d > 0)
            ++eligible;
    if (eligible < w)
        throw ConfigError("ba initiator has fewer than w nodes with nonzero degree");
    if (g.node_count() > config.t_max)
        throw ConfigError("initiator already has more than t_max nodes");

    std::vector<NodeId> targets;
    targets.reserve(w);
    while (g.node_count() < config.t_max) {
        if (trace)
            trace->records.push_back({g.node_count(), g.node_count(), g.edge_count(), w - 1});
        // choose w distinct targets against the pre-arrival degrees
        targets.clear();
        while (targets.size() < w) {
            const NodeId candidate = g.sample_preferential(rng);
            if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
                targets.push_back(candidate);
        }
        const NodeId arrival = g.add_node();
        for (const NodeId tgt : targets)
            g.add_edge(arrival, tgt);
        if (trace) {
            if (config.snapshot_stride != 0 && g.node_count() % config.snapshot_stride == 0)
                trace->snapshots.emplace_back(g.node_count(), degree_histogram(g));
        }
    }
    if (trace)
        trace->records.push_back({g.node_count(), g.node_count(), g.edge_count(), w - 1});
    return g;
}

} // namespace

Graph generate_ba(std::uint64_t w, std::uint64_t t_max, RngStream& rng, bool keep_edges) {
    GrowthConfig config;
    config.mode = GrowthMode::BaBaseline;
    config.w = w;
    config.t_max = t_max;
    config.keep_edges = keep_edges;
    config.validate();
    return grow_ba(config, rng, nullptr);
}

GenerationResult generate(const GrowthConfig& config) {
    if (config.mode != GrowthMode::BaBaseline)
        return generate_wsm(config);
    config.validate();
    RngStream rng(config.seed);
    GrowthTrace trace;
    Graph g = grow_ba(config, rng, &trace);
    return {std::move(g), std::move(trace)};
}

} // namespace wsnet
