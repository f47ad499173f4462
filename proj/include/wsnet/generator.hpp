#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wsnet/graph.hpp"

namespace wsnet {

enum class GrowthMode {
    FixedAlpha,   // alpha extra uniform edges per time step
    VariableBeta, // edge-step width follows ceil(beta * m_t / t) - 1
    BaBaseline,   // plain preferential attachment, w edges per arrival
};

const char* to_string(GrowthMode mode);
GrowthMode growth_mode_from_string(const std::string& name);

// Everything needed to reproduce one growth run.
struct GrowthConfig {
    GrowthMode mode = GrowthMode::FixedAlpha;
    std::uint64_t alpha = 0; // FixedAlpha: edge-step edges per time step
    double beta = 1.5;       // VariableBeta: growth exponent, 1 < beta < 2
    std::uint64_t w = 1;     // BaBaseline: attachments per arriving node
    std::uint64_t t_max = 2; // final node count
    std::uint64_t seed = 0;
    std::uint64_t snapshot_stride = 0; // take a histogram snapshot every
                                       // stride steps; 0 disables
    bool keep_edges = false;
    // Optional explicit starting graph given as edge endpoints over dense
    // ids. Empty means the default initiator (a single node for the growth
    // modes, a small clique for BaBaseline).
    std::vector<std::pair<NodeId, NodeId>> initiator_edges;

    void validate() const; // throws ConfigError

    // Flat key-value serialization (keys: mode, alpha, beta, w, t_max, seed,
    // snapshot_stride). Lines are "key=value"; '#' starts a comment.
    void write_key_values(std::ostream& out) const;
    static GrowthConfig from_key_values(std::istream& in); // throws ConfigError
};

// State after completing time step t plus the edge-step width chosen while
// leaving it. Node count and time step coincide under the default initiator.
struct TraceRecord {
    std::uint64_t t = 0;
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    std::uint64_t delta_m = 0;
};

struct GrowthTrace {
    std::vector<TraceRecord> records;
    std::vector<std::pair<std::uint64_t, DegreeHistogram>> snapshots;
};

struct GenerationResult {
    Graph graph;
    GrowthTrace trace;
};

// Edge-step width for the step leaving time t, where edges counts the edges
// present after completing step t. Rejects BaBaseline configs.
std::uint64_t delta_m_value(const GrowthConfig& config, std::uint64_t edges, std::uint64_t t);
std::uint64_t delta_m(const GrowthConfig& config, const Graph& g, std::uint64_t t);

// Adds one node attached to a preferentially chosen existing node. A graph
// with no edges yet must consist of a single node, which becomes the target.
void run_node_step(Graph& g, RngStream& rng);

// Adds dm edges between uniformly chosen distinct pairs.
void run_edge_step(Graph& g, std::uint64_t dm, RngStream& rng);

// Node-step plus edge-step growth until t_max nodes (FixedAlpha or
// VariableBeta modes).
GenerationResult generate_wsm(const GrowthConfig& config);

// Preferential-attachment baseline: each arrival attaches to w distinct
// existing nodes, duplicates redrawn. The default initiator is a clique on
// max(2, w+1) nodes.
Graph generate_ba(std::uint64_t w, std::uint64_t t_max, RngStream& rng, bool keep_edges = false);

// Dispatch on config.mode; always produces a trace.
GenerationResult generate(const GrowthConfig& config);

} // namespace wsnet
