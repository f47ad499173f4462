#include "wsnet/graph.hpp"

#include <cassert>
#include <stdexcept>

namespace wsnet {

Graph::Graph(std::uint64_t initial_nodes, bool keep_edges)
    : keep_edges_(keep_edges) {
    if (initial_nodes == 0)
        throw std::invalid_argument("graph needs at least one node");
    degrees_.assign(initial_nodes, 0);
}

std::uint64_t Graph::degree(NodeId v) const {
    if (v >= degrees_.size())
        throw std::out_of_range("degree: node " + std::to_string(v) + " does not exist");
    return degrees_[v];
}

NodeId Graph::add_node() {
    const NodeId id = static_cast<NodeId>(degrees_.size());
    degrees_.push_back(0);
    return id;
}

void Graph::add_edge(NodeId u, NodeId v) {
    if (u == v)
        throw SelfLoopError(u);
    if (u >= degrees_.size() || v >= degrees_.size())
        throw std::out_of_range("add_edge: endpoint out of range");
    ++degrees_[u];
    ++degrees_[v];
    pa_targets_.push_back(u);
    pa_targets_.push_back(v);
    ++edge_count_;
    if (keep_edges_)
        edges_.emplace_back(u, v);
    assert(pa_targets_.size() == 2 * edge_count_);
}

NodeId Graph::sample_preferential(RngStream& rng) const {
    if (pa_targets_.empty())
        throw DegenerateGraphError("sample_preferential: graph has no edges");
    return pa_targets_[rng.uniform_below(pa_targets_.size())];
}

std::pair<NodeId, NodeId> Graph::sample_uniform_pair(RngStream& rng) const {
    const std::uint64_t n = degrees_.size();
    if (n < 2)
        throw DegenerateGraphError("sample_uniform_pair: need at least two nodes");
    const std::uint64_t x = rng.uniform_below(n);
    // Drawing the second node from a range one short and bumping it past x
    // keeps all n(n-1) ordered pairs equally likely.
    std::uint64_t y = rng.uniform_below(n - 1);
    if (y >= x)
        ++y;
    return {static_cast<NodeId>(x), static_cast<NodeId>(y)};
}

DegreeHistogram degree_histogram(const Graph& g) {
    DegreeHistogram hist;
    for (const std::uint32_t d : g.degrees())
        hist.add(d);
    return hist;
}

} // namespace wsnet
