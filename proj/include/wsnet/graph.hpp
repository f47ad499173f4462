#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wsnet/rng.hpp"

namespace wsnet {

// Dense node ids, 0..node_count()-1.
using NodeId = std::uint32_t;

// Connecting a node to itself is rejected everywhere.
struct SelfLoopError : std::invalid_argument {
    explicit SelfLoopError(NodeId v)
        : std::invalid_argument("self-loop rejected at node " + std::to_string(v)) {}
};

// Sampling from a graph whose total degree is zero.
struct DegenerateGraphError : std::logic_error {
    using std::logic_error::logic_error;
};

// Degree -> node count table, ordered by degree.
class DegreeHistogram {
  public:
    void add(std::uint64_t degree, std::uint64_t count = 1) {
        if (count == 0)
            return;
        counts_[degree] += count;
        total_nodes_ += count;
        total_degree_ += degree * count;
    }

    void merge(const DegreeHistogram& other) {
        for (const auto& [degree, count] : other.counts_)
            add(degree, count);
    }

    std::uint64_t count(std::uint64_t degree) const {
        const auto it = counts_.find(degree);
        return it == counts_.end() ? 0 : it->second;
    }

    std::uint64_t total_nodes() const { return total_nodes_; }

    // Sum of degree * count; equals twice the edge count for a whole graph.
    std::uint64_t total_degree() const { return total_degree_; }

    std::uint64_t max_degree() const {
        return counts_.empty() ? 0 : counts_.rbegin()->first;
    }

    bool empty() const { return counts_.empty(); }

    const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }

    friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;

  private:
    std::map<std::uint64_t, std::uint64_t> counts_;
    std::uint64_t total_nodes_ = 0;
    std::uint64_t total_degree_ = 0;
};

// Growing undirected multigraph. Parallel edges are allowed, self-loops are
// not, and nodes are never removed.
//
// Every edge endpoint is appended to pa_targets_, so node v occupies
// degree(v) slots of that list and a uniform draw from it is a draw
// proportional to degree. That makes preferential sampling O(1) at the cost
// of 2m extra words.
class Graph {
  public:
    explicit Graph(std::uint64_t initial_nodes = 1, bool keep_edges = false);

    std::uint64_t node_count() const { return degrees_.size(); }
    std::uint64_t edge_count() const { return edge_count_; }
    std::uint64_t total_degree() const { return pa_targets_.size(); }

    std::uint64_t degree(NodeId v) const;
    const std::vector<std::uint32_t>& degrees() const { return degrees_; }

    bool retains_edges() const { return keep_edges_; }
    // Endpoint pairs in insertion order; empty unless constructed with
    // keep_edges.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

    // Returns the id of the new node, which equals the old node count.
    NodeId add_node();

    // Inserts an undirected edge. Throws SelfLoopError when u == v and
    // std::out_of_range when either endpoint does not exist.
    void add_edge(NodeId u, NodeId v);

    // Node drawn with probability degree/total_degree. Throws
    // DegenerateGraphError when the graph has no edges.
    NodeId sample_preferential(RngStream& rng) const;

    // Ordered pair of distinct nodes, all pairs equally likely. Requires at
    // least two nodes.
    std::pair<NodeId, NodeId> sample_uniform_pair(RngStream& rng) const;

  private:
    std::vector<std::uint32_t> degrees_;
    std::vector<NodeId> pa_targets_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::uint64_t edge_count_ = 0;
    bool keep_edges_ = false;
};

DegreeHistogram degree_histogram(const Graph& g);

} // namespace wsnet
