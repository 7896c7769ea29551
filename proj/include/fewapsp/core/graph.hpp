#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

// Directed graph with a finite weight on every node. A path's weight sums the
// node weights of every vertex except the first one.
class NodeWeightedGraph {
public:
    NodeWeightedGraph() = default;
    NodeWeightedGraph(std::size_t n, std::vector<std::int64_t> node_weight,
                      std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t n() const { return weight_.size(); }
    std::size_t m() const { return edges_.size(); }
    std::int64_t weight(std::size_t v) const { return weight_[v]; }
    const std::vector<std::int64_t>& weights() const { return weight_; }
    // Sorted, duplicate-free.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& out(std::size_t u) const { return out_[u]; }
    const std::vector<std::size_t>& in(std::size_t v) const { return in_[v]; }
    bool has_edge(std::size_t u, std::size_t v) const;

    friend bool operator==(const NodeWeightedGraph& a, const NodeWeightedGraph& b) {
        return a.weight_ == b.weight_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::int64_t> weight_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

struct Edge {
    std::size_t u;
    std::size_t v;
    std::int64_t w;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed graph with weighted edges. Parallel edges are kept; only the
// lightest one matters for distances.
class EdgeWeightedGraph {
public:
    EdgeWeightedGraph() = default;
    EdgeWeightedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    // Sorted by (u, v, w).
    const std::vector<Edge>& edges() const { return edges_; }
    // Indices into edges().
    const std::vector<std::size_t>& out(std::size_t u) const { return out_[u]; }
    const std::vector<std::size_t>& in(std::size_t v) const { return in_[v]; }

    std::size_t out_distinct(std::size_t v) const;
    std::size_t in_distinct(std::size_t v) const;

    friend bool operator==(const EdgeWeightedGraph& a, const EdgeWeightedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

struct DistinctAudit {
    std::size_t max_out = 0;
    std::size_t max_in = 0;
};

DistinctAudit audit_distinct_weights(const EdgeWeightedGraph& g);

NodeWeightedGraph reverse_graph(const NodeWeightedGraph& g);
EdgeWeightedGraph reverse_graph(const EdgeWeightedGraph& g);

// D^{<=1}: [u,v] = w(v) (node-weighted) or min parallel w(u,v) for an edge,
// 0 on the diagonal (or a lighter negative self-loop), +inf elsewhere.
WeightMatrix build_one_hop_matrix(const NodeWeightedGraph& g);
WeightMatrix build_one_hop_matrix(const EdgeWeightedGraph& g);

// Edge-only weight matrix: like the one-hop matrix but without the implicit
// zero diagonal.
WeightMatrix edge_matrix(const NodeWeightedGraph& g);
WeightMatrix edge_matrix(const EdgeWeightedGraph& g);

// Re-encode with w(u,v) = w(v); every node then has a single incoming weight.
EdgeWeightedGraph to_edge_weighted(const NodeWeightedGraph& g);

// Largest absolute weight in the graph (0 for an empty graph).
std::int64_t max_abs_weight(const NodeWeightedGraph& g);
std::int64_t max_abs_weight(const EdgeWeightedGraph& g);

}  // namespace fewapsp
