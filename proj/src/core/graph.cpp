#include "fewapsp/core/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

NodeWeightedGraph::NodeWeightedGraph(std::size_t n, std::vector<std::int64_t> node_weight,
                                     std::vector<std::pair<std::size_t, std::size_t>> edges)
    : weight_(std::move(node_weight)), edges_(std::move(edges)), out_(n), in_(n) {
    if (weight_.size() != n) throw ShapeError("node weight count does not match n");
    for (auto w : weight_) (void)Weight(w);  // range check
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        if (u >= n || v >= n) throw ShapeError("edge endpoint out of range");
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
}

bool NodeWeightedGraph::has_edge(std::size_t u, std::size_t v) const {
    const auto& o = out_[u];
    return std::binary_search(o.begin(), o.end(), v);
}

EdgeWeightedGraph::EdgeWeightedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), out_(n), in_(n) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& ed = edges_[e];
        if (ed.u >= n || ed.v >= n) throw ShapeError("edge endpoint out of range");
        (void)Weight(ed.w);
        out_[ed.u].push_back(e);
        in_[ed.v].push_back(e);
    }
}

std::size_t EdgeWeightedGraph::out_distinct(std::size_t v) const {
    std::vector<std::int64_t> ws;
    for (auto e : out_[v]) ws.push_back(edges_[e].w);
    std::sort(ws.begin(), ws.end());
    return static_cast<std::size_t>(std::unique(ws.begin(), ws.end()) - ws.begin());
}

std::size_t EdgeWeightedGraph::in_distinct(std::size_t v) const {
    std::vector<std::int64_t> ws;
    for (auto e : in_[v]) ws.push_back(edges_[e].w);
    std::sort(ws.begin(), ws.end());
    return static_cast<std::size_t>(std::unique(ws.begin(), ws.end()) - ws.begin());
}

DistinctAudit audit_distinct_weights(const EdgeWeightedGraph& g) {
    DistinctAudit a;
    for (std::size_t v = 0; v < g.n(); ++v) {
        a.max_out = std::max(a.max_out, g.out_distinct(v));
        a.max_in = std::max(a.max_in, g.in_distinct(v));
    }
    return a;
}

NodeWeightedGraph reverse_graph(const NodeWeightedGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(g.m());
    for (auto [u, v] : g.edges()) edges.emplace_back(v, u);
    return NodeWeightedGraph(g.n(), g.weights(), std::move(edges));
}

EdgeWeightedGraph reverse_graph(const EdgeWeightedGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.m());
    for (const auto& e : g.edges()) edges.push_back({e.v, e.u, e.w});
    return EdgeWeightedGraph(g.n(), std::move(edges));
}

WeightMatrix edge_matrix(const NodeWeightedGraph& g) {
    WeightMatrix m(g.n(), g.n());
    for (auto [u, v] : g.edges()) m(u, v) = Weight(g.weight(v));
    return m;
}

WeightMatrix edge_matrix(const EdgeWeightedGraph& g) {
    WeightMatrix m(g.n(), g.n());
    for (const auto& e : g.edges()) m(e.u, e.v) = std::min(m(e.u, e.v), Weight(e.w));
    return m;
}

namespace {
WeightMatrix with_zero_diagonal(WeightMatrix m) {
    for (std::size_t v = 0; v < m.rows(); ++v) m(v, v) = std::min(m(v, v), Weight(0));
    return m;
}
}  // namespace

WeightMatrix build_one_hop_matrix(const NodeWeightedGraph& g) { return with_zero_diagonal(edge_matrix(g)); }
WeightMatrix build_one_hop_matrix(const EdgeWeightedGraph& g) { return with_zero_diagonal(edge_matrix(g)); }

EdgeWeightedGraph to_edge_weighted(const NodeWeightedGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.m());
    for (auto [u, v] : g.edges()) edges.push_back({u, v, g.weight(v)});
    return EdgeWeightedGraph(g.n(), std::move(edges));
}

std::int64_t max_abs_weight(const NodeWeightedGraph& g) {
    std::int64_t w = 0;
    for (auto x : g.weights()) w = std::max(w, std::abs(x));
    return w;
}

std::int64_t max_abs_weight(const EdgeWeightedGraph& g) {
    std::int64_t w = 0;
    for (const auto& e : g.edges()) w = std::max(w, std::abs(e.w));
    return w;
}

}  // namespace fewapsp
