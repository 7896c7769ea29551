#include "fewapsp/apsp/oracle.hpp"

#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace fewapsp {

namespace {

struct Arc {
    std::size_t to;
    std::int64_t w;
};

using Adjacency = std::vector<std::vector<Arc>>;

void dijkstra(const Adjacency& adj, std::size_t s, WeightMatrix& out) {
    const std::size_t n = adj.size();
    constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(n, kInf);
    using Item = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0;
    pq.emplace(0, s);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[u]) continue;
        for (const auto& a : adj[u]) {
            const auto nd = checked_add(d, a.w);
            if (nd < dist[a.to]) {
                dist[a.to] = nd;
                pq.emplace(nd, a.to);
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (dist[v] != kInf) out(s, v) = Weight(dist[v]);
}

void bellman_ford(const Adjacency& adj, std::size_t s, WeightMatrix& out) {
    const std::size_t n = adj.size();
    constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(n, kInf);
    dist[s] = 0;
    for (std::size_t round = 0; round + 1 < n; ++round) {
        bool changed = false;
        for (std::size_t u = 0; u < n; ++u) {
            if (dist[u] == kInf) continue;
            for (const auto& a : adj[u]) {
                const auto nd = checked_add(dist[u], a.w);
                if (nd < dist[a.to]) {
                    dist[a.to] = nd;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    // Vertices still relaxable sit on or behind a negative cycle; everything
    // they reach is -inf.
    std::vector<bool> neg(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t u = 0; u < n; ++u) {
        if (dist[u] == kInf) continue;
        for (const auto& a : adj[u]) {
            if (checked_add(dist[u], a.w) < dist[a.to] && !neg[a.to]) {
                neg[a.to] = true;
                stack.push_back(a.to);
            }
        }
    }
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (const auto& a : adj[u])
            if (!neg[a.to]) {
                neg[a.to] = true;
                stack.push_back(a.to);
            }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (neg[v]) out(s, v) = Weight::neg_inf();
        else if (dist[v] != kInf) out(s, v) = Weight(dist[v]);
    }
}

WeightMatrix solve(const Adjacency& adj) {
    const std::size_t n = adj.size();
    bool nonnegative = true;
    for (const auto& arcs : adj)
        for (const auto& a : arcs) nonnegative &= a.w >= 0;
    WeightMatrix out(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        if (nonnegative) dijkstra(adj, s, out);
        else bellman_ford(adj, s, out);
    }
    return out;
}

}  // namespace

WeightMatrix apsp_oracle(const NodeWeightedGraph& g) {
    Adjacency adj(g.n());
    for (auto [u, v] : g.edges()) adj[u].push_back({v, g.weight(v)});
    return solve(adj);
}

WeightMatrix apsp_oracle(const EdgeWeightedGraph& g) {
    Adjacency adj(g.n());
    for (const auto& e : g.edges()) adj[e.u].push_back({e.v, e.w});
    return solve(adj);
}

}  // namespace fewapsp
