#include "fewapsp/apsp/negative_cycles.hpp"

#include <algorithm>
#include <map>

namespace fewapsp {

std::vector<std::size_t> strongly_connected_components(std::size_t n,
                                                       const std::vector<std::vector<std::size_t>>& out,
                                                       std::size_t& count) {
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset), stack;
    std::vector<bool> on_stack(n, false);
    std::size_t next = 0;
    count = 0;
    // Iterative Tarjan: frame = (vertex, next child position).
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = next++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < out[v].size()) {
                const std::size_t w = out[v][pos++];
                if (index[w] == kUnset) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) {
                auto parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::size_t w = kUnset;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = count;
                } while (w != done);
                ++count;
            }
        }
    }
    return comp;
}

bool CycleRemap::identity() const {
    for (std::size_t v = 0; v < node_map.size(); ++v)
        if (node_map[v] != v) return false;
    return node_map.size() == negative.size() &&
           std::none_of(negative.begin(), negative.end(), [](bool b) { return b; });
}

WeightMatrix CycleRemap::decode(const WeightMatrix& contracted) const {
    const std::size_t n = node_map.size();
    WeightMatrix out(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            const Weight d = contracted(node_map[u], node_map[v]);
            if (d.is_pos_inf()) continue;
            if (d.is_neg_inf() || negative[node_map[u]] || d.value() < threshold) {
                out(u, v) = Weight::neg_inf();
            } else {
                out(u, v) = d;
            }
        }
    return out;
}

namespace {

// Arc list view shared by both graph kinds.
struct Arc {
    std::size_t u, v;
    std::int64_t w;
};

// True if the arcs restricted to `members` (all in one SCC) contain a
// negative cycle. Bellman-Ford from a virtual zero source.
bool has_negative_cycle(const std::vector<Arc>& arcs, std::size_t n) {
    std::vector<std::int64_t> dist(n, 0);
    for (std::size_t round = 0; round < n; ++round) {
        bool changed = false;
        for (const auto& a : arcs) {
            const auto nd = checked_add(dist[a.u], a.w);
            if (nd < dist[a.v]) {
                dist[a.v] = nd;
                changed = true;
            }
        }
        if (!changed) return false;
    }
    return true;
}

struct Contraction {
    CycleRemap remap;
    std::size_t new_n = 0;
    std::vector<std::size_t> comp;
    std::vector<bool> comp_negative;
};

Contraction contract(std::size_t n, const std::vector<Arc>& arcs, std::int64_t w_max) {
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& a : arcs) out[a.u].push_back(a.v);
    std::size_t count = 0;
    Contraction c;
    c.comp = strongly_connected_components(n, out, count);

    std::vector<std::vector<std::size_t>> members(count);
    for (std::size_t v = 0; v < n; ++v) members[c.comp[v]].push_back(v);
    std::vector<std::vector<Arc>> internal(count);
    for (const auto& a : arcs)
        if (c.comp[a.u] == c.comp[a.v]) internal[c.comp[a.u]].push_back(a);
    c.comp_negative.assign(count, false);
    for (std::size_t k = 0; k < count; ++k) {
        if (internal[k].empty()) continue;
        std::vector<std::size_t> local(n);
        for (std::size_t i = 0; i < members[k].size(); ++i) local[members[k][i]] = i;
        std::vector<Arc> loc;
        for (const auto& a : internal[k]) loc.push_back({local[a.u], local[a.v], a.w});
        c.comp_negative[k] = has_negative_cycle(loc, members[k].size());
    }

    // Ordinary nodes keep their relative order; each negative component
    // becomes one node placed at its smallest member's position.
    c.remap.node_map.assign(n, 0);
    std::vector<std::size_t> comp_node(count, static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < n; ++v) {
        const auto k = c.comp[v];
        if (c.comp_negative[k]) {
            if (comp_node[k] == static_cast<std::size_t>(-1)) {
                comp_node[k] = c.new_n++;
                c.remap.negative.push_back(true);
            }
            c.remap.node_map[v] = comp_node[k];
        } else {
            c.remap.node_map[v] = c.new_n++;
            c.remap.negative.push_back(false);
        }
    }
    c.remap.threshold = -checked_mul(w_max, static_cast<std::int64_t>(n));
    return c;
}

}  // namespace

CycleFreeGraph<NodeWeightedGraph> eliminate_negative_cycles(const NodeWeightedGraph& g) {
    const std::size_t n = g.n();
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges()) arcs.push_back({u, v, g.weight(v)});
    const std::int64_t w_max = max_abs_weight(g);
    Contraction c = contract(n, arcs, w_max);
    const std::int64_t heavy = -checked_mul(2 * w_max, static_cast<std::int64_t>(n));

    std::vector<std::int64_t> w(c.new_n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const auto nv = c.remap.node_map[v];
        w[nv] = c.remap.negative[nv] ? heavy : g.weight(v);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [u, v] : g.edges()) {
        const auto nu = c.remap.node_map[u];
        const auto nv = c.remap.node_map[v];
        if (nu == nv && c.remap.negative[nu]) continue;
        edges.emplace_back(nu, nv);
    }
    return {NodeWeightedGraph(c.new_n, std::move(w), std::move(edges)), std::move(c.remap)};
}

CycleFreeGraph<EdgeWeightedGraph> eliminate_negative_cycles(const EdgeWeightedGraph& g) {
    const std::size_t n = g.n();
    std::vector<Arc> arcs;
    for (const auto& e : g.edges()) arcs.push_back({e.u, e.v, e.w});
    const std::int64_t w_max = max_abs_weight(g);
    Contraction c = contract(n, arcs, w_max);
    const std::int64_t heavy = -checked_mul(2 * w_max, static_cast<std::int64_t>(n));

    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> lightest_out;
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        const auto nu = c.remap.node_map[e.u];
        const auto nv = c.remap.node_map[e.v];
        const bool neg_u = c.remap.negative[nu];
        const bool neg_v = c.remap.negative[nv];
        if (nu == nv && neg_u) continue;
        if (neg_v) {
            edges.push_back({nu, nv, heavy});
        } else if (neg_u) {
            auto [it, fresh] = lightest_out.try_emplace({nu, nv}, e.w);
            if (!fresh) it->second = std::min(it->second, e.w);
        } else {
            edges.push_back({nu, nv, e.w});
        }
    }
    for (const auto& [key, w] : lightest_out) edges.push_back({key.first, key.second, w});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return {EdgeWeightedGraph(c.new_n, std::move(edges)), std::move(c.remap)};
}

}  // namespace fewapsp
