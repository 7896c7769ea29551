#include "fewapsp/core/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw ParameterError("uniform_int: empty range");
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

namespace {

void check_options(const GraphGenOptions& opt) {
    if (opt.edge_prob < 0 || opt.edge_prob > 1) throw ParameterError("edge_prob must be in [0,1]");
    if (opt.w_min > opt.w_max) throw ParameterError("w_min > w_max");
    if (opt.w_max > Weight::kInputBound || opt.w_min < -Weight::kInputBound) {
        throw ParameterError("weight range exceeds input bound");
    }
}

std::vector<std::pair<std::size_t, std::size_t>> random_edges(std::size_t n, const GraphGenOptions& opt, Rng& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v && !opt.allow_self_loops) continue;
            if (uniform01(rng) < opt.edge_prob) edges.emplace_back(u, v);
        }
    return edges;
}

// Disjoint node groups of size 2..4 for planted cycles.
std::vector<std::vector<std::size_t>> cycle_groups(std::size_t n, std::size_t count, Rng& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<std::size_t>> groups;
    std::size_t pos = 0;
    for (std::size_t c = 0; c < count; ++c) {
        auto len = static_cast<std::size_t>(uniform_int(rng, 2, 4));
        if (pos + len > n) break;
        groups.emplace_back(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                            perm.begin() + static_cast<std::ptrdiff_t>(pos + len));
        pos += len;
    }
    return groups;
}

}  // namespace

NodeWeightedGraph random_nw_graph(std::size_t n, const GraphGenOptions& opt, Rng& rng) {
    check_options(opt);
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = uniform_int(rng, opt.w_min, opt.w_max);
    auto edges = random_edges(n, opt, rng);
    for (const auto& grp : cycle_groups(n, opt.negative_cycles, rng)) {
        const auto magnitude = std::max<std::int64_t>(1, std::max(std::abs(opt.w_min), std::abs(opt.w_max)));
        for (auto v : grp) w[v] = -magnitude;
        for (std::size_t i = 0; i < grp.size(); ++i) edges.emplace_back(grp[i], grp[(i + 1) % grp.size()]);
    }
    return NodeWeightedGraph(n, std::move(w), std::move(edges));
}

EdgeWeightedGraph random_dweights_graph(std::size_t n, std::size_t d, const GraphGenOptions& opt, Rng& rng) {
    check_options(opt);
    if (d == 0) throw ParameterError("d must be positive");
    const auto di = static_cast<std::int64_t>(d);
    std::vector<std::int64_t> palette(d);
    for (auto& c : palette) c = uniform_int(rng, opt.w_min, opt.w_max);
    std::vector<std::size_t> alpha(n), beta(n);
    for (auto& a : alpha) a = static_cast<std::size_t>(uniform_int(rng, 0, di - 1));
    for (auto& b : beta) b = static_cast<std::size_t>(uniform_int(rng, 0, di - 1));
    auto pairs = random_edges(n, opt, rng);
    if (opt.negative_cycles > 0) {
        palette[0] = -std::max<std::int64_t>(1, std::max(std::abs(opt.w_min), std::abs(opt.w_max)));
        // Align beta so every cycle edge lands on palette slot 0.
        for (const auto& grp : cycle_groups(n, opt.negative_cycles, rng)) {
            for (std::size_t i = 0; i < grp.size(); ++i) {
                auto u = grp[i];
                auto v = grp[(i + 1) % grp.size()];
                beta[v] = (d - alpha[u] % d) % d;
                pairs.emplace_back(u, v);
            }
        }
    }
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, palette[(alpha[u] + beta[v]) % d]});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return EdgeWeightedGraph(n, std::move(edges));
}

EdgeWeightedGraph random_in_dweights_graph(std::size_t n, std::size_t d, const GraphGenOptions& opt, Rng& rng) {
    check_options(opt);
    if (d == 0) throw ParameterError("d must be positive");
    const auto di = static_cast<std::int64_t>(d);
    std::vector<std::vector<std::int64_t>> palette(n, std::vector<std::int64_t>(d));
    for (auto& p : palette)
        for (auto& c : p) c = uniform_int(rng, opt.w_min, opt.w_max);
    const auto neg = -std::max<std::int64_t>(1, std::max(std::abs(opt.w_min), std::abs(opt.w_max)));
    if (opt.negative_cycles > 0) {
        for (auto& p : palette) p[0] = neg;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : random_edges(n, opt, rng)) {
        edges.push_back({u, v, palette[v][static_cast<std::size_t>(uniform_int(rng, 0, di - 1))]});
    }
    for (const auto& grp : cycle_groups(n, opt.negative_cycles, rng)) {
        for (std::size_t i = 0; i < grp.size(); ++i) edges.push_back({grp[i], grp[(i + 1) % grp.size()], neg});
    }
    return EdgeWeightedGraph(n, std::move(edges));
}

WeightMatrix random_matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi, Rng& rng,
                           double hole_prob, Weight hole) {
    if (hi > Weight::kInputBound || lo < -Weight::kInputBound) throw ParameterError("entry range exceeds input bound");
    WeightMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = (hole_prob > 0 && uniform01(rng) < hole_prob) ? hole : Weight(uniform_int(rng, lo, hi));
        }
    return m;
}

}  // namespace fewapsp
