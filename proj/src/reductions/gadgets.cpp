#include "fewapsp/reductions/gadgets.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "fewapsp/core/error.hpp"
#include "fewapsp/reductions/scaling.hpp"

namespace fewapsp {

namespace {

constexpr std::int64_t kNoDetours = std::numeric_limits<std::int64_t>::max();

WeightMatrix decode_with(const WeightMatrix& dist, const std::vector<std::size_t>& sources,
                         const std::vector<std::size_t>& sinks, const std::vector<std::int64_t>& source_weight,
                         std::int64_t offset, std::int64_t max_genuine) {
    WeightMatrix out(sources.size(), sinks.size());
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = 0; j < sinks.size(); ++j) {
            const Weight w = dist(sources[i], sinks[j]);
            if (w.is_neg_inf()) throw SolverError("gadget distance is -inf");
            if (!w.is_finite()) continue;
            const std::int64_t v = checked_add(checked_add(w.value(), source_weight[i]), -offset);
            if (v <= max_genuine) out(i, j) = Weight(v);
        }
    return out;
}

void check_shapes(const WeightMatrix& a, const WeightMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions differ");
}

void add_edge(std::vector<Edge>& edges, std::size_t u, std::size_t v, std::int64_t w, bool undirected) {
    edges.push_back({u, v, w});
    if (undirected) edges.push_back({v, u, w});
}

}  // namespace

WeightMatrix decode_gadget(const EdgeGadget& gadget, const WeightMatrix& dist) {
    return decode_with(dist, gadget.sources, gadget.sinks, std::vector<std::int64_t>(gadget.sources.size(), 0),
                       gadget.offset, gadget.max_genuine);
}

WeightMatrix decode_gadget(const NodeGadget& gadget, const WeightMatrix& dist) {
    std::vector<std::int64_t> sw;
    for (auto s : gadget.sources) sw.push_back(gadget.graph.weight(s));
    return decode_with(dist, gadget.sources, gadget.sinks, sw, gadget.offset, gadget.max_genuine);
}

std::int64_t ceil_power(double base, double exponent) {
    const double x = std::pow(base, exponent);
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-9 * std::max(1.0, r)) return static_cast<std::int64_t>(r);
    return static_cast<std::int64_t>(std::ceil(x));
}

BoundedGadgetParams bounded_gadget_params(std::size_t n, double epsilon) {
    if (!(epsilon >= 0 && epsilon <= 0.5)) throw ParameterError("epsilon must lie in [0, 1/2]");
    const double nn = static_cast<double>(std::max<std::size_t>(n, 1));
    BoundedGadgetParams p;
    p.range = std::max<std::int64_t>(1, ceil_power(nn, 0.5 + epsilon));
    p.q = std::max<std::int64_t>(1, ceil_power(nn, 0.5 - epsilon));
    p.m = 2 * p.range;
    return p;
}

std::size_t bounded_gadget_weight_bound(std::size_t n, double epsilon) {
    return static_cast<std::size_t>(ceil_power(static_cast<double>(std::max<std::size_t>(n, 1)), 2 * epsilon)) + 1;
}

EdgeGadget gen_bounded_minplus_gadget(const WeightMatrix& a, const WeightMatrix& b, double epsilon, bool undirected) {
    check_shapes(a, b);
    const std::size_t rows = a.rows(), s = a.cols(), cols = b.cols();
    const BoundedGadgetParams p = bounded_gadget_params(rows, epsilon);
    for (const auto* m : {&a, &b})
        for (const auto w : m->entries()) {
            if (w.is_neg_inf()) throw ParameterError("gadget entries must not be -inf");
            if (w.is_finite() && (w.value() < 0 || w.value() >= p.range)) {
                throw ParameterError("entry " + w.to_string() + " outside [0, " + std::to_string(p.range) + ")");
            }
        }
    const auto q = static_cast<std::size_t>(p.q);
    const std::size_t path_len = 2 * q - 1;
    const std::size_t base = rows + cols;
    // x_{k,t} sits at offset q-1-t of path k, y_{k,t} at q-1+t; w_k = x_{k,0} = y_{k,0}.
    auto x_node = [&](std::size_t k, std::size_t t) { return base + k * path_len + (q - 1 - t); };
    auto y_node = [&](std::size_t k, std::size_t t) { return base + k * path_len + (q - 1 + t); };
    const std::int64_t extra = undirected ? p.m : 0;

    std::vector<Edge> edges;
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t t = 1; t < q; ++t) {
            add_edge(edges, x_node(k, t), x_node(k, t - 1), 1, undirected);
            add_edge(edges, y_node(k, t - 1), y_node(k, t), 1, undirected);
        }
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < s; ++k) {
            if (!a(i, k).is_finite()) continue;
            const std::int64_t v = a(i, k).value();
            add_edge(edges, i, x_node(k, static_cast<std::size_t>(v % p.q)), p.q * (v / p.q) + extra, undirected);
        }
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t j = 0; j < cols; ++j) {
            if (!b(k, j).is_finite()) continue;
            const std::int64_t v = b(k, j).value();
            add_edge(edges, y_node(k, static_cast<std::size_t>(v % p.q)), rows + j, p.q * (v / p.q) + extra,
                     undirected);
        }

    EdgeGadget g;
    g.graph = EdgeWeightedGraph(base + s * path_len, std::move(edges));
    for (std::size_t i = 0; i < rows; ++i) g.sources.push_back(i);
    for (std::size_t j = 0; j < cols; ++j) g.sinks.push_back(rows + j);
    g.undirected = undirected;
    g.offset = 2 * extra;
    g.max_genuine = undirected ? 2 * (p.range - 1) : kNoDetours;
    g.layer_sizes = {rows, s * path_len, cols};
    return g;
}

NodeGadget gen_column_weight_gadget(const WeightMatrix& a, const WeightMatrix& b, bool undirected) {
    check_shapes(a, b);
    const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
    if (min_finite_entry(a) < Weight(0) || min_finite_entry(b) < Weight(0)) {
        if (undirected) throw ParameterError("undirected column-weight gadget needs nonnegative entries");
    }
    const Weight top = std::max(max_finite_entry(a), max_finite_entry(b));
    const std::int64_t m = std::max<std::int64_t>(top.is_finite() ? top.value() : 0, 1);
    const std::int64_t extra = undirected ? 3 * m : 0;

    // Column value sets of A and row value sets of B, in node order.
    std::vector<std::map<std::int64_t, std::size_t>> k1(inner), k2(inner);
    for (std::size_t k = 0; k < inner; ++k) {
        for (std::size_t i = 0; i < rows; ++i)
            if (a(i, k).is_finite()) k1[k].emplace(a(i, k).value(), 0);
        for (std::size_t j = 0; j < cols; ++j)
            if (b(k, j).is_finite()) k2[k].emplace(b(k, j).value(), 0);
    }
    std::vector<std::int64_t> weight(rows, extra);
    std::size_t k1_size = 0, k2_size = 0;
    for (auto& layer : k1)
        for (auto& [z, id] : layer) {
            id = weight.size();
            weight.push_back(checked_add(z, extra));
            ++k1_size;
        }
    for (auto& layer : k2)
        for (auto& [y, id] : layer) {
            id = weight.size();
            weight.push_back(checked_add(y, extra));
            ++k2_size;
        }
    const std::size_t j0 = weight.size();
    weight.resize(j0 + cols, extra);

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    auto link = [&](std::size_t u, std::size_t v) {
        edges.emplace_back(u, v);
        if (undirected) edges.emplace_back(v, u);
    };
    for (std::size_t k = 0; k < inner; ++k)
        for (const auto& [z, u] : k1[k])
            for (const auto& [y, v] : k2[k]) link(u, v);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a(i, k).is_finite()) link(i, k1[k].at(a(i, k).value()));
    for (std::size_t k = 0; k < inner; ++k)
        for (std::size_t j = 0; j < cols; ++j)
            if (b(k, j).is_finite()) link(k2[k].at(b(k, j).value()), j0 + j);

    NodeGadget g;
    const std::size_t total = weight.size();
    g.graph = NodeWeightedGraph(total, std::move(weight), std::move(edges));
    for (std::size_t i = 0; i < rows; ++i) g.sources.push_back(i);
    for (std::size_t j = 0; j < cols; ++j) g.sinks.push_back(j0 + j);
    g.undirected = undirected;
    g.offset = 4 * extra;
    g.max_genuine = undirected ? 2 * m : kNoDetours;
    g.layer_sizes = {rows, k1_size, k2_size, cols};
    return g;
}

std::size_t distinct_edge_weights(const EdgeWeightedGraph& g) {
    std::set<std::int64_t> w;
    for (const auto& e : g.edges()) w.insert(e.w);
    return w.size();
}

}  // namespace fewapsp
