#include "fewapsp/minplus/hop_product.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "fewapsp/core/error.hpp"
#include "fewapsp/minplus/products.hpp"

namespace fewapsp {

std::vector<std::size_t> HopResult::path(std::size_t i, std::size_t j) const {
    if (!has_witnesses) throw Error("hop product was computed without witnesses");
    std::size_t row = left ? j : i;
    std::size_t v = left ? i : j;
    if (!value(i, j).is_finite()) return {};
    std::vector<std::size_t> out;
    for (std::size_t t = pred.size(); t-- > 0;) {
        const std::int32_t p = pred[t][row * frame_cols + v];
        if (p < 0) continue;
        out.push_back(v);
        v = static_cast<std::size_t>(p);
    }
    out.push_back(v);
    if (!left) std::reverse(out.begin(), out.end());
    return out;
}

namespace {

using Step = std::function<ProductResult(const WeightMatrix&)>;

HopResult iterate(WeightMatrix a, const Step& step, std::size_t h, const HopOptions& opt) {
    HopResult r;
    r.has_witnesses = opt.witnesses;
    r.frame_cols = a.cols();
    for (std::size_t t = 0; t < h; ++t) {
        const ProductResult p = step(a);
        std::vector<std::int32_t> pred;
        if (opt.witnesses) pred.assign(a.rows() * a.cols(), -1);
        bool changed = false;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t v = 0; v < a.cols(); ++v) {
                if (p.value(i, v) < a(i, v)) {
                    a(i, v) = p.value(i, v);
                    if (opt.witnesses) pred[i * a.cols() + v] = static_cast<std::int32_t>(p.witness(i, v));
                    changed = true;
                }
            }
        }
        if (!changed) break;
        if (opt.witnesses) r.pred.push_back(std::move(pred));
    }
    r.value = std::move(a);
    return r;
}

void check_hop_input(const WeightMatrix& a, std::size_t n, bool right) {
    if ((right ? a.cols() : a.rows()) != n) throw ShapeError("hop product: matrix does not match graph size");
    if (n > static_cast<std::size_t>(INT32_MAX)) throw ShapeError("graph too large for witness tables");
    for (auto w : a.entries()) {
        if (w.is_bot() || w.is_neg_inf()) throw ParameterError("hop product input must be finite or +inf");
    }
}

BoolMatrix adjacency(const NodeWeightedGraph& g) {
    BoolMatrix b(g.n(), g.n());
    for (auto [u, v] : g.edges()) b.set(u, v);
    return b;
}

HopResult transposed_left(HopResult inner) {
    inner.value = inner.value.transposed();
    inner.left = true;
    return inner;
}

}  // namespace

HopResult hop_bounded_product(const WeightMatrix& a, const NodeWeightedGraph& g, std::size_t h,
                              const HopOptions& opt) {
    check_hop_input(a, g.n(), true);
    const BoolMatrix adj = adjacency(g);
    Step step = [&](const WeightMatrix& cur) {
        ProductResult p = boolean_min_plus(cur, adj, opt.delta);
        for (std::size_t i = 0; i < p.value.rows(); ++i)
            for (std::size_t v = 0; v < p.value.cols(); ++v)
                if (p.value(i, v).is_finite()) p.value(i, v) += Weight(g.weight(v));
        return p;
    };
    return iterate(a, step, h, opt);
}

HopResult hop_bounded_product_left(const NodeWeightedGraph& g, const WeightMatrix& a, std::size_t h,
                                   const HopOptions& opt) {
    check_hop_input(a, g.n(), false);
    WeightMatrix shifted = a.transposed();
    for (std::size_t s = 0; s < shifted.rows(); ++s)
        for (std::size_t u = 0; u < shifted.cols(); ++u)
            if (shifted(s, u).is_finite()) shifted(s, u) += Weight(g.weight(u));
    HopResult r = transposed_left(hop_bounded_product(shifted, reverse_graph(g), h, opt));
    for (std::size_t v = 0; v < r.value.rows(); ++v)
        for (std::size_t s = 0; s < r.value.cols(); ++s)
            if (r.value(v, s).is_finite()) r.value(v, s) += Weight(-g.weight(v));
    return r;
}

HopResult hop_bounded_product_edge(const WeightMatrix& a, const EdgeWeightedGraph& g, std::size_t d, std::size_t h,
                                   const HopOptions& opt) {
    check_hop_input(a, g.n(), true);
    const auto audit = audit_distinct_weights(g);
    if (audit.max_in > d) {
        throw AuditError("a node has " + std::to_string(audit.max_in) + " distinct incoming weights, promised " +
                         std::to_string(d));
    }
    const WeightMatrix e = edge_matrix(g);
    Step step = [&](const WeightMatrix& cur) { return d_weights_min_plus(cur, e, std::max<std::size_t>(d, 1), opt.delta); };
    return iterate(a, step, h, opt);
}

HopResult hop_bounded_product_edge_left(const EdgeWeightedGraph& g, const WeightMatrix& a, std::size_t h,
                                        const HopOptions& opt) {
    check_hop_input(a, g.n(), false);
    const EdgeWeightedGraph rg = reverse_graph(g);
    const std::size_t d = std::max<std::size_t>(1, audit_distinct_weights(rg).max_in);
    return transposed_left(hop_bounded_product_edge(a.transposed(), rg, d, h, opt));
}

}  // namespace fewapsp
