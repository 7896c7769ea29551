#include "fewapsp/apsp/hop_engine.hpp"

#include <string>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

HopResult NodeWeightedEngine::right(const WeightMatrix& a, std::size_t h, bool witnesses) const {
    return hop_bounded_product(a, g_, h, {.delta = delta_, .witnesses = witnesses});
}

HopResult NodeWeightedEngine::left(const WeightMatrix& a, std::size_t h, bool witnesses) const {
    return hop_bounded_product_left(g_, a, h, {.delta = delta_, .witnesses = witnesses});
}

std::int64_t NodeWeightedEngine::path_weight(const std::vector<std::size_t>& path) const {
    std::int64_t w = 0;
    for (std::size_t t = 1; t < path.size(); ++t) w = checked_add(w, g_.weight(path[t]));
    return w;
}

EdgeWeightedEngine::EdgeWeightedEngine(const EdgeWeightedGraph& g, std::size_t d, std::size_t delta)
    : g_(g), d_(d), delta_(delta), e_(edge_matrix(g)) {
    const auto audit = audit_distinct_weights(g);
    if (audit.max_in > d) {
        throw AuditError("graph has a node with " + std::to_string(audit.max_in) +
                         " distinct incoming weights, promised at most " + std::to_string(d));
    }
}

HopResult EdgeWeightedEngine::right(const WeightMatrix& a, std::size_t h, bool witnesses) const {
    return hop_bounded_product_edge(a, g_, d_, h, {.delta = delta_, .witnesses = witnesses});
}

HopResult EdgeWeightedEngine::left(const WeightMatrix& a, std::size_t h, bool witnesses) const {
    return hop_bounded_product_edge_left(g_, a, h, {.delta = delta_, .witnesses = witnesses});
}

std::int64_t EdgeWeightedEngine::path_weight(const std::vector<std::size_t>& path) const {
    std::int64_t w = 0;
    for (std::size_t t = 1; t < path.size(); ++t) w = checked_add(w, e_(path[t - 1], path[t]).value());
    return w;
}

CustomProductEngine::CustomProductEngine(const EdgeWeightedGraph& g, MinPlusFn product)
    : product_(std::move(product)), e_(edge_matrix(g)), et_(e_.transposed()) {}

HopResult CustomProductEngine::sweep(const WeightMatrix& a0, const WeightMatrix& e, std::size_t h,
                                     bool witnesses) const {
    HopResult r;
    r.has_witnesses = witnesses;
    r.frame_cols = a0.cols();
    WeightMatrix a = a0;
    for (std::size_t t = 0; t < h; ++t) {
        const WeightMatrix p = product_(a, e);
        if (p.rows() != a.rows() || p.cols() != a.cols()) throw SolverError("custom product returned wrong shape");
        std::vector<std::int32_t> pred;
        if (witnesses) pred.assign(a.rows() * a.cols(), -1);
        bool changed = false;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t v = 0; v < a.cols(); ++v) {
                if (!(p(i, v) < a(i, v))) continue;
                if (witnesses) {
                    std::int32_t k = -1;
                    for (std::size_t u = 0; u < a.cols() && k < 0; ++u) {
                        if (a(i, u).is_finite() && e(u, v).is_finite() && a(i, u) + e(u, v) == p(i, v)) {
                            k = static_cast<std::int32_t>(u);
                        }
                    }
                    if (k < 0) throw SolverError("custom product value has no witness");
                    pred[i * a.cols() + v] = k;
                }
                changed = true;
            }
        if (!changed) break;
        a = entrywise_min(a, p);
        if (witnesses) r.pred.push_back(std::move(pred));
    }
    r.value = std::move(a);
    return r;
}

HopResult CustomProductEngine::right(const WeightMatrix& a, std::size_t h, bool witnesses) const {
    return sweep(a, e_, h, witnesses);
}

HopResult CustomProductEngine::left(const WeightMatrix& a, std::size_t h, bool witnesses) const {
    HopResult r = sweep(a.transposed(), et_, h, witnesses);
    r.value = r.value.transposed();
    r.left = true;
    return r;
}

std::int64_t CustomProductEngine::path_weight(const std::vector<std::size_t>& path) const {
    std::int64_t w = 0;
    for (std::size_t t = 1; t < path.size(); ++t) w = checked_add(w, e_(path[t - 1], path[t]).value());
    return w;
}

}  // namespace fewapsp
