#include "fewapsp/reductions/scaling.hpp"

#include "fewapsp/core/error.hpp"
#include "fewapsp/minplus/products.hpp"

namespace fewapsp {

namespace {

std::int64_t floor_half(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

WeightMatrix halve_entries(const WeightMatrix& m) {
    WeightMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).is_finite()) out(i, j) = Weight(floor_half(m(i, j).value()));
    return out;
}

Weight min_finite_entry(const WeightMatrix& m) {
    Weight best = Weight::pos_inf();
    for (const auto w : m.entries()) {
        if (w.is_neg_inf()) throw ParameterError("matrix entry is -inf");
        if (w.is_finite() && w < best) best = w;
    }
    return best;
}

Weight max_finite_entry(const WeightMatrix& m) {
    Weight best = Weight::neg_inf();
    for (const auto w : m.entries())
        if (w.is_finite() && w > best) best = w;
    return best;
}

WeightMatrix shift_entries(const WeightMatrix& m, std::int64_t s) {
    WeightMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).is_finite()) out(i, j) = Weight(checked_add(m(i, j).value(), -s));
    return out;
}

WeightMatrix support_product(const WeightMatrix& a, const WeightMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions differ");
    WeightMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a(i, k).is_finite()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j).is_finite()) out(i, j) = Weight(0);
        }
    return out;
}

WeightMatrix make_scaling_promise(const WeightMatrix& a, const WeightMatrix& b, const MinPlusFn& inner) {
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions differ");
    const Weight lo = std::min(min_finite_entry(a), min_finite_entry(b));
    if (lo.is_finite() && lo.value() < 0) throw ParameterError("scaling promise needs nonnegative entries");
    const WeightMatrix ha = halve_entries(a), hb = halve_entries(b);
    WeightMatrix c = inner ? inner(ha, hb) : min_plus_naive(ha, hb);
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            if (c(i, j).is_finite()) c(i, j) = Weight(checked_mul(2, c(i, j).value()));
    return c;
}

}  // namespace fewapsp
