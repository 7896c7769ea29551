#include "fewapsp/reductions/instances.hpp"

#include <set>
#include <vector>

#include "fewapsp/core/error.hpp"
#include "fewapsp/reductions/gadgets.hpp"

namespace fewapsp {

namespace {

std::vector<std::int64_t> palette(std::size_t d, std::int64_t lo, std::int64_t hi, Rng& rng) {
    std::set<std::int64_t> s;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    while (s.size() < d && s.size() < span) s.insert(uniform_int(rng, lo, hi));
    return {s.begin(), s.end()};
}

// Each line (row, or column when by_cols) draws from its own palette.
WeightMatrix palette_matrix(std::size_t rows, std::size_t cols, std::size_t d, bool by_cols,
                            const PairGenOptions& opt, Rng& rng) {
    if (d == 0 || opt.lo > opt.hi) throw ParameterError("bad matrix generator parameters");
    WeightMatrix m(rows, cols);
    const std::size_t lines = by_cols ? cols : rows, len = by_cols ? rows : cols;
    for (std::size_t line = 0; line < lines; ++line) {
        const auto p = palette(d, opt.lo, opt.hi, rng);
        for (std::size_t t = 0; t < len; ++t) {
            if (uniform01(rng) < opt.hole_prob) continue;
            const auto w = p[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(p.size()) - 1))];
            (by_cols ? m(t, line) : m(line, t)) = Weight(w);
        }
    }
    return m;
}

}  // namespace

MatrixPair random_row_weight_pair(std::size_t rows, std::size_t inner, std::size_t cols, std::size_t d,
                                  const PairGenOptions& opt, Rng& rng) {
    WeightMatrix a = palette_matrix(rows, inner, d, false, opt, rng);
    WeightMatrix b = palette_matrix(inner, cols, d, true, opt, rng);
    return {std::move(a), std::move(b)};
}

MatrixPair random_column_weight_pair(std::size_t rows, std::size_t inner, std::size_t cols, std::size_t d,
                                     const PairGenOptions& opt, Rng& rng) {
    WeightMatrix a = palette_matrix(rows, inner, d, true, opt, rng);
    WeightMatrix b = palette_matrix(inner, cols, d, false, opt, rng);
    return {std::move(a), std::move(b)};
}

MatrixPair random_bounded_pair(std::size_t n, double epsilon, const PairGenOptions& opt, Rng& rng) {
    const auto p = bounded_gadget_params(n, epsilon);
    const auto s = static_cast<std::size_t>(p.range);
    WeightMatrix a = random_matrix(n, s, 0, p.range - 1, rng, opt.hole_prob);
    WeightMatrix b = random_matrix(s, n, 0, p.range - 1, rng, opt.hole_prob);
    return {std::move(a), std::move(b)};
}

}  // namespace fewapsp
