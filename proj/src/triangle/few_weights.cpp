#include "fewapsp/triangle/few_weights.hpp"

#include <cmath>

#include "fewapsp/core/error.hpp"
#include "fewapsp/triangle/orientation.hpp"
#include "fewapsp/triangle/uniform_regular.hpp"

namespace fewapsp {

std::size_t default_triangle_delta(std::size_t n, double epsilon, double c) {
    // Δ^{2^{c/ε}} <= n  <=>  log2 Δ <= log2 n / 2^{c/ε}.
    const double budget = std::log2(static_cast<double>(std::max<std::size_t>(n, 1))) / std::exp2(c / epsilon);
    const auto bits = static_cast<std::size_t>(std::floor(budget));
    return std::size_t{1} << std::min<std::size_t>(bits, 20);
}

std::size_t cover_parameter(std::size_t n, std::size_t d, double omega) {
    const double k = std::pow(std::pow(static_cast<double>(n), 3.0 - omega) / static_cast<double>(std::max<std::size_t>(d, 1)),
                              1.0 / 7.0);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(k - 1e-9)));
}

TriangleReport aete_few_weights(const TriangleInstance& inst, std::size_t d, double delta_exp, PromiseSide side,
                                Rng& rng, const FewWeightsConfig& cfg, FewWeightsStats* stats) {
    if (!(delta_exp > 0)) throw ParameterError("delta must be positive");
    FewWeightsStats local;
    FewWeightsStats& st = stats ? *stats : local;
    st = {};
    const std::size_t n = inst.n();
    st.epsilon = delta_exp / 14.0;
    st.delta = cfg.delta > 0 ? cfg.delta : default_triangle_delta(n, st.epsilon, cfg.delta_exponent_constant);

    TriangleInstance base = inst;
    base.orientation = Orientation::identity;
    const RegularizeResult reg = regularize(base, d, st.delta, st.epsilon, side, rng, cfg.regularize);
    st.regularize = reg.stats;
    st.pieces = reg.pieces.size();
    st.listed_triples = reg.triples.size();

    TriangleReport report(n);
    for (const auto& t : reg.triples) report.mark(t.i, t.j, static_cast<std::int64_t>(t.k));
    for (const auto& piece : reg.pieces) {
        // Rotations preserve uniformity and regularity, so each piece is solved
        // in the input's orientation where its pairs are the input's pairs.
        const TriangleInstance upright = to_original_orientation(piece.inst);
        report.merge(aete_uniform_regular(upright, piece.d, cover_parameter(n, piece.d, cfg.omega), rng, cfg.cover));
    }
    return report;
}

}  // namespace fewapsp
