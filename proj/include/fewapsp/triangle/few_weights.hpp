#pragma once

#include <cstddef>

#include "fewapsp/additive/bsg_cover.hpp"
#include "fewapsp/triangle/regularize.hpp"

namespace fewapsp {

struct FewWeightsConfig {
    double omega = 3.0;
    // Δ = largest power of two with Δ^{2^{c/ε}} <= n, unless delta > 0.
    double delta_exponent_constant = 1.0;
    std::size_t delta = 0;
    CoverConfig cover;
    RegularizeConfig regularize;
};

struct FewWeightsStats {
    RegularizeStats regularize;
    std::size_t pieces = 0;
    std::size_t listed_triples = 0;
    double epsilon = 0;
    std::size_t delta = 0;
};

std::size_t default_triangle_delta(std::size_t n, double epsilon, double c);
// K = ceil((n^{3-ω} / d)^{1/7}), at least 1.
std::size_t cover_parameter(std::size_t n, std::size_t d, double omega);

// Regularizes with ε = δ/14, solves every regular piece with the uniform-regular
// solver, and adds the listed triples.
TriangleReport aete_few_weights(const TriangleInstance& inst, std::size_t d, double delta_exp, PromiseSide side,
                                Rng& rng, const FewWeightsConfig& cfg = {}, FewWeightsStats* stats = nullptr);

}  // namespace fewapsp
