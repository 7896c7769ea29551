#pragma once

#include <cstddef>
#include <cstdint>

#include "fewapsp/core/random.hpp"
#include "fewapsp/triangle/instance.hpp"

namespace fewapsp {

struct TriangleGenOptions {
    std::int64_t lo = 0;
    std::int64_t hi = 6;
    double hole_prob = 0.2;
};

// The promised side draws each line from its own palette of d values in
// [lo, hi]; the other two matrices are uniform in [lo, hi] (C in [2lo, 2hi]).
TriangleInstance random_dweights_instance(std::size_t n, std::size_t d, PromiseSide side, const TriangleGenOptions& opt,
                                          Rng& rng);

// M[i,k] = W[(π(i) + σ(k)) mod d] with holes: d-uniform and ceil(n/d)-regular.
// C's palette is drawn from sums of the A and B palettes.
TriangleInstance random_uniform_regular_instance(std::size_t n, std::size_t d, const TriangleGenOptions& opt, Rng& rng);

// Forces (i, k, j) to be an exact triangle by overwriting C[i,j] (and filling
// bot A or B entries with lo).
void plant_triangle(TriangleInstance& inst, std::size_t i, std::size_t k, std::size_t j, std::int64_t lo = 0);

}  // namespace fewapsp
