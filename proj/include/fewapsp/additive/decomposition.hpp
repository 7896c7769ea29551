#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fewapsp/additive/sumset.hpp"

namespace fewapsp {

// X_i = X_{i,1} ⊔ ... ⊔ X_{i,L} ⊔ X'_i with X_{i,l} ⊆ s_{i,l} + S_l.
// Only the iterations actually run are stored.
struct SideDecomposition {
    std::vector<IntSet> cores;                 // S_l
    std::vector<std::vector<IntSet>> parts;    // parts[i][l]
    std::vector<std::vector<std::int64_t>> shifts;  // shifts[i][l]
    std::vector<IntSet> remainder;             // X'_i
    std::size_t iterations = 0;
    bool exhausted = false;  // stopped by the iteration cap, not by low degree
};

struct Decomposition {
    SideDecomposition x_side;
    SideDecomposition y_side;
};

// Decomposes `sets` against `others` with popular-sum threshold d/delta and
// degree threshold |sets|/delta, for at most delta^2 iterations.
SideDecomposition decompose_side(const std::vector<IntSet>& sets, const std::vector<IntSet>& others,
                                 std::size_t d, std::size_t delta, Rng& rng, const PopularSumsConfig& cfg = {});

Decomposition popular_sum_decomposition(const std::vector<IntSet>& xs, const std::vector<IntSet>& ys,
                                        std::size_t d, std::size_t delta, Rng& rng,
                                        const PopularSumsConfig& cfg = {});

}  // namespace fewapsp
