#pragma once

#include <cstddef>
#include <vector>

#include "fewapsp/core/random.hpp"

namespace fewapsp {

// Levels S_0 = V, S_1, ..., S_L with L = ceil(log2 h); node ids ascending.
struct PivotHierarchy {
    std::vector<std::vector<std::size_t>> levels;
    std::vector<double> rates;
    std::size_t top() const { return levels.size() - 1; }
};

std::size_t ceil_log2(std::size_t x);

// S_l is an independent uniform sample at rate min(c * ln n * 2^-l, 1).
PivotHierarchy sample_pivots(std::size_t n, std::size_t h, Rng& rng, double sampling_constant = 10.0);

}  // namespace fewapsp
